#pragma once

// Cellular isotropy groupoid of a split complex: one stabilizer subgroup
// per orbit-space cell, with face inclusions along the quotient edges.

#include "eqb/complex.hpp"

namespace eqb {

struct FaceInclusion {
  int edge_cell = 0;    // edge orbit
  int vertex_cell = 0;  // endpoint vertex orbit
  bool included = false;
};

/// Per orbit-space cell, the stabilizer of the section image.  For the five
/// families every edge group is trivial and every vertex group is cyclic;
/// construction enforces both.
struct IsotropyGroupoid {
  OrbitGraph orbits;
  std::vector<std::vector<int>> vertex_group;  // members, per vertex orbit
  std::vector<int> vertex_group_order;
  std::vector<int> vertex_group_generator;     // canonical cyclic generator
  std::vector<std::vector<int>> edge_group;    // members, per edge orbit
  std::vector<FaceInclusion> faces;

  const FiniteGroup& gamma() const { return orbits.complex.group; }
  int num_vertex_cells() const { return static_cast<int>(vertex_group.size()); }
  int num_edge_cells() const { return static_cast<int>(edge_group.size()); }
};

struct GroupoidReport {
  bool cellular = true;
  bool face_compatible = true;
  bool locally_maximal = true;
  std::vector<int> vertex_orders;          // per vertex orbit, in orbit order
  std::vector<int> signature;              // the same orders, sorted
  std::vector<int> expected_factors;       // product factors named for this family
  bool matches_expected = false;           // computed distinct orders vs expected
  std::vector<std::string> notes;
};

inline IsotropyGroupoid isotropy_groupoid(const OrbitGraph& a) {
  IsotropyGroupoid g;
  g.orbits = a;
  const auto& gamma = g.orbits.complex.group;
  for (int o = 0; o < a.num_vertex_orbits(); ++o) {
    const auto& stab = a.vertex_stab[o];
    int gen = 0;
    if (!subgroup_is_cyclic(gamma, stab, &gen))
      throw std::runtime_error("isotropy_groupoid: vertex group " +
                               std::to_string(o) + " is not cyclic");
    g.vertex_group.push_back(stab);
    g.vertex_group_order.push_back(static_cast<int>(stab.size()));
    g.vertex_group_generator.push_back(gen);
  }
  for (int o = 0; o < a.num_edge_orbits(); ++o) {
    if (a.edge_stab[o].size() != 1)
      throw std::runtime_error("isotropy_groupoid: edge group " +
                               std::to_string(o) + " is not trivial");
    g.edge_group.push_back(a.edge_stab[o]);
    for (int side = 0; side < 2; ++side) {
      int vcell = a.quotient_edges[o][side];
      bool inc = true;
      for (int x : a.edge_stab[o])
        if (!std::binary_search(g.vertex_group[vcell].begin(),
                                g.vertex_group[vcell].end(), x))
          inc = false;
      g.faces.push_back({o, vcell, inc});
    }
  }
  return g;
}

/// The per-family factor orders claimed by the product formulas.  The
/// icosahedral list famously disagrees with the stabilizers the action
/// actually produces; validate_groupoid surfaces that instead of trusting
/// the list.
inline std::vector<int> expected_factor_orders(Family family, int n) {
  switch (family) {
    case Family::Cyclic: return {n, n};
    case Family::Dihedral: return {2, 2, n};
    case Family::Tetrahedral: return {2, 3};
    case Family::Octahedral: return {2, 3, 4};
    case Family::Icosahedral: return {3, 4, 5};
  }
  return {};
}

inline GroupoidReport validate_groupoid(const IsotropyGroupoid& g) {
  GroupoidReport r;
  r.vertex_orders = g.vertex_group_order;
  r.signature = r.vertex_orders;
  std::sort(r.signature.begin(), r.signature.end());

  for (const auto& f : g.faces)
    if (!f.included) r.face_compatible = false;
  r.locally_maximal = r.face_compatible;
  for (int o = 0; o < g.num_edge_cells(); ++o)
    if (g.edge_group[o].size() != 1) r.cellular = false;

  const auto& gamma = g.gamma();
  r.expected_factors = expected_factor_orders(gamma.family, gamma.n);
  std::vector<int> expected_sorted = r.expected_factors;
  std::sort(expected_sorted.begin(), expected_sorted.end());
  expected_sorted.erase(std::unique(expected_sorted.begin(), expected_sorted.end()),
                        expected_sorted.end());
  std::vector<int> distinct = r.signature;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  r.matches_expected = (distinct == expected_sorted);
  if (!r.matches_expected) {
    std::string msg = "computed stabilizer orders {";
    for (size_t i = 0; i < distinct.size(); ++i)
      msg += (i ? "," : "") + std::to_string(distinct[i]);
    msg += "} differ from the family's stated factor list {";
    for (size_t i = 0; i < expected_sorted.size(); ++i)
      msg += (i ? "," : "") + std::to_string(expected_sorted[i]);
    msg += "}; the computed orders are normative";
    r.notes.push_back(msg);
  }
  if (r.signature.size() != r.expected_factors.size())
    r.notes.push_back("orbit graph has " + std::to_string(r.signature.size()) +
                      " vertex cells; the stated product has " +
                      std::to_string(r.expected_factors.size()) + " factors");
  return r;
}

}  // namespace eqb
