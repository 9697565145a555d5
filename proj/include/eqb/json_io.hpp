#pragma once

// JSON documents for every exported object.  All keys are emitted through
// nlohmann::json's ordered std::map storage, so identical inputs serialize
// byte-identically.

#include <cmath>

#include <nlohmann/json.hpp>

#include "eqb/classify.hpp"
#include "eqb/zmodule.hpp"

namespace eqb {

using json = nlohmann::json;

inline json group_json(const FiniteGroup& g) {
  json j;
  j["family"] = family_name(g.family);
  if (family_takes_n(g.family)) j["n"] = g.n;
  j["order"] = g.order;
  return j;
}

inline json complex_json(const GammaComplex& c) {
  json j;
  j["group"] = group_json(c.group);
  j["vertices"] = c.num_vertices;
  j["vertex_labels"] = c.vertex_labels;
  json edges = json::array();
  for (const auto& e : c.edges) edges.push_back({e[0], e[1]});
  j["edges"] = edges;
  json action;
  for (int s : c.group.generators) {
    std::string key = c.group.labels.empty() ? "g" + std::to_string(s)
                                             : c.group.labels[s];
    action[key] = {c.vertex_action[s], c.edge_action[s]};
  }
  j["action"] = action;
  return j;
}

/// Unit-sphere positions for plotting.  This is the one floating-point
/// export in the project; nothing downstream consumes it.
inline json coordinates_json(const GammaComplex& c) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pos(c.num_vertices, {0, 0, 0});
  auto normalize = [](std::array<double, 3> p) {
    double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (len == 0) return p;
    return std::array<double, 3>{p[0] / len, p[1] / len, p[2] / len};
  };
  const Family fam = c.group.family;
  if (fam == Family::Cyclic || fam == Family::Dihedral) {
    const int n = c.group.n;
    pos[0] = {0, 0, 1};
    pos[1] = {0, 0, -1};
    if (fam == Family::Dihedral)
      for (int i = 0; i < n; ++i) {
        double t = 2 * M_PI * i / n;
        pos[2 + i] = {std::cos(t), std::sin(t), 0};
        double m = 2 * M_PI * (i + 0.5) / n;
        pos[2 + n + i] = {std::cos(m), std::sin(m), 0};
      }
  } else {
    const auto& build = detail::polyhedral_build(fam);
    const auto& poly = build.poly;
    std::vector<std::array<double, 3>> base(poly.num_vertices);
    if (fam == Family::Tetrahedral) {
      base = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (fam == Family::Octahedral) {
      for (int v = 0; v < 8; ++v)
        base[v] = {(v & 1) ? 1.0 : -1.0, (v & 2) ? 1.0 : -1.0,
                   (v & 4) ? 1.0 : -1.0};
    } else {
      auto coords = detail::icosahedron_coords();
      for (size_t v = 0; v < coords.size(); ++v)
        for (int i = 0; i < 3; ++i)
          base[v][i] = static_cast<double>(coords[v][i].a) +
                       phi * static_cast<double>(coords[v][i].b);
    }
    const int nv = poly.num_vertices;
    const int ne = static_cast<int>(poly.edges.size());
    for (int v = 0; v < nv; ++v) pos[v] = normalize(base[v]);
    for (int e = 0; e < ne; ++e) {
      auto [u, w] = poly.edges[e];
      pos[nv + e] = normalize({base[u][0] + base[w][0], base[u][1] + base[w][1],
                               base[u][2] + base[w][2]});
    }
    for (size_t f = 0; f < poly.faces.size(); ++f) {
      std::array<double, 3> s{0, 0, 0};
      for (int v : poly.faces[f])
        for (int i = 0; i < 3; ++i) s[i] += base[v][i];
      pos[nv + ne + static_cast<int>(f)] = normalize(s);
    }
  }
  json arr = json::array();
  for (const auto& p : pos) arr.push_back({p[0], p[1], p[2]});
  return arr;
}

inline json orbit_graph_json(const OrbitGraph& a) {
  json j;
  json vo = json::array();
  for (int o = 0; o < a.num_vertex_orbits(); ++o) {
    json e;
    e["representative"] = a.vertex_rep[o];
    e["members"] = a.vertex_orbits[o];
    e["stabilizer_order"] = static_cast<int>(a.vertex_stab[o].size());
    vo.push_back(e);
  }
  j["vertex_orbits"] = vo;
  json eo = json::array();
  for (int o = 0; o < a.num_edge_orbits(); ++o) {
    json e;
    e["representative"] = a.edge_rep[o];
    e["members"] = a.edge_orbits[o];
    e["endpoints"] = {a.quotient_edges[o][0], a.quotient_edges[o][1]};
    e["stabilizer_order"] = static_cast<int>(a.edge_stab[o].size());
    eo.push_back(e);
  }
  j["edge_orbits"] = eo;
  j["euler_characteristic"] = euler_char(a);
  return j;
}

inline json groupoid_json(const IsotropyGroupoid& g) {
  json j;
  json cells = json::array();
  for (int o = 0; o < g.num_vertex_cells(); ++o) {
    json c;
    c["dim"] = 0;
    c["stabilizer_order"] = g.vertex_group_order[o];
    c["stabilizer_generators"] = std::vector<int>{g.vertex_group_generator[o]};
    cells.push_back(c);
  }
  for (int o = 0; o < g.num_edge_cells(); ++o) {
    json c;
    c["dim"] = 1;
    c["stabilizer_order"] = 1;
    c["stabilizer_generators"] = std::vector<int>{};
    cells.push_back(c);
  }
  j["cells"] = cells;
  json faces = json::array();
  for (const auto& f : g.faces) {
    json e;
    e["edge_cell"] = f.edge_cell;
    e["vertex_cell"] = f.vertex_cell;
    e["included"] = f.included;
    faces.push_back(e);
  }
  j["faces"] = faces;
  return j;
}

inline json rep_space_json(const RepSpace& rs) {
  json j;
  j["target"] = rs.target.name();
  json factors = json::array();
  for (size_t i = 0; i < rs.factors.size(); ++i) {
    json f;
    f["cell"] = static_cast<int>(i);
    f["k"] = rs.cell_orders[i];
    std::vector<std::string> enc;
    for (const auto& h : rs.factors[i]) enc.push_back(h.encode());
    f["classes"] = enc;
    factors.push_back(f);
  }
  j["factors"] = factors;
  j["count"] = rs.count;
  j["materialized"] = rs.materialized;
  if (rs.split_bundles_only) j["split_bundles_only"] = rs.warning;
  return j;
}

inline json rh_report_json(const GammaComplex& c, const RHReport& r) {
  json j;
  j["group"] = group_json(c.group);
  j["chi_X"] = r.chi_X;
  j["chi_A"] = r.chi_A;
  j["group_order"] = r.group_order;
  j["singular_sum"] = r.singular_sum;
  j["holds"] = r.holds;
  return j;
}

inline json fixed_sequence_json(const FixedSequenceReport& r) {
  json j;
  j["family"] = family_name(r.family);
  if (family_takes_n(r.family)) j["n"] = r.n;
  j["group_order"] = r.gamma_order;
  j["pi1_rank"] = r.pi1_rank;
  j["fix_regular_rank"] = r.fix_regular_rank;
  j["regular_fixed_is_norm"] = r.regular_fixed_is_norm;
  j["fix_ideal_rank"] = r.fix_ideal_rank;
  j["norm_augmentation"] = r.norm_augmentation;
  j["sigma_fix_rank"] = r.sigma_fix_rank;
  j["two_cell_fix_rank"] = r.two_cell_fix_rank;
  j["two_cell_orbits"] = r.two_cell_orbits;
  j["augmentation_index"] = r.augmentation_index;
  j["coker_matches_pi1"] = r.coker_matches_pi1;
  j["notes"] = r.notes;
  return j;
}

inline json module_json(const ZGammaModule& m) {
  json j;
  j["rank"] = m.rank;
  json gens;
  for (int s : m.gamma.generators) {
    std::string key = m.gamma.labels.empty() ? "g" + std::to_string(s)
                                             : m.gamma.labels[s];
    json rows = json::array();
    for (int i = 0; i < m.rank; ++i) {
      std::vector<long long> row(m.rank);
      for (int c = 0; c < m.rank; ++c) row[c] = m.act(s).at(i, c);
      rows.push_back(row);
    }
    gens[key] = rows;
  }
  j["generators"] = gens;
  return j;
}

inline json sublattice_json(const Sublattice& s) {
  json rows = json::array();
  for (int i = 0; i < s.basis.rows; ++i) {
    std::vector<long long> row(s.basis.cols);
    for (int c = 0; c < s.basis.cols; ++c) row[c] = s.basis.at(i, c);
    rows.push_back(row);
  }
  json j;
  j["ambient_rank"] = s.ambient_rank;
  j["rank"] = s.basis.rows;
  j["basis"] = rows;
  return j;
}

inline json rep_class_json(const RepClass& r) {
  std::vector<std::string> enc;
  for (const auto& h : r.assignment) enc.push_back(h.encode());
  return json(enc);
}

inline json classify_json(const ClassifyResult& r) {
  json j;
  json gamma;
  gamma["family"] = family_name(r.family);
  if (family_takes_n(r.family)) gamma["n"] = r.n;
  gamma["order"] = r.gamma_order;
  j["gamma"] = gamma;
  j["target"] = r.target.name();
  j["window"] = {r.window_lo, r.window_hi};
  j["symbolic"] = r.symbolic;
  json classes = json::array();
  for (const auto& b : r.classes) {
    json e;
    e["rep"] = rep_class_json(b.rep);
    if (b.chern)
      e["chern"] = *b.chern;
    else if (b.coset) {
      std::string s = "coset(mod " + std::to_string(b.coset->modulus);
      if (b.coset->known_base) s += ", base " + std::to_string(*b.coset->known_base);
      e["chern"] = s + ")";
    } else
      e["chern"] = nullptr;
    classes.push_back(e);
  }
  j["classes"] = classes;
  return j;
}

inline json beta_tau_json(const BetaTauReport& r) {
  json j;
  j["ok"] = r.ok;
  j["beta_surjective"] = r.beta_surjective;
  j["fiber_applicable"] = r.fiber_applicable;
  j["fiber_identity_ok"] = r.fiber_identity_ok;
  j["raw_tuple_count"] = r.raw_tuple_count;
  j["class_tuple_count"] = r.class_tuple_count;
  j["rep_class_count"] = r.rep_class_count;
  json fibers = json::array();
  for (const auto& f : r.fibers) {
    json e;
    e["class_a"] = f.class_a;
    e["class_b"] = f.class_b;
    e["fiber_size"] = f.fiber_size;
    e["double_cosets"] = f.double_coset_count;
    e["ok"] = f.ok;
    fibers.push_back(e);
  }
  j["fibers"] = fibers;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace eqb
