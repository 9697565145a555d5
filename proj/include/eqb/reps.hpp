#pragma once

// Conjugacy classes of homomorphisms C_k -> G for the supported structural
// groups, and the product space of isotropy representations over an orbit
// graph.  Compact targets are handled through eigenvalue data (residues of
// roots of unity), never floating point.

#include <memory>

#include "eqb/isotropy.hpp"

namespace eqb {

/// Finitely generated abelian group: free rank plus invariant factors.
struct FGAbelianGroup {
  int rank = 0;
  std::vector<long long> invariant_factors;  // each >= 2, successively dividing

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  bool operator==(const FGAbelianGroup& o) const = default;
};

/// Structural group catalogue: finite groups, the circle, SU(2), U(n).
struct TargetGroup {
  enum class Kind { Finite, Circle, SpecialUnitary2, Unitary };
  Kind kind = Kind::Circle;
  int unitary_rank = 0;
  std::shared_ptr<const FiniteGroup> finite;

  static TargetGroup circle() { return TargetGroup{Kind::Circle, 0, nullptr}; }
  static TargetGroup su2() { return TargetGroup{Kind::SpecialUnitary2, 0, nullptr}; }
  static TargetGroup unitary(int n) {
    if (n < 1) throw std::invalid_argument("unitary rank must be >= 1");
    return TargetGroup{Kind::Unitary, n, nullptr};
  }
  static TargetGroup finite_group(FiniteGroup g) {
    TargetGroup t;
    t.kind = Kind::Finite;
    t.finite = std::make_shared<FiniteGroup>(std::move(g));
    return t;
  }

  bool connected() const { return kind != Kind::Finite || finite->order == 1; }

  FGAbelianGroup pi1() const {
    if (kind == Kind::Circle || kind == Kind::Unitary) return {1, {}};
    return {0, {}};
  }

  std::string name() const {
    switch (kind) {
      case Kind::Circle: return "circle";
      case Kind::SpecialUnitary2: return "su2";
      case Kind::Unitary: return "unitary(" + std::to_string(unitary_rank) + ")";
      case Kind::Finite:
        return std::string("finite:") + family_name(finite->family) +
               (family_takes_n(finite->family) ? ":" + std::to_string(finite->n)
                                               : "");
    }
    return "?";
  }
};

/// One conjugacy class of homomorphisms C_k -> G.
///   finite:  minimal representative element with g^k = e
///   circle:  residue j, generator -> exp(2 pi i j / k)
///   su2:     j in [0, k/2], eigenvalue pair {exp(+-2 pi i j / k)}
///   unitary: sorted multiset of n residues mod k
struct HomClass {
  TargetGroup::Kind kind = TargetGroup::Kind::Circle;
  int k = 1;
  int finite_rep = 0;
  int circle_residue = 0;
  int su2_j = 0;
  std::vector<int> unitary_eigs;

  bool is_trivial_class() const {
    switch (kind) {
      case TargetGroup::Kind::Finite: return finite_rep == 0;
      case TargetGroup::Kind::Circle: return circle_residue == 0;
      case TargetGroup::Kind::SpecialUnitary2: return su2_j == 0;
      case TargetGroup::Kind::Unitary:
        for (int e : unitary_eigs)
          if (e != 0) return false;
        return true;
    }
    return false;
  }

  std::string encode() const {
    switch (kind) {
      case TargetGroup::Kind::Finite: return "g" + std::to_string(finite_rep);
      case TargetGroup::Kind::Circle: return std::to_string(circle_residue);
      case TargetGroup::Kind::SpecialUnitary2: return std::to_string(su2_j);
      case TargetGroup::Kind::Unitary: {
        std::string s = "[";
        for (size_t i = 0; i < unitary_eigs.size(); ++i)
          s += (i ? "," : "") + std::to_string(unitary_eigs[i]);
        return s + "]";
      }
    }
    return "?";
  }

  friend auto operator<=>(const HomClass&, const HomClass&) = default;
};

inline unsigned long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 v = 1;
  for (int i = 1; i <= r; ++i) {
    v = v * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (v > static_cast<unsigned __int128>(1) << 62)
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<unsigned long long>(v);
}

/// Count of hom_classes(k, target) without materializing the list.
inline long long hom_class_count(int k, const TargetGroup& target) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  switch (target.kind) {
    case TargetGroup::Kind::Circle: return k;
    case TargetGroup::Kind::SpecialUnitary2: return k / 2 + 1;
    case TargetGroup::Kind::Unitary:
      return static_cast<long long>(binomial(target.unitary_rank + k - 1,
                                             target.unitary_rank));
    case TargetGroup::Kind::Finite: {
      long long cnt = 0;
      for (const auto& cls : conjugacy_classes(*target.finite))
        if (target.finite->power(cls.representative, k) == 0) ++cnt;
      return cnt;
    }
  }
  return 0;
}

/// Complete, duplicate-free, canonically ordered conjugacy classes of
/// homomorphisms C_k -> G.
inline std::vector<HomClass> hom_classes(int k, const TargetGroup& target) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<HomClass> out;
  HomClass base;
  base.kind = target.kind;
  base.k = k;
  switch (target.kind) {
    case TargetGroup::Kind::Circle:
      for (int j = 0; j < k; ++j) {
        base.circle_residue = j;
        out.push_back(base);
      }
      break;
    case TargetGroup::Kind::SpecialUnitary2:
      for (int j = 0; j <= k / 2; ++j) {
        base.su2_j = j;
        out.push_back(base);
      }
      break;
    case TargetGroup::Kind::Unitary: {
      if (hom_class_count(k, target) > 10'000'000)
        throw std::length_error("unitary factor list too large to materialize");
      // nondecreasing tuples of residues in [0, k)
      std::vector<int> eigs(target.unitary_rank, 0);
      while (true) {
        base.unitary_eigs = eigs;
        out.push_back(base);
        int i = target.unitary_rank - 1;
        while (i >= 0 && eigs[i] == k - 1) --i;
        if (i < 0) break;
        int v = eigs[i] + 1;
        for (int j = i; j < target.unitary_rank; ++j) eigs[j] = v;
      }
      break;
    }
    case TargetGroup::Kind::Finite:
      for (const auto& cls : conjugacy_classes(*target.finite))
        if (target.finite->power(cls.representative, k) == 0) {
          base.finite_rep = cls.representative;
          out.push_back(base);
        }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A cellular isotropy representation up to conjugacy: one HomClass per
/// orbit vertex cell (edge cells carry the trivial class, which the trivial
/// edge groups make automatic).
struct RepClass {
  std::vector<HomClass> assignment;
  friend auto operator<=>(const RepClass&, const RepClass&) = default;
};

struct RepSpace {
  TargetGroup target;
  std::vector<int> cell_orders;               // per vertex cell
  std::vector<std::vector<HomClass>> factors; // per vertex cell
  long long count = 0;
  bool split_bundles_only = false;
  std::string warning;
  bool materialized = false;
  std::vector<RepClass> classes;
};

constexpr long long kRepMaterializeThreshold = 1'000'000;

/// Rep space over a validated groupoid: the compatible product of the
/// per-cell Hom classes.  Materializes the product (lexicographically over
/// the factors) below the size threshold.
inline RepSpace enumerate_reps(const IsotropyGroupoid& g, const TargetGroup& target,
                               long long materialize_threshold = kRepMaterializeThreshold) {
  RepSpace rs;
  rs.target = target;
  rs.cell_orders = g.vertex_group_order;
  rs.count = 1;
  for (int k : rs.cell_orders) {
    rs.factors.push_back(hom_classes(k, target));
    __int128 next = static_cast<__int128>(rs.count) *
                    static_cast<long long>(rs.factors.back().size());
    if (next > (static_cast<__int128>(1) << 62))
      throw std::overflow_error("representation space count exceeds 64 bits");
    rs.count = static_cast<long long>(next);
  }
  if (!target.connected() &&
      g.orbits.num_edge_orbits() >= g.orbits.num_vertex_orbits()) {
    rs.split_bundles_only = true;
    rs.warning =
        "disconnected structural group over a non-tree orbit space: "
        "enumeration covers split bundles only";
  }
  if (rs.count <= materialize_threshold) {
    rs.materialized = true;
    std::vector<size_t> idx(rs.factors.size(), 0);
    while (true) {
      RepClass rc;
      for (size_t i = 0; i < rs.factors.size(); ++i)
        rc.assignment.push_back(rs.factors[i][idx[i]]);
      rs.classes.push_back(std::move(rc));
      int i = static_cast<int>(rs.factors.size()) - 1;
      while (i >= 0 && idx[i] + 1 == rs.factors[i].size()) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  }
  return rs;
}

// ---- brute-force structure checks over a finite target --------------------

struct FiberCheck {
  int class_a = 0, class_b = 0;       // factor indices
  long long fiber_size = 0;           // simultaneous-conjugacy classes
  long long double_coset_count = 0;   // Z(k1) \ G / Z(k2)
  bool ok = false;
};

struct BetaTauReport {
  bool ok = false;
  bool beta_surjective = false;
  bool fiber_applicable = false;   // single-edge orbit graph
  bool fiber_identity_ok = true;
  long long raw_tuple_count = 0;
  long long class_tuple_count = 0;
  long long rep_class_count = 0;   // simultaneous-conjugacy classes of tuples
  std::vector<FiberCheck> fibers;
  std::string counterexample;
};

/// Brute force over raw cellular representations (tuples of actual
/// homomorphisms into a finite target):
///   (a) every compatible tuple of per-cell classes lifts (beta surjective);
///   (b) on a single-edge orbit graph, the fiber of the conjugation
///       quotient over a class pair equals the double-coset count of the
///       centralizers.
inline BetaTauReport check_beta_tau(const IsotropyGroupoid& g,
                                    const TargetGroup& target,
                                    int order_bound = 24) {
  if (target.kind != TargetGroup::Kind::Finite)
    throw std::invalid_argument("check_beta_tau needs a finite target");
  const FiniteGroup& G = *target.finite;
  if (G.order > order_bound)
    throw std::invalid_argument("finite target exceeds the configured bound");

  BetaTauReport r;
  const int cells = g.num_vertex_cells();
  std::vector<std::vector<int>> images(cells);
  for (int c = 0; c < cells; ++c)
    images[c] = elements_of_order_dividing(G, g.vertex_group_order[c]);

  // element -> minimal conjugate (class key), and per-cell class index
  std::vector<int> class_key(G.order);
  for (const auto& cls : conjugacy_classes(G))
    for (int m : cls.members) class_key[m] = cls.representative;
  std::vector<std::vector<HomClass>> factors(cells);
  for (int c = 0; c < cells; ++c)
    factors[c] = hom_classes(g.vertex_group_order[c], target);
  auto class_index = [&](int c, int elem) {
    HomClass h;
    h.kind = TargetGroup::Kind::Finite;
    h.k = g.vertex_group_order[c];
    h.finite_rep = class_key[elem];
    auto it = std::lower_bound(factors[c].begin(), factors[c].end(), h);
    return static_cast<int>(it - factors[c].begin());
  };

  // enumerate raw tuples
  std::vector<std::vector<int>> tuples;
  std::vector<size_t> idx(cells, 0);
  while (true) {
    std::vector<int> t(cells);
    for (int c = 0; c < cells; ++c) t[c] = images[c][idx[c]];
    tuples.push_back(std::move(t));
    int i = cells - 1;
    while (i >= 0 && idx[i] + 1 == images[i].size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  r.raw_tuple_count = static_cast<long long>(tuples.size());

  long long expected_class_tuples = 1;
  for (int c = 0; c < cells; ++c)
    expected_class_tuples *= static_cast<long long>(factors[c].size());
  r.class_tuple_count = expected_class_tuples;

  // beta surjectivity: every class tuple must be hit by some raw tuple
  std::map<std::vector<int>, long long> hit;
  for (const auto& t : tuples) {
    std::vector<int> key(cells);
    for (int c = 0; c < cells; ++c) key[c] = class_index(c, t[c]);
    ++hit[key];
  }
  r.beta_surjective =
      static_cast<long long>(hit.size()) == expected_class_tuples;
  if (!r.beta_surjective) {
    r.counterexample = "a compatible class tuple admits no raw lift";
  }

  // simultaneous conjugacy orbits of raw tuples
  std::map<std::vector<int>, int> tuple_id;
  for (size_t i = 0; i < tuples.size(); ++i) tuple_id[tuples[i]] = static_cast<int>(i);
  std::vector<int> orbit_of(tuples.size(), -1);
  int orbit_count = 0;
  std::map<std::vector<int>, long long> fiber_count;  // class key -> orbit count
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    for (int z = 0; z < G.order; ++z) {
      std::vector<int> img(cells);
      for (int c = 0; c < cells; ++c) img[c] = G.conjugate(tuples[i][c], z);
      orbit_of[tuple_id.at(img)] = orbit_count;
    }
    std::vector<int> key(cells);
    for (int c = 0; c < cells; ++c) key[c] = class_index(c, tuples[i][c]);
    ++fiber_count[key];
    ++orbit_count;
  }
  r.rep_class_count = orbit_count;

  // double-coset fiber identity on single-edge orbit graphs
  r.fiber_applicable = (cells == 2 && g.num_edge_cells() == 1);
  if (r.fiber_applicable) {
    for (size_t ia = 0; ia < factors[0].size(); ++ia)
      for (size_t ib = 0; ib < factors[1].size(); ++ib) {
        FiberCheck fc;
        fc.class_a = static_cast<int>(ia);
        fc.class_b = static_cast<int>(ib);
        fc.fiber_size = fiber_count[{static_cast<int>(ia), static_cast<int>(ib)}];
        Subgroup z1 = centralizer(G, {factors[0][ia].finite_rep});
        Subgroup z2 = centralizer(G, {factors[1][ib].finite_rep});
        fc.double_coset_count =
            static_cast<long long>(double_cosets(G, z1, z2).size());
        fc.ok = fc.fiber_size == fc.double_coset_count;
        if (!fc.ok) {
          r.fiber_identity_ok = false;
          r.counterexample = "fiber over classes (" + std::to_string(fc.class_a) +
                             "," + std::to_string(fc.class_b) + ") has size " +
                             std::to_string(fc.fiber_size) + ", double cosets " +
                             std::to_string(fc.double_coset_count);
        }
        r.fibers.push_back(fc);
      }
  }
  r.ok = r.beta_surjective && (!r.fiber_applicable || r.fiber_identity_ok);
  return r;
}

}  // namespace eqb
