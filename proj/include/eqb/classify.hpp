#pragma once

// Classification of equivariant principal bundles over the sphere as
// (isotropy representation, Chern class) pairs, with an independent
// clutching oracle fixing the Chern residue for cyclic actions.

#include <optional>

#include "eqb/reps.hpp"

namespace eqb {

/// Residue class mod |Gamma| in which the Chern numbers of all bundles with
/// a fixed isotropy representation lie.  known_base is present only when an
/// oracle supplies it.
struct ChernCoset {
  long long modulus = 1;
  std::optional<long long> known_base;
};

struct BundleClass {
  RepClass rep;
  std::optional<long long> chern;   // concrete value, when enumerable
  std::optional<ChernCoset> coset;  // residue data, when pi1 is nontrivial

  bool operator==(const BundleClass& o) const {
    return rep == o.rep && chern == o.chern;
  }
};

/// Degrees of equivariant monomial clutching maps z -> z^d for the order-n
/// polar rotation with isotropy weights a (north) and b (south): the
/// equivariance equation f(zeta z) = zeta^a f(z) zeta^-b pins the winding
/// residue.  Scans a window of degrees, confirms the realizable set is one
/// residue class mod n, and returns it.
inline ChernCoset clutching_oracle(int n, long long a, long long b) {
  if (n < 1) throw std::invalid_argument("clutching_oracle: n must be >= 1");
  auto mod = [&](long long x) { return ((x % n) + n) % n; };
  auto realizable = [&](long long d) {
    // compare rotation numbers of f(zeta^k z) and zeta^{ka} f(z) zeta^{-kb}
    for (long long k = 0; k < n; ++k)
      if (mod(k * d) != mod(k * (a - b))) return false;
    return true;
  };
  std::optional<long long> base;
  for (long long d = -3LL * n; d <= 3LL * n; ++d) {
    if (!realizable(d)) continue;
    if (!base)
      base = mod(d);
    else if (*base != mod(d))
      throw std::runtime_error(
          "clutching_oracle: realizable degrees span several residues");
  }
  if (!base)
    throw std::runtime_error("clutching_oracle: no realizable degree found");
  ChernCoset c;
  c.modulus = n;
  c.known_base = *base;
  return c;
}

/// Consistency predicate over classification output: two classes violate the
/// congruence only when their representations agree and their concrete Chern
/// values differ mod |Gamma|.
inline bool congruence_check(const BundleClass& b1, const BundleClass& b2,
                             long long gamma_order) {
  if (!(b1.rep == b2.rep)) return true;
  if (!b1.chern || !b2.chern) return true;
  long long d = *b1.chern - *b2.chern;
  return d % gamma_order == 0;
}

struct ClassifyResult {
  Family family = Family::Cyclic;
  int n = 0;
  long long gamma_order = 1;
  TargetGroup target = TargetGroup::circle();
  long long window_lo = 0, window_hi = 0;
  bool symbolic = false;  // cosets emitted without a known base
  std::vector<BundleClass> classes;
};

/// Enumerate bundle classes for a family over a finite Chern window.
/// Refuses disconnected targets (the completeness of the invariant pair is
/// only available for connected structural groups).  For the cyclic family
/// with circle target the Chern values per representation come from the
/// clutching oracle; other pi1 = Z targets get one symbolic coset per
/// representation; pi1 = 0 targets drop the Chern component.
inline ClassifyResult classify(Family family, int n, const TargetGroup& target,
                               long long window_lo, long long window_hi) {
  if (!target.connected())
    throw std::invalid_argument(
        "classify: disconnected structural group violates the connectedness "
        "hypothesis of the classification");
  if (window_lo > window_hi)
    throw std::invalid_argument("classify: empty Chern window");

  GammaComplex complex = (family == Family::Cyclic && n == 1)
                             ? detail::trivial_cyclic_complex()
                             : build_skeleton(family, n);
  IsotropyGroupoid groupoid = isotropy_groupoid(orbit_graph(complex));
  RepSpace reps = enumerate_reps(groupoid, target);
  if (!reps.materialized)
    throw std::runtime_error("classify: representation space too large");

  ClassifyResult out;
  out.family = family;
  out.n = n;
  out.gamma_order = complex.group.order;
  out.target = target;
  out.window_lo = window_lo;
  out.window_hi = window_hi;

  const bool has_chern = target.pi1().rank > 0;
  const bool oracle_applies =
      family == Family::Cyclic && target.kind == TargetGroup::Kind::Circle;

  for (const RepClass& rep : reps.classes) {
    if (!has_chern) {
      out.classes.push_back({rep, std::nullopt, std::nullopt});
      continue;
    }
    if (oracle_applies) {
      // north pole orbit is cell 0, south pole orbit is cell 1
      long long a = rep.assignment[0].circle_residue;
      long long b = rep.assignment[1].circle_residue;
      ChernCoset coset = clutching_oracle(complex.group.order, a, b);
      for (long long c = window_lo; c <= window_hi; ++c)
        if (((c % coset.modulus) + coset.modulus) % coset.modulus ==
            *coset.known_base)
          out.classes.push_back({rep, c, coset});
      continue;
    }
    ChernCoset coset;
    coset.modulus = complex.group.order;
    out.symbolic = true;
    out.classes.push_back({rep, std::nullopt, coset});
  }
  return out;
}

}  // namespace eqb
