#pragma once

// Integer-lattice models of the cofibration computation: the group ring,
// its augmentation ideal, direct sums of both tensored with pi1 of the
// structural group, their fixed sublattices and the augmentation index.

#include "eqb/complex.hpp"
#include "eqb/intmat.hpp"
#include "eqb/reps.hpp"

namespace eqb {

enum class ModuleKind { Regular, AugmentationIdeal };

/// Free Z-lattice with a Gamma-action by unimodular integer matrices,
/// one matrix per group element.
struct ZGammaModule {
  FiniteGroup gamma;
  int rank = 0;
  std::vector<IntMat> action;  // per element index
  std::vector<std::string> basis_labels;

  const IntMat& act(int g) const { return action[g]; }
};

/// Saturated description of a sublattice: basis rows in Hermite normal
/// form, which makes the stored form unique.
struct Sublattice {
  int ambient_rank = 0;
  IntMat basis;

  int rank() const { return basis.rows; }
};

namespace detail {

inline IntMat regular_matrix(const FiniteGroup& gamma, int g) {
  IntMat m(gamma.order, gamma.order);
  for (int x = 0; x < gamma.order; ++x) m.at(gamma.op(g, x), x) = 1;
  return m;
}

// Augmentation-ideal basis {gamma - 1 : gamma != e}, indexed by element-1.
// g.(x - 1) = (gx - 1) - (g - 1).
inline IntMat ideal_matrix(const FiniteGroup& gamma, int g) {
  IntMat m(gamma.order - 1, gamma.order - 1);
  for (int x = 1; x < gamma.order; ++x) {
    int gx = gamma.op(g, x);
    if (gx != 0) m.at(gx - 1, x - 1) += 1;
    if (g != 0) m.at(g - 1, x - 1) -= 1;
  }
  return m;
}

inline IntMat kron_identity(const IntMat& m, int copies) {
  // m tensor I_copies
  IntMat r(m.rows * copies, m.cols * copies);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      long long v = m.at(i, j);
      if (v == 0) continue;
      for (int c = 0; c < copies; ++c) r.at(i * copies + c, j * copies + c) = v;
    }
  return r;
}

}  // namespace detail

/// Build (direct sum of regular / augmentation-ideal pieces) tensored with
/// the free part of coeff.  Coefficient torsion is rejected: the supported
/// catalogue has pi1 in {0, Z} and a silently wrong torsion computation
/// would be worse than a refusal.
inline ZGammaModule build_module(const std::vector<ModuleKind>& kinds,
                                 const FiniteGroup& gamma,
                                 const FGAbelianGroup& coeff = {1, {}}) {
  if (!coeff.invariant_factors.empty())
    throw std::invalid_argument(
        "build_module: torsion coefficients are not supported");
  ZGammaModule m;
  m.gamma = gamma;
  for (int g = 0; g < gamma.order; ++g) {
    IntMat block(0, 0);
    for (ModuleKind k : kinds) {
      IntMat piece = (k == ModuleKind::Regular)
                         ? detail::regular_matrix(gamma, g)
                         : detail::ideal_matrix(gamma, g);
      block = IntMat::block_diag(block, piece);
    }
    m.action.push_back(detail::kron_identity(block, coeff.rank));
  }
  m.rank = m.action.front().rows;
  for (ModuleKind k : kinds)
    for (int x = 0; x < gamma.order; ++x) {
      if (k == ModuleKind::AugmentationIdeal && x == 0) continue;
      std::string base = (k == ModuleKind::Regular)
                             ? gamma.labels.empty() ? "g" + std::to_string(x)
                                                    : gamma.labels[x]
                             : (gamma.labels.empty() ? "g" + std::to_string(x)
                                                     : gamma.labels[x]) +
                                   " - e";
      for (int c = 0; c < coeff.rank; ++c) m.basis_labels.push_back(base);
    }
  return m;
}

inline ZGammaModule build_module(ModuleKind kind, const FiniteGroup& gamma,
                                 const FGAbelianGroup& coeff = {1, {}}) {
  return build_module(std::vector<ModuleKind>{kind}, gamma, coeff);
}

/// Verify that the stored matrices define a left action: A_s A_g = A_{sg}
/// for every generator s and element g (enough by induction on word
/// length), plus identity at e.
inline void verify_module(const ZGammaModule& m) {
  if (!(m.action[0] == IntMat::identity(m.rank)))
    throw std::runtime_error("module: identity does not act trivially");
  for (int s : m.gamma.generators)
    for (int g = 0; g < m.gamma.order; ++g)
      if (!(m.act(s) * m.act(g) == m.act(m.gamma.op(s, g))))
        throw std::runtime_error("module: action is not a homomorphism");
}

/// Fixed sublattice: exact integer kernel of the stacked (A_s - 1) over the
/// generators, in canonical form.
inline Sublattice fixed_points(const ZGammaModule& m) {
  IntMat stacked(0, m.rank);
  for (int s : m.gamma.generators)
    stacked = IntMat::vstack(stacked, m.act(s) - IntMat::identity(m.rank));
  Sublattice fix;
  fix.ambient_rank = m.rank;
  fix.basis = kernel_basis(stacked);
  return fix;
}

// ---- cellular chains (independent route to the same modules) -------------

/// Boundary matrix and signed edge action of the skeleton's cellular chain
/// complex; ker(boundary) carries the Gamma-action on H_1.
struct CellularChain {
  IntMat boundary;                    // vertices x edges, column e = head - tail
  std::vector<IntMat> edge_action;    // signed permutation per element
};

inline CellularChain cellular_chain(const GammaComplex& c) {
  CellularChain ch;
  ch.boundary = IntMat(c.num_vertices, c.num_edges());
  for (int e = 0; e < c.num_edges(); ++e) {
    ch.boundary.at(c.edges[e][1], e) += 1;
    ch.boundary.at(c.edges[e][0], e) -= 1;
  }
  for (int g = 0; g < c.group.order; ++g) {
    IntMat m(c.num_edges(), c.num_edges());
    for (int e = 0; e < c.num_edges(); ++e) {
      int e2 = c.edge_action[g][e];
      int u = c.vertex_action[g][c.edges[e][0]];
      // sign +1 when the stored orientation of the image matches g(tail->head)
      int sign = (c.edges[e2][0] == u) ? 1 : -1;
      if (c.edges[e2][0] == c.edges[e2][1]) sign = 1;
      m.at(e2, e) = sign;
    }
    ch.edge_action.push_back(std::move(m));
  }
  return ch;
}

/// Rank of the Gamma-fixed part of H_1(X) = ker(boundary), computed from
/// the chain complex alone.
inline int h1_fixed_rank(const GammaComplex& c) {
  CellularChain ch = cellular_chain(c);
  IntMat stacked = ch.boundary;
  for (int s : c.group.generators)
    stacked = IntMat::vstack(
        stacked, ch.edge_action[s] - IntMat::identity(c.num_edges()));
  return kernel_basis(stacked).rows;
}

inline int h1_rank(const GammaComplex& c) {
  return kernel_basis(cellular_chain(c).boundary).rows;
}

// ---- the cofibration model ------------------------------------------------

struct ChainModel {
  ZGammaModule sigma_x;    // suspension side
  ZGammaModule two_cell;   // wedge over the 2-cells
  int pi1_rank = 0;
  long long sigma_rank_per_copy = 0;  // must equal 1 - chi(X)
  long long two_rank_per_copy = 0;    // must equal the 2-cell count N
  int two_cell_orbits = 1;
};

/// Expected (1 - chi, N) per family; these are the normative row values the
/// ranks are checked against.
inline std::pair<long long, long long> copy_counts(Family family, int n) {
  switch (family) {
    case Family::Cyclic: return {n - 1, n};
    case Family::Dihedral: return {4LL * n - 1, 4LL * n};
    case Family::Tetrahedral: return {11, 12};
    case Family::Octahedral: return {23, 24};
    case Family::Icosahedral: return {59, 60};
  }
  return {0, 0};
}

inline ChainModel chain_model(const GammaComplex& c, const TargetGroup& target) {
  const FGAbelianGroup pi1 = target.pi1();
  const Family family = c.group.family;
  const bool dihedral = family == Family::Dihedral;

  ChainModel cm;
  cm.pi1_rank = pi1.rank;
  std::vector<ModuleKind> sigma_kinds = {ModuleKind::AugmentationIdeal};
  std::vector<ModuleKind> two_kinds = {ModuleKind::Regular};
  if (dihedral) {
    sigma_kinds.push_back(ModuleKind::Regular);
    two_kinds.push_back(ModuleKind::Regular);
  }
  cm.sigma_x = build_module(sigma_kinds, c.group, pi1);
  cm.two_cell = build_module(two_kinds, c.group, pi1);
  cm.two_cell_orbits = dihedral ? 2 : 1;

  cm.sigma_rank_per_copy = 0;
  for (ModuleKind k : sigma_kinds)
    cm.sigma_rank_per_copy +=
        k == ModuleKind::Regular ? c.group.order : c.group.order - 1;
  cm.two_rank_per_copy = static_cast<long long>(c.group.order) * cm.two_cell_orbits;

  const auto [want_sigma, want_two] = copy_counts(family, c.group.n);
  const long long one_minus_chi = 1 - euler_char(c);
  const long long ncells = two_cell_count(c);
  if (cm.sigma_rank_per_copy != one_minus_chi || cm.sigma_rank_per_copy != want_sigma)
    throw std::runtime_error("chain_model: suspension rank disagrees with 1 - chi");
  if (cm.two_rank_per_copy != ncells || cm.two_rank_per_copy != want_two)
    throw std::runtime_error("chain_model: 2-cell rank disagrees with N");
  if (ncells % c.group.order != 0 ||
      ncells / c.group.order != cm.two_cell_orbits)
    throw std::runtime_error("chain_model: 2-cell orbit count broken");
  return cm;
}

struct FixedSequenceReport {
  Family family = Family::Cyclic;
  int n = 0;
  long long gamma_order = 0;
  int pi1_rank = 0;
  // coefficient-free group-ring facts
  long long fix_regular_rank = 0;   // expect 1, generated by the norm
  bool regular_fixed_is_norm = false;
  long long fix_ideal_rank = 0;     // expect 0
  long long norm_augmentation = 0;  // expect |Gamma|
  // model facts (tensored with pi1)
  long long sigma_fix_rank = 0;
  long long two_cell_fix_rank = 0;
  int two_cell_orbits = 1;
  long long augmentation_index = 0;  // 0 when pi1 = 0
  bool coker_matches_pi1 = false;
  std::vector<std::string> notes;
};

/// Verify the fixed-point computations behind the Chern-class congruence:
/// Fix(I) = 0, Fix(ZGamma) = Z . norm, the augmentation image of the fixed
/// sublattice of the 2-cell module has index |Gamma|, and coker(k) is free
/// of rank pi1.  Throws on any failed identity.
inline FixedSequenceReport fixed_sequence_check(const GammaComplex& c,
                                                const TargetGroup& target) {
  ChainModel cm = chain_model(c, target);
  const FiniteGroup& gamma = c.group;
  FixedSequenceReport r;
  r.family = gamma.family;
  r.n = gamma.n;
  r.gamma_order = gamma.order;
  r.pi1_rank = cm.pi1_rank;
  r.two_cell_orbits = cm.two_cell_orbits;

  // group-ring facts over Z
  ZGammaModule reg = build_module(ModuleKind::Regular, gamma);
  Sublattice fr = fixed_points(reg);
  r.fix_regular_rank = fr.rank();
  r.regular_fixed_is_norm = fr.rank() == 1;
  if (fr.rank() == 1)
    for (int j = 0; j < fr.basis.cols; ++j)
      if (fr.basis.at(0, j) != 1) r.regular_fixed_is_norm = false;
  if (r.fix_regular_rank != 1 || !r.regular_fixed_is_norm)
    throw std::runtime_error(
        "fixed_sequence_check: Fix(ZGamma) is not the norm line");
  for (int j = 0; j < fr.basis.cols; ++j) r.norm_augmentation += fr.basis.at(0, j);
  if (r.norm_augmentation != gamma.order)
    throw std::runtime_error("fixed_sequence_check: norm augmentation broken");

  if (gamma.order > 1) {
    ZGammaModule ideal = build_module(ModuleKind::AugmentationIdeal, gamma);
    r.fix_ideal_rank = fixed_points(ideal).rank();
    if (r.fix_ideal_rank != 0)
      throw std::runtime_error("fixed_sequence_check: Fix(I) != 0");
  }

  // model facts
  Sublattice sigma_fix = fixed_points(cm.sigma_x);
  Sublattice two_fix = fixed_points(cm.two_cell);
  r.sigma_fix_rank = sigma_fix.rank();
  r.two_cell_fix_rank = two_fix.rank();

  if (cm.pi1_rank > 0) {
    // augmentation = coordinate sum per pi1 copy; image index in Z
    long long g = 0;
    for (int i = 0; i < two_fix.basis.rows; ++i) {
      long long s = 0;
      for (int j = 0; j < two_fix.basis.cols; ++j) s += two_fix.basis.at(i, j);
      g = std::gcd(g, s);
    }
    r.augmentation_index = g;
    if (r.augmentation_index != gamma.order)
      throw std::runtime_error(
          "fixed_sequence_check: augmentation image index != |Gamma|");

    // inclusion k: sigma_x -> two_cell as the ideal embedding on each ideal
    // summand and the identity on each regular summand
    const bool dihedral = gamma.family == Family::Dihedral;
    IntMat incl(0, 0);
    {
      IntMat ideal_in_reg(gamma.order, gamma.order - 1);
      for (int x = 1; x < gamma.order; ++x) {
        ideal_in_reg.at(x, x - 1) = 1;
        ideal_in_reg.at(0, x - 1) = -1;
      }
      incl = ideal_in_reg;
      if (dihedral) incl = IntMat::block_diag(incl, IntMat::identity(gamma.order));
    }
    auto factors = smith_invariant_factors(incl);
    bool torsion_free = true;
    for (long long f : factors)
      if (f != 1) torsion_free = false;
    long long coker_rank = incl.rows - static_cast<long long>(factors.size());
    r.coker_matches_pi1 = torsion_free && coker_rank == cm.pi1_rank;
    if (!r.coker_matches_pi1)
      throw std::runtime_error(
          "fixed_sequence_check: coker(k) is not free of rank pi1");
  } else {
    r.notes.push_back("pi1 is trivial: the Chern datum is empty and every "
                      "fixed lattice vanishes");
  }

  if (gamma.family == Family::Dihedral && cm.pi1_rank > 0) {
    r.notes.push_back(
        "dihedral model: the suspension module is I (+) ZGamma, so its fixed "
        "part is the norm line of the regular summand (rank " +
        std::to_string(r.sigma_fix_rank) +
        "), and the 2-cell module carries two free orbits (fixed rank " +
        std::to_string(r.two_cell_fix_rank) + ")");
  }
  return r;
}

}  // namespace eqb
