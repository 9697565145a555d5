#pragma once

// Finite rotation groups of the 2-sphere as explicit multiplication tables.
// Everything here is exact integer arithmetic; no floating point.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqb {

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Tetrahedral: return "tetrahedral";
    case Family::Octahedral: return "octahedral";
    case Family::Icosahedral: return "icosahedral";
  }
  return "?";
}

inline bool family_takes_n(Family f) {
  return f == Family::Cyclic || f == Family::Dihedral;
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::Cyclic, Family::Dihedral, Family::Tetrahedral,
                   Family::Octahedral, Family::Icosahedral})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + s);
}

/// A finite group given by an indexed element set and a full Cayley table.
/// Element 0 is always the identity; the order of the remaining elements is
/// fixed by the construction so that identical inputs give identical tables.
struct FiniteGroup {
  Family family = Family::Cyclic;
  int n = 0;  // family parameter; 0 for the polyhedral families
  int order = 0;
  std::vector<int> mul;  // row-major order x order
  std::vector<int> inv;
  std::vector<int> generators;
  std::vector<std::string> labels;

  int identity() const { return 0; }
  int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int inverse(int a) const { return inv[a]; }

  int power(int g, long long k) const {
    long long m = k % order;
    if (m < 0) m += order;
    int r = 0;
    for (long long i = 0; i < m; ++i) r = op(r, g);
    return r;
  }

  int element_order(int g) const {
    int r = g, k = 1;
    while (r != 0) {
      r = op(r, g);
      ++k;
    }
    return k;
  }

  int conjugate(int g, int by) const { return op(op(by, g), inverse(by)); }
};

/// Subgroup as a sorted list of element indices of a parent group.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
};

struct ConjugacyClass {
  int representative = 0;  // minimal member index
  std::vector<int> members;  // sorted
};

namespace detail {

// Builds inv from mul and checks the basic group laws. Throws on a broken
// table; every construction below funnels through here.
inline void finish_table(FiniteGroup& g) {
  const int n = g.order;
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw std::runtime_error("group table: identity law fails");
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == 0) g.inv[a] = b;
    if (g.inv[a] < 0) throw std::runtime_error("group table: no inverse");
    if (g.op(g.inv[a], a) != 0)
      throw std::runtime_error("group table: one-sided inverse");
  }
}

// Generic construction from a faithful permutation action: orders the
// elements (identity first, then generator-word length, ties by the
// lexicographic order of the permutation) and builds the Cayley table.
struct PermGroupBuild {
  std::vector<std::vector<int>> perms;  // canonical element order
  std::vector<int> generators;          // indices into perms
};

inline std::vector<int> compose_perm(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  // (a*b)(x) = a(b(x))
  std::vector<int> r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline PermGroupBuild order_perm_group(std::vector<std::vector<int>> elements,
                                       std::vector<std::vector<int>> gens) {
  const size_t deg = elements.front().size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);

  std::sort(elements.begin(), elements.end());
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p)
      throw std::runtime_error("permutation set not closed");
    return static_cast<int>(it - elements.begin());
  };

  // BFS from the identity, expanding by the generators in order; within one
  // word length the queue order is the lexicographic order of the parents.
  std::vector<int> canonical;  // sorted-index -> canonical position
  canonical.assign(elements.size(), -1);
  std::vector<int> bfs;
  bfs.push_back(index_of(id));
  canonical[bfs[0]] = 0;
  for (size_t head = 0; head < bfs.size(); ++head) {
    for (const auto& s : gens) {
      int t = index_of(compose_perm(s, elements[bfs[head]]));
      if (canonical[t] < 0) {
        canonical[t] = static_cast<int>(bfs.size());
        bfs.push_back(t);
      }
    }
  }
  if (bfs.size() != elements.size())
    throw std::runtime_error("generators do not generate the element set");

  PermGroupBuild out;
  out.perms.resize(elements.size());
  for (size_t i = 0; i < bfs.size(); ++i) out.perms[i] = elements[bfs[i]];
  for (const auto& s : gens) {
    int pos = canonical[index_of(s)];
    if (std::find(out.generators.begin(), out.generators.end(), pos) ==
        out.generators.end())
      out.generators.push_back(pos);
  }
  return out;
}

inline FiniteGroup group_from_perms(const PermGroupBuild& b, Family family) {
  FiniteGroup g;
  g.family = family;
  g.n = 0;
  g.order = static_cast<int>(b.perms.size());
  g.generators = b.generators;
  g.mul.assign(static_cast<size_t>(g.order) * g.order, -1);

  std::vector<std::vector<int>> sorted = b.perms;
  std::vector<int> to_canonical(sorted.size());
  std::vector<size_t> idx(sorted.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t x, size_t y) { return b.perms[x] < b.perms[y]; });
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < idx.size(); ++i) to_canonical[i] = static_cast<int>(idx[i]);

  auto lookup = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    return to_canonical[static_cast<size_t>(it - sorted.begin())];
  };
  for (int a = 0; a < g.order; ++a)
    for (int c = 0; c < g.order; ++c)
      g.mul[static_cast<size_t>(a) * g.order + c] =
          lookup(compose_perm(b.perms[a], b.perms[c]));
  finish_table(g);
  return g;
}

}  // namespace detail

/// Exhaustive validity check of the FiniteGroup invariants (associativity,
/// identity/inverse laws, generator closure). Intended for orders <= 60.
inline void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) throw std::runtime_error("group: empty");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw std::runtime_error("group: associativity fails");
  for (int a = 0; a < n; ++a) {
    if (g.op(a, 0) != a || g.op(0, a) != a)
      throw std::runtime_error("group: identity fails");
    if (g.op(a, g.inverse(a)) != 0 || g.op(g.inverse(a), a) != 0)
      throw std::runtime_error("group: inverse fails");
  }
  // generator closure
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : g.generators) {
      int y = g.op(s, x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n)
    throw std::runtime_error("group: generators do not generate");
}

namespace detail {
FiniteGroup make_polyhedral_group(Family family);  // defined in polyhedra.hpp
}

/// Construct one of the five finite rotation-group families.
/// cyclic(n): order n, n >= 1.  dihedral(n): order 2n, n >= 2.
/// tetrahedral/octahedral/icosahedral take no parameter: orders 12, 24, 60.
inline FiniteGroup make_group(Family family, int n = 0) {
  if (family == Family::Cyclic) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    FiniteGroup g;
    g.family = family;
    g.n = n;
    g.order = n;
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    if (n > 1) g.generators = {1};
    g.labels.resize(n);
    for (int a = 0; a < n; ++a)
      g.labels[a] = a == 0 ? "e" : (a == 1 ? "r" : "r^" + std::to_string(a));
    detail::finish_table(g);
    return g;
  }
  if (family == Family::Dihedral) {
    if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
    // element f*n + i stands for s^f r^i; s r s = r^-1
    FiniteGroup g;
    g.family = family;
    g.n = n;
    g.order = 2 * n;
    g.mul.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) {
        int i = a % n, f = a / n, j = b % n, fb = b / n;
        int k = ((fb ? -i : i) + j) % n;
        if (k < 0) k += n;
        g.mul[static_cast<size_t>(a) * g.order + b] = (f ^ fb) * n + k;
      }
    g.generators = {1, n};
    g.labels.resize(g.order);
    for (int a = 0; a < g.order; ++a) {
      int i = a % n, f = a / n;
      std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (f == 0)
        g.labels[a] = i == 0 ? "e" : rot;  // polar rotation
      else
        g.labels[a] = rot.empty() ? "s" : "s " + rot;  // equatorial flip
    }
    detail::finish_table(g);
    return g;
  }
  if (n != 0)
    throw std::invalid_argument("polyhedral families take no parameter n");
  return detail::make_polyhedral_group(family);
}

/// Conjugacy classes, ordered by minimal member index; representatives are
/// the minimal members.  Classes partition the element set.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> out;
  std::vector<char> done(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    if (done[a]) continue;
    ConjugacyClass c;
    c.representative = a;
    for (int x = 0; x < g.order; ++x) {
      int y = g.conjugate(a, x);
      if (!done[y]) {
        done[y] = 1;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// All g with g^k = identity.  Contains the identity and is closed under
/// conjugation.
inline std::vector<int> elements_of_order_dividing(const FiniteGroup& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<int> out;
  for (int a = 0; a < g.order; ++a)
    if (g.power(a, k) == 0) out.push_back(a);
  return out;
}

/// The subgroup of elements commuting with every member of S.
inline Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("centralizer of empty set");
  Subgroup z;
  z.parent = &g;
  for (int a = 0; a < g.order; ++a) {
    bool ok = true;
    for (int x : s)
      if (g.op(a, x) != g.op(x, a)) {
        ok = false;
        break;
      }
    if (ok) z.members.push_back(a);
  }
  return z;
}

/// Smallest subgroup containing the seed elements.
inline Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  in[0] = 1;
  std::vector<int> stack = {0};
  for (int x : seed)
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  // close under multiplication; inverses come for free in a finite group
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur;
    for (int a = 0; a < g.order; ++a)
      if (in[a]) cur.push_back(a);
    for (int a : cur)
      for (int b : cur) {
        int c = g.op(a, b);
        if (!in[c]) {
          in[c] = 1;
          grew = true;
        }
      }
  }
  Subgroup h;
  h.parent = &g;
  for (int a = 0; a < g.order; ++a)
    if (in[a]) h.members.push_back(a);
  return h;
}

/// Double cosets H1\G/H2 as a partition of the element set.  Each part is
/// H1 g H2 for its minimal representative g; parts are ordered by that
/// representative.
inline std::vector<std::vector<int>> double_cosets(const FiniteGroup& g,
                                                   const Subgroup& h1,
                                                   const Subgroup& h2) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    if (done[a]) continue;
    std::vector<int> part;
    for (int x : h1.members)
      for (int y : h2.members) {
        int z = g.op(g.op(x, a), y);
        if (!done[z]) {
          done[z] = 1;
          part.push_back(z);
        }
      }
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

/// True when the subgroup is cyclic; on success out_generator is set to the
/// minimal element whose order equals the subgroup order.
inline bool subgroup_is_cyclic(const FiniteGroup& g, const std::vector<int>& members,
                               int* out_generator = nullptr) {
  for (int x : members)
    if (g.element_order(x) == static_cast<int>(members.size())) {
      if (out_generator) *out_generator = x;
      return true;
    }
  return false;
}

}  // namespace eqb

#include "eqb/polyhedra.hpp"  // supplies detail::make_polyhedral_group
