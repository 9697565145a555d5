#pragma once

// Combinatorial models of the tetrahedron, cube and icosahedron together
// with their rotation groups acting as vertex permutations.  The icosahedron
// is handled with exact arithmetic in Z[phi] (phi^2 = phi + 1), so the whole
// construction stays integer-only.

#include <array>
#include <map>
#include <set>

#include "eqb/group.hpp"

namespace eqb::detail {

struct Polyhedron {
  int num_vertices = 0;
  std::vector<std::array<int, 2>> edges;   // sorted pairs, sorted list
  std::vector<std::vector<int>> faces;     // sorted vertex sets, sorted list
  std::vector<std::vector<int>> rotations; // vertex permutations
};

// ---- Z[phi] -------------------------------------------------------------

struct Golden {
  long long a = 0, b = 0;  // a + b*phi
  friend Golden operator+(Golden x, Golden y) { return {x.a + y.a, x.b + y.b}; }
  friend Golden operator-(Golden x, Golden y) { return {x.a - y.a, x.b - y.b}; }
  friend Golden operator*(Golden x, Golden y) {
    // (a1 + b1 phi)(a2 + b2 phi), phi^2 = phi + 1
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend Golden operator-(Golden x) { return {-x.a, -x.b}; }
  friend bool operator==(Golden x, Golden y) { return x.a == y.a && x.b == y.b; }
};

// Sign of a + b*phi under the real embedding phi = (1+sqrt(5))/2, exactly:
// 2(a + b phi) = (2a+b) + b sqrt(5).
inline int golden_sign(Golden x) {
  long long p = 2 * x.a + x.b, q = x.b;
  if (p == 0 && q == 0) return 0;
  if (p >= 0 && q >= 0) return 1;
  if (p <= 0 && q <= 0) return -1;
  long long lhs = p * p, rhs = 5 * q * q;
  if (p > 0) return lhs > rhs ? 1 : -1;  // q < 0
  return rhs > lhs ? 1 : -1;             // p < 0, q > 0
}

using GVec = std::array<Golden, 3>;

inline Golden gdot(const GVec& u, const GVec& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Golden gdist2(const GVec& u, const GVec& v) {
  GVec d{u[0] - v[0], u[1] - v[1], u[2] - v[2]};
  return gdot(d, d);
}

inline Golden gdet3(const GVec& u, const GVec& v, const GVec& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) -
         u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

// ---- tetrahedron --------------------------------------------------------

inline Polyhedron tetrahedron_data() {
  Polyhedron p;
  p.num_vertices = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) p.edges.push_back({u, v});
  for (int skip = 3; skip >= 0; --skip) {
    std::vector<int> f;
    for (int v = 0; v < 4; ++v)
      if (v != skip) f.push_back(v);
    p.faces.push_back(f);
  }
  std::sort(p.faces.begin(), p.faces.end());
  // rotation group = even permutations of the four vertices
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 0) p.rotations.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

// ---- cube ---------------------------------------------------------------

inline Polyhedron cube_data() {
  Polyhedron p;
  p.num_vertices = 8;  // vertex v has coordinates ((v>>k & 1) ? 1 : -1)
  auto coord = [](int v, int k) { return (v >> k & 1) ? 1 : -1; };
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) {
      int diff = u ^ v;
      if (diff == 1 || diff == 2 || diff == 4) p.edges.push_back({u, v});
    }
  for (int axis = 0; axis < 3; ++axis)
    for (int s = 0; s < 2; ++s) {
      std::vector<int> f;
      for (int v = 0; v < 8; ++v)
        if ((v >> axis & 1) == s) f.push_back(v);
      p.faces.push_back(f);
    }
  std::sort(p.faces.begin(), p.faces.end());
  // rotations = signed permutation matrices with determinant +1
  std::vector<int> axes = {0, 1, 2};
  std::sort(axes.begin(), axes.end());
  do {
    int par = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (axes[i] > axes[j]) ++par;
    for (int signs = 0; signs < 8; ++signs) {
      int neg = ((signs >> 0) & 1) + ((signs >> 1) & 1) + ((signs >> 2) & 1);
      if ((par + neg) % 2 != 0) continue;  // det must be +1
      std::vector<int> perm(8);
      for (int v = 0; v < 8; ++v) {
        int image = 0;
        for (int i = 0; i < 3; ++i) {
          int c = coord(v, axes[i]) * ((signs >> i & 1) ? -1 : 1);
          if (c > 0) image |= 1 << i;
        }
        perm[v] = image;
      }
      p.rotations.push_back(perm);
    }
  } while (std::next_permutation(axes.begin(), axes.end()));
  std::sort(p.rotations.begin(), p.rotations.end());
  p.rotations.erase(std::unique(p.rotations.begin(), p.rotations.end()),
                    p.rotations.end());
  if (p.rotations.size() != 24)
    throw std::runtime_error("cube rotation census broken");
  return p;
}

// ---- icosahedron --------------------------------------------------------

inline std::vector<GVec> icosahedron_coords() {
  std::vector<GVec> v;
  for (int shift = 0; shift < 3; ++shift)
    for (int s1 = -1; s1 <= 1; s1 += 2)
      for (int s2 = -1; s2 <= 1; s2 += 2) {
        GVec base{Golden{0, 0}, Golden{s1, 0}, Golden{0, s2}};  // (0,+-1,+-phi)
        GVec w;
        for (int i = 0; i < 3; ++i) w[(i + shift) % 3] = base[i];
        v.push_back(w);
      }
  return v;
}

// Rotations of the icosahedron: every orientation-preserving automorphism is
// determined by the image of one directed edge; propagate along the edge
// graph, separating the two common neighbours of an edge by the sign of
// det(u, v, w).
inline Polyhedron icosahedron_data() {
  Polyhedron p;
  auto coords = icosahedron_coords();
  const int nv = static_cast<int>(coords.size());
  p.num_vertices = nv;

  const Golden edge_len2{4, 0};
  std::vector<std::vector<int>> adj(nv);
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (gdist2(coords[u], coords[v]) == edge_len2) {
        p.edges.push_back({u, v});
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  if (p.edges.size() != 30) throw std::runtime_error("icosahedron edges != 30");

  for (int a = 0; a < nv; ++a)
    for (int b : adj[a])
      for (int c : adj[a])
        if (a < b && b < c &&
            std::find(adj[b].begin(), adj[b].end(), c) != adj[b].end())
          p.faces.push_back({a, b, c});
  std::sort(p.faces.begin(), p.faces.end());
  if (p.faces.size() != 20) throw std::runtime_error("icosahedron faces != 20");

  // For each directed edge (u,v): the two triangle-completing neighbours,
  // keyed by orientation sign.
  auto wing = [&](int u, int v, int want_sign) {
    for (int w : adj[u])
      if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end())
        if (golden_sign(gdet3(coords[u], coords[v], coords[w])) == want_sign)
          return w;
    throw std::runtime_error("icosahedron wing lookup failed");
  };

  const int base_u = 0, base_v = adj[0].front();
  for (int iu = 0; iu < nv; ++iu)
    for (int iv : adj[iu]) {
      std::vector<int> img(nv, -1);
      img[base_u] = iu;
      img[base_v] = iv;
      std::vector<std::array<int, 2>> queue = {{base_u, base_v}};
      std::set<std::array<int, 2>> seen = {{base_u, base_v}};
      bool ok = true;
      while (!queue.empty() && ok) {
        auto [x, y] = queue.back();
        queue.pop_back();
        for (int sgn : {1, -1}) {
          int w = wing(x, y, sgn);
          int wimg = wing(img[x], img[y], sgn);
          if (img[w] < 0)
            img[w] = wimg;
          else if (img[w] != wimg) {
            ok = false;
            break;
          }
          for (auto next : {std::array<int, 2>{x, w}, std::array<int, 2>{w, y}})
            if (seen.insert(next).second) queue.push_back(next);
        }
      }
      if (!ok) continue;
      // verify: bijective, adjacency- and orientation-preserving
      std::vector<char> hit(nv, 0);
      for (int x = 0; x < nv; ++x) {
        if (img[x] < 0 || hit[img[x]]) {
          ok = false;
          break;
        }
        hit[img[x]] = 1;
      }
      if (!ok) continue;
      for (const auto& e : p.edges)
        if (gdist2(coords[img[e[0]]], coords[img[e[1]]]) != edge_len2) {
          ok = false;
          break;
        }
      for (const auto& f : p.faces) {
        if (!ok) break;
        int s0 = golden_sign(gdet3(coords[f[0]], coords[f[1]], coords[f[2]]));
        int s1 = golden_sign(
            gdet3(coords[img[f[0]]], coords[img[f[1]]], coords[img[f[2]]]));
        if (s0 != s1) ok = false;
      }
      if (ok) p.rotations.push_back(img);
    }
  std::sort(p.rotations.begin(), p.rotations.end());
  p.rotations.erase(std::unique(p.rotations.begin(), p.rotations.end()),
                    p.rotations.end());
  if (p.rotations.size() != 60)
    throw std::runtime_error("icosahedron rotation census broken");
  return p;
}

inline const Polyhedron& polyhedron_for(Family family) {
  static const Polyhedron tet = tetrahedron_data();
  static const Polyhedron cube = cube_data();
  static const Polyhedron ico = icosahedron_data();
  switch (family) {
    case Family::Tetrahedral: return tet;
    case Family::Octahedral: return cube;
    case Family::Icosahedral: return ico;
    default: throw std::invalid_argument("not a polyhedral family");
  }
}

// Greedy deterministic generating set: scan the lexicographically sorted
// permutations and keep those that enlarge the generated subgroup.
inline std::vector<std::vector<int>> pick_generators(
    const std::vector<std::vector<int>>& perms) {
  const size_t total = perms.size();
  std::vector<std::vector<int>> sorted = perms;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> gens;
  std::set<std::vector<int>> closure;
  const size_t deg = sorted.front().size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  closure.insert(id);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> cur(closure.begin(), closure.end());
      for (const auto& a : cur)
        for (const auto& s : gens)
          if (closure.insert(compose_perm(s, a)).second) grew = true;
    }
  };
  for (const auto& cand : sorted) {
    if (closure.size() == total) break;
    if (closure.count(cand)) continue;
    gens.push_back(cand);
    close();
  }
  if (closure.size() != total)
    throw std::runtime_error("generator selection failed");
  return gens;
}

struct PolyhedralBuild {
  Polyhedron poly;
  FiniteGroup group;
  std::vector<std::vector<int>> vertex_perm;  // per canonical element index
};

// Axis-type labels: each non-identity rotation fixes (setwise) either a
// vertex pair, an edge pair or a face pair of the solid.
inline void label_polyhedral(PolyhedralBuild& b) {
  auto& g = b.group;
  g.labels.assign(g.order, "");
  g.labels[0] = "e";
  std::map<std::string, int> axis_counter;
  for (int e = 1; e < g.order; ++e) {
    const auto& perm = b.vertex_perm[e];
    char type = 0;
    int cell = -1;
    for (int v = 0; v < b.poly.num_vertices && type == 0; ++v)
      if (perm[v] == v) {
        type = 'v';
        cell = v;
      }
    if (type == 0)
      for (size_t i = 0; i < b.poly.faces.size() && type == 0; ++i) {
        std::vector<int> img;
        for (int v : b.poly.faces[i]) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        if (img == b.poly.faces[i]) {
          type = 'f';
          cell = static_cast<int>(i);
        }
      }
    if (type == 0)
      for (size_t i = 0; i < b.poly.edges.size() && type == 0; ++i) {
        auto [u, v] = b.poly.edges[i];
        if ((perm[u] == u && perm[v] == v) || (perm[u] == v && perm[v] == u)) {
          type = 'e';
          cell = static_cast<int>(i);
        }
      }
    if (type == 0) throw std::runtime_error("rotation without an axis cell");
    std::string key = std::string(1, type) + std::to_string(cell);
    int serial = ++axis_counter[key];
    g.labels[e] = key + "r" + std::to_string(serial);
  }
}

inline const PolyhedralBuild& polyhedral_build(Family family) {
  static auto make = [](Family f) {
    PolyhedralBuild b;
    b.poly = polyhedron_for(f);
    auto gens = pick_generators(b.poly.rotations);
    auto ordered = order_perm_group(b.poly.rotations, gens);
    b.group = group_from_perms(ordered, f);
    b.vertex_perm = ordered.perms;
    label_polyhedral(b);
    return b;
  };
  static const PolyhedralBuild tet = make(Family::Tetrahedral);
  static const PolyhedralBuild cube = make(Family::Octahedral);
  static const PolyhedralBuild ico = make(Family::Icosahedral);
  switch (family) {
    case Family::Tetrahedral: return tet;
    case Family::Octahedral: return cube;
    case Family::Icosahedral: return ico;
    default: throw std::invalid_argument("not a polyhedral family");
  }
}

inline FiniteGroup make_polyhedral_group(Family family) {
  return polyhedral_build(family).group;
}

}  // namespace eqb::detail
