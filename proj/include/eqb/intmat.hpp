#pragma once

// Small exact integer-matrix toolkit: Hermite normal form, integer kernels,
// Smith normal form and fraction-free determinants.  Sizes here stay far
// below 200, entries stay small; plain long long is ample.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace eqb {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        long long v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  friend IntMat operator-(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("matrix difference shape");
    IntMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }

  /// Stack rows of two matrices with equal column count.
  static IntMat vstack(const IntMat& top, const IntMat& bottom) {
    if (top.cols != bottom.cols) throw std::invalid_argument("vstack shape");
    IntMat r(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), r.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(),
              r.a.begin() + static_cast<size_t>(top.rows) * top.cols);
    return r;
  }

  /// Block-diagonal sum.
  static IntMat block_diag(const IntMat& x, const IntMat& y) {
    IntMat r(x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
      for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
  }
};

namespace detail {
inline long long floordiv(long long a, long long b) {
  // b > 0
  long long q = a / b, r = a % b;
  return r < 0 ? q - 1 : q;
}
}  // namespace detail

/// Row-style Hermite normal form: unique canonical basis of the row lattice.
/// Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
/// are dropped.
inline IntMat hermite_normal_form(IntMat m) {
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    // gcd-eliminate column j below row r
    while (true) {
      int best = -1;
      for (int i = r; i < m.rows; ++i)
        if (m.at(i, j) != 0 &&
            (best < 0 || std::abs(m.at(i, j)) < std::abs(m.at(best, j))))
          best = i;
      if (best < 0) break;
      if (best != r)
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(best, c));
      bool again = false;
      for (int i = r + 1; i < m.rows; ++i)
        if (m.at(i, j) != 0) {
          long long q = m.at(i, j) / m.at(r, j);
          for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(r, c);
          if (m.at(i, j) != 0) again = true;
        }
      if (!again) break;
    }
    if (m.at(r, j) == 0) continue;
    if (m.at(r, j) < 0)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
    for (int i = 0; i < r; ++i) {
      long long q = detail::floordiv(m.at(i, j), m.at(r, j));
      if (q != 0)
        for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(r, c);
    }
    ++r;
  }
  IntMat out(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < m.cols; ++c) out.at(i, c) = m.at(i, c);
  return out;
}

inline int rank(const IntMat& m) { return hermite_normal_form(m).rows; }

/// Basis of { x : m x = 0 } as rows in Hermite normal form.
inline IntMat kernel_basis(const IntMat& m) {
  const int n = m.cols;
  IntMat w = m, u = IntMat::identity(n);
  std::vector<int> active(n);
  for (int j = 0; j < n; ++j) active[j] = j;

  auto colsub = [&](int c2, int c1, long long q) {  // col c2 -= q * col c1
    for (int i = 0; i < w.rows; ++i) w.at(i, c2) -= q * w.at(i, c1);
    for (int i = 0; i < n; ++i) u.at(i, c2) -= q * u.at(i, c1);
  };

  for (int r = 0; r < m.rows; ++r) {
    while (true) {
      int c1 = -1;
      for (int c : active)
        if (w.at(r, c) != 0 && (c1 < 0 || std::abs(w.at(r, c)) < std::abs(w.at(r, c1))))
          c1 = c;
      if (c1 < 0) break;
      bool others = false;
      for (int c : active)
        if (c != c1 && w.at(r, c) != 0) {
          colsub(c, c1, w.at(r, c) / w.at(r, c1));
          if (w.at(r, c) != 0) others = true;
        }
      if (!others) {
        active.erase(std::find(active.begin(), active.end(), c1));
        break;
      }
    }
  }
  IntMat basis(static_cast<int>(active.size()), n);
  for (size_t k = 0; k < active.size(); ++k)
    for (int i = 0; i < n; ++i) basis.at(static_cast<int>(k), i) = u.at(i, active[k]);
  return hermite_normal_form(basis);
}

/// Smith normal form invariant factors d1 | d2 | ... (nonzero ones only).
inline std::vector<long long> smith_invariant_factors(IntMat m) {
  std::vector<long long> out;
  int t = 0;
  const int rmax = std::min(m.rows, m.cols);
  while (t < rmax) {
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi < 0 || std::abs(m.at(i, j)) < std::abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pi, c));
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m.rows; ++i)
        if (m.at(i, t) != 0) {
          long long q = m.at(i, t) / m.at(t, t);
          for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(t, c);
          if (m.at(i, t) != 0) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(i, c));
            clean = false;
          }
        }
      for (int j = t + 1; j < m.cols; ++j)
        if (m.at(t, j) != 0) {
          long long q = m.at(t, j) / m.at(t, t);
          for (int r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, t);
          if (m.at(t, j) != 0) {
            for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, j));
            clean = false;
          }
        }
      if (!clean) continue;
      // enforce divisibility of the remaining block
      for (int i = t + 1; i < m.rows && clean; ++i)
        for (int j = t + 1; j < m.cols && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (int c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
            clean = false;
          }
    }
    if (m.at(t, t) < 0)
      for (int c = 0; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
    out.push_back(m.at(t, t));
    ++t;
  }
  return out;
}

/// Fraction-free (Bareiss) determinant; used by invariant tests.
inline long long det(IntMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square only");
  const int n = m.rows;
  std::vector<__int128> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> __int128& { return w[static_cast<size_t>(i) * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * static_cast<long long>(at(n - 1, n - 1));
}

}  // namespace eqb
