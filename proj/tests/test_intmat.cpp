#include "eqb/intmat.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eqb;

namespace {

// deterministic little generator for property loops
struct Lcg {
  unsigned long long s = 0x243f6a8885a308d3ull;
  long long next(long long lo, long long hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long long>((s >> 33) % (hi - lo + 1));
  }
};

IntMat random_matrix(Lcg& r, int rows, int cols, long long span) {
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = r.next(-span, span);
  return m;
}

}  // namespace

TEST_CASE("hermite normal form is canonical") {
  Lcg rng;
  for (int trial = 0; trial < 50; ++trial) {
    IntMat m = random_matrix(rng, 4, 5, 4);
    IntMat h = hermite_normal_form(m);
    CHECK(hermite_normal_form(h) == h);

    // shuffling rows and adding row multiples keeps the row lattice
    IntMat m2 = m;
    for (int i = 0; i < m2.rows; ++i)
      for (int j = 0; j < m2.rows; ++j)
        if (i != j) {
          long long q = rng.next(-2, 2);
          for (int c = 0; c < m2.cols; ++c) m2.at(i, c) += q * m2.at(j, c);
        }
    CHECK(hermite_normal_form(m2) == h);
  }
}

TEST_CASE("hermite pivots are reduced") {
  Lcg rng;
  for (int trial = 0; trial < 30; ++trial) {
    IntMat h = hermite_normal_form(random_matrix(rng, 5, 5, 6));
    int prev_col = -1;
    for (int i = 0; i < h.rows; ++i) {
      int j = 0;
      while (j < h.cols && h.at(i, j) == 0) ++j;
      REQUIRE(j < h.cols);
      CHECK(j > prev_col);
      prev_col = j;
      CHECK(h.at(i, j) > 0);
      for (int k = 0; k < i; ++k) {
        CHECK(h.at(k, j) >= 0);
        CHECK(h.at(k, j) < h.at(i, j));
      }
    }
  }
}

TEST_CASE("kernel basis") {
  SECTION("kernel vectors are annihilated and complete") {
    Lcg rng;
    for (int trial = 0; trial < 40; ++trial) {
      IntMat m = random_matrix(rng, 3, 6, 3);
      IntMat k = kernel_basis(m);
      for (int i = 0; i < k.rows; ++i)
        for (int r = 0; r < m.rows; ++r) {
          long long dot = 0;
          for (int c = 0; c < m.cols; ++c) dot += m.at(r, c) * k.at(i, c);
          REQUIRE(dot == 0);
        }
      CHECK(k.rows + rank(m) == m.cols);
    }
  }
  SECTION("identity has no kernel") {
    CHECK(kernel_basis(IntMat::identity(4)).rows == 0);
  }
  SECTION("zero matrix has everything") {
    IntMat z(3, 3);
    CHECK(kernel_basis(z) == IntMat::identity(3));
  }
  SECTION("kernel generator is primitive") {
    // x + 2y = 0 has primitive kernel (2, -1) up to sign and HNF
    IntMat m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    IntMat k = kernel_basis(m);
    REQUIRE(k.rows == 1);
    CHECK(k.at(0, 0) == 2);
    CHECK(k.at(0, 1) == -1);
  }
}

TEST_CASE("smith invariant factors") {
  SECTION("diagonal examples") {
    IntMat d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    CHECK(smith_invariant_factors(d) == std::vector<long long>{1, 6});
    d.at(0, 0) = 4;
    d.at(1, 1) = 6;
    CHECK(smith_invariant_factors(d) == std::vector<long long>{2, 12});
  }
  SECTION("divisibility chain and determinant product") {
    Lcg rng;
    for (int trial = 0; trial < 40; ++trial) {
      IntMat m = random_matrix(rng, 4, 4, 4);
      auto f = smith_invariant_factors(m);
      for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
      long long d = det(m);
      if (d != 0) {
        REQUIRE(f.size() == 4);
        long long prod = 1;
        for (long long x : f) prod *= x;
        CHECK(prod == std::abs(d));
      } else {
        CHECK(f.size() < 4);
      }
    }
  }
}

TEST_CASE("determinant") {
  IntMat m(3, 3);
  const long long vals[9] = {2, 0, 1, 1, 3, -1, 0, 5, 4};
  for (int i = 0; i < 9; ++i) m.a[i] = vals[i];
  CHECK(det(m) == 39);  // 2*(12+5) + 1*5
  CHECK(det(IntMat::identity(5)) == 1);
  SECTION("multiplicativity") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
      IntMat a = random_matrix(rng, 3, 3, 3), b = random_matrix(rng, 3, 3, 3);
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}
