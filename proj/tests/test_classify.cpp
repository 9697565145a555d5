#include "eqb/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "eqb/zmodule.hpp"

using namespace eqb;

TEST_CASE("clutching oracle") {
  SECTION("weights (2,0) under the order-3 rotation give residue 2") {
    ChernCoset c = clutching_oracle(3, 2, 0);
    CHECK(c.modulus == 3);
    REQUIRE(c.known_base.has_value());
    CHECK(*c.known_base == 2);
  }
  SECTION("trivial group realizes every degree") {
    ChernCoset c = clutching_oracle(1, 0, 0);
    CHECK(c.modulus == 1);
    CHECK(*c.known_base == 0);
  }
  SECTION("equal weights force degree 0 mod n") {
    for (int j = 0; j < 4; ++j) {
      ChernCoset c = clutching_oracle(4, j, j);
      CHECK(c.modulus == 4);
      CHECK(*c.known_base == 0);
    }
  }
  SECTION("base is always the reduced weight difference") {
    for (int n = 1; n <= 8; ++n)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          CHECK(*clutching_oracle(n, a, b).known_base == ((a - b) % n + n) % n);
  }
}

TEST_CASE("congruence predicate") {
  RepClass r1, r2;
  HomClass h;
  h.kind = TargetGroup::Kind::Circle;
  h.k = 2;
  r1.assignment = {h, h};
  h.circle_residue = 1;
  r2.assignment = {h, h};

  BundleClass b1{r1, 1, std::nullopt};
  BundleClass b2{r1, 5, std::nullopt};
  BundleClass b3{r1, 2, std::nullopt};
  BundleClass b4{r2, 2, std::nullopt};
  CHECK(congruence_check(b1, b2, 2));        // same rep, 1 = 5 mod 2
  CHECK_FALSE(congruence_check(b1, b3, 2));  // violation certificate
  CHECK(congruence_check(b1, b4, 2));        // different reps: out of scope
}

TEST_CASE("classification for cyclic actions with circle target") {
  SECTION("n=2, window [-5,5], weights (1,0) give the odd values") {
    ClassifyResult r = classify(Family::Cyclic, 2, TargetGroup::circle(), -5, 5);
    std::vector<long long> got;
    for (const auto& b : r.classes)
      if (b.rep.assignment[0].circle_residue == 1 &&
          b.rep.assignment[1].circle_residue == 0)
        got.push_back(*b.chern);
    CHECK(got == std::vector<long long>{-5, -3, -1, 1, 3, 5});
  }
  SECTION("trivial group: classes are the window") {
    ClassifyResult r = classify(Family::Cyclic, 1, TargetGroup::circle(), -2, 2);
    REQUIRE(r.classes.size() == 5);
    std::vector<long long> got;
    for (const auto& b : r.classes) got.push_back(*b.chern);
    CHECK(got == std::vector<long long>{-2, -1, 0, 1, 2});
  }
  SECTION("oracle equivalence over n = 1..6, window [-12,12]") {
    for (int n = 1; n <= 6; ++n) {
      ClassifyResult r = classify(Family::Cyclic, n, TargetGroup::circle(), -12, 12);
      std::map<std::pair<int, int>, std::vector<long long>> got;
      for (const auto& b : r.classes) {
        REQUIRE(b.chern.has_value());
        got[{b.rep.assignment[0].circle_residue,
             b.rep.assignment[1].circle_residue}]
            .push_back(*b.chern);
      }
      REQUIRE(got.size() == static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
          std::vector<long long> want;
          for (long long c = -12; c <= 12; ++c)
            if (((c - (a - bb)) % n + n) % n == 0) want.push_back(c);
          CHECK(got[{a, bb}] == want);
        }
      for (size_t i = 0; i < r.classes.size(); ++i)
        for (size_t j = i + 1; j < r.classes.size(); ++j)
          REQUIRE(congruence_check(r.classes[i], r.classes[j], r.gamma_order));
    }
  }
  SECTION("output is ordered rep-lexicographic, then chern ascending") {
    ClassifyResult r = classify(Family::Cyclic, 3, TargetGroup::circle(), -6, 6);
    for (size_t i = 1; i < r.classes.size(); ++i) {
      const auto& prev = r.classes[i - 1];
      const auto& cur = r.classes[i];
      bool rep_le = prev.rep < cur.rep ||
                    (prev.rep == cur.rep && *prev.chern < *cur.chern);
      CHECK(rep_le);
    }
  }
}

TEST_CASE("oracle modulus agrees with the augmentation index") {
  for (int n = 2; n <= 6; ++n) {
    FixedSequenceReport fs =
        fixed_sequence_check(build_skeleton(Family::Cyclic, n), TargetGroup::circle());
    ChernCoset c = clutching_oracle(n, 1, 0);
    CHECK(c.modulus == fs.augmentation_index);
  }
}

TEST_CASE("pi1-trivial targets classify by representation alone") {
  ClassifyResult r = classify(Family::Tetrahedral, 0, TargetGroup::su2(), -5, 5);
  // vertex orders (3,2,3): su2 class counts 2*2*2
  CHECK(r.classes.size() == 8);
  for (const auto& b : r.classes) {
    CHECK_FALSE(b.chern.has_value());
    CHECK_FALSE(b.coset.has_value());
  }
  CHECK_FALSE(r.symbolic);
}

TEST_CASE("non-cyclic families with circle target emit symbolic cosets") {
  ClassifyResult r = classify(Family::Octahedral, 0, TargetGroup::circle(), -5, 5);
  CHECK(r.symbolic);
  CHECK(r.classes.size() == 24);  // one symbolic class per representation
  for (const auto& b : r.classes) {
    CHECK_FALSE(b.chern.has_value());
    REQUIRE(b.coset.has_value());
    CHECK(b.coset->modulus == 24);
    CHECK_FALSE(b.coset->known_base.has_value());
  }
  ClassifyResult d = classify(Family::Dihedral, 2, TargetGroup::unitary(2), -3, 3);
  CHECK(d.symbolic);
}

TEST_CASE("classification refuses disconnected targets") {
  TargetGroup t = TargetGroup::finite_group(make_group(Family::Dihedral, 3));
  CHECK_THROWS_WITH(classify(Family::Cyclic, 2, t, -2, 2),
                    Catch::Matchers::ContainsSubstring("connected"));
  // the trivial finite group is connected, so it passes
  TargetGroup triv = TargetGroup::finite_group(make_group(Family::Cyclic, 1));
  CHECK_NOTHROW(classify(Family::Cyclic, 2, triv, -2, 2));
}

TEST_CASE("classes compare by representation and chern value") {
  ClassifyResult r = classify(Family::Cyclic, 2, TargetGroup::circle(), -2, 2);
  for (size_t i = 0; i < r.classes.size(); ++i)
    for (size_t j = 0; j < r.classes.size(); ++j) {
      bool equal = r.classes[i] == r.classes[j];
      CHECK(equal == (i == j));
    }
}
