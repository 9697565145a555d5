// Acceptance suite: each criterion prints one PASS/FAIL line.  Run with a
// number 1..9 to execute a single criterion, with no argument to run all.
// The exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "eqb/cli.hpp"

using namespace eqb;

namespace {

std::vector<std::pair<Family, int>> catalogue(int lo = 2, int hi = 12) {
  std::vector<std::pair<Family, int>> v;
  for (int n = lo; n <= hi; ++n) v.push_back({Family::Cyclic, n});
  for (int n = lo; n <= hi; ++n) v.push_back({Family::Dihedral, n});
  v.push_back({Family::Tetrahedral, 0});
  v.push_back({Family::Octahedral, 0});
  v.push_back({Family::Icosahedral, 0});
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. copy-count table reproduction, exact, < 5 s
bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  if (cli::run({"table1", "--max-n", "12", "--format", "csv"}, out, err) != 0) {
    detail = "table1 command failed";
    return false;
  }
  std::map<std::string, std::pair<long long, long long>> want;
  for (int n = 2; n <= 12; ++n) {
    want["cyclic," + std::to_string(n)] = {n - 1, n};
    want["dihedral," + std::to_string(n)] = {4 * n - 1, 4 * n};
  }
  want["tetrahedral,"] = {11, 12};
  want["octahedral,"] = {23, 24};
  want["icosahedral,"] = {59, 60};

  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  size_t matched = 0;
  while (std::getline(lines, line)) {
    auto last = line.rfind(',');
    auto second_last = line.rfind(',', last - 1);
    std::string key = line.substr(0, second_last);
    long long chi = std::stoll(line.substr(second_last + 1, last - second_last - 1));
    long long ncells = std::stoll(line.substr(last + 1));
    auto it = want.find(key);
    if (it == want.end() || it->second != std::make_pair(chi, ncells)) {
      detail = "row mismatch at " + line;
      return false;
    }
    ++matched;
  }
  if (matched != want.size()) {
    detail = "missing rows";
    return false;
  }
  double dt = seconds_since(t0);
  if (dt >= 5.0) {
    detail = "too slow: " + std::to_string(dt) + " s";
    return false;
  }
  detail = "25 rows exact in " + std::to_string(dt) + " s";
  return true;
}

// 2. Riemann-Hurwitz identity across the catalogue
bool criterion2(std::string& detail) {
  for (auto [f, n] : catalogue()) {
    RHReport r = riemann_hurwitz_check(build_skeleton(f, n));
    if (!r.holds) {
      detail = std::string(family_name(f)) + " n=" + std::to_string(n) +
               ": chi_X=" + std::to_string(r.chi_X) + " vs " +
               std::to_string(r.group_order) + "*" + std::to_string(r.chi_A) +
               "-" + std::to_string(r.singular_sum);
      return false;
    }
  }
  detail = "exact for cyclic/dihedral n=2..12 and the polyhedral actions";
  return true;
}

// 3. Euler characteristics
bool criterion3(std::string& detail) {
  for (int n = 2; n <= 12; ++n) {
    if (euler_char(build_skeleton(Family::Cyclic, n)) != 2 - n) {
      detail = "cyclic n=" + std::to_string(n);
      return false;
    }
    if (euler_char(build_skeleton(Family::Dihedral, n)) != 2 - 4 * n) {
      detail = "dihedral n=" + std::to_string(n);
      return false;
    }
  }
  if (euler_char(build_skeleton(Family::Tetrahedral)) != -10 ||
      euler_char(build_skeleton(Family::Octahedral)) != -22 ||
      euler_char(build_skeleton(Family::Icosahedral)) != -58) {
    detail = "polyhedral chi";
    return false;
  }
  detail = "2-n, 2-4n, -10, -22, -58 all exact";
  return true;
}

// 4. group-ring fixed points, including the literal suspension/2-cell claims
// for the dihedral direct-sum model
bool criterion4(std::string& detail) {
  for (auto [f, n] : catalogue()) {
    FiniteGroup g = make_group(f, n);
    Sublattice fr = fixed_points(build_module(ModuleKind::Regular, g));
    bool norm = fr.rank() == 1;
    for (int j = 0; norm && j < fr.basis.cols; ++j)
      if (fr.basis.at(0, j) != 1) norm = false;
    if (!norm) {
      detail = std::string(family_name(f)) + ": Fix(ZGamma) not the norm line";
      return false;
    }
    if (fixed_points(build_module(ModuleKind::AugmentationIdeal, g)).rank() != 0) {
      detail = std::string(family_name(f)) + ": Fix(I) != 0";
      return false;
    }
  }
  // Dihedral direct-sum model, as stated: Fix of the full suspension module
  // equal to 0 and Fix of the 2-cell module of rank = rank(pi1).
  const int pi1_rank = TargetGroup::circle().pi1().rank;
  for (int n = 2; n <= 12; ++n) {
    GammaComplex c = build_skeleton(Family::Dihedral, n);
    ChainModel cm = chain_model(c, TargetGroup::circle());
    long long sigma_fix = fixed_points(cm.sigma_x).rank();
    long long two_fix = fixed_points(cm.two_cell).rank();
    if (sigma_fix != 0 || two_fix != pi1_rank) {
      detail = "dihedral n=" + std::to_string(n) +
               ": computed Fix(sigmaX)=" + std::to_string(sigma_fix) +
               " (stated 0), Fix(two-cell)=" + std::to_string(two_fix) +
               " (stated rank(pi1)=" + std::to_string(pi1_rank) +
               "); independent chain oracle: Fix(H1(X))=" +
               std::to_string(h1_fixed_rank(c)) +
               " confirms the computed suspension value. The stated dihedral "
               "values contradict the I(+)ZGamma / ZGamma(+)ZGamma model "
               "fixed by the rank checks.";
      return false;
    }
  }
  detail = "norm-line and ideal fixed points exact for all families";
  return true;
}

// 5. augmentation image of the fixed 2-cell sublattice has index |Gamma|
bool criterion5(std::string& detail) {
  for (auto [f, n] : catalogue()) {
    FixedSequenceReport r =
        fixed_sequence_check(build_skeleton(f, n), TargetGroup::circle());
    if (r.augmentation_index != r.gamma_order) {
      detail = std::string(family_name(f)) + " n=" + std::to_string(n) +
               ": index " + std::to_string(r.augmentation_index);
      return false;
    }
  }
  detail = "indices n, 2n, 12, 24, 60 all exact";
  return true;
}

// 6. representation counts over the circle target
bool criterion6(std::string& detail) {
  for (auto [f, n] : catalogue()) {
    IsotropyGroupoid g = isotropy_groupoid(orbit_graph(build_skeleton(f, n)));
    RepSpace rs = enumerate_reps(g, TargetGroup::circle());
    long long formula = 1;
    for (int k : g.vertex_group_order) formula *= k;
    long long want = f == Family::Cyclic     ? static_cast<long long>(n) * n
                     : f == Family::Dihedral ? 4LL * n
                     : f == Family::Tetrahedral ? 18
                     : f == Family::Octahedral  ? 24
                                                : 30;
    if (rs.count != formula || rs.count != want) {
      detail = std::string(family_name(f)) + ": count " + std::to_string(rs.count);
      return false;
    }
    if (rs.count <= 10000 &&
        (!rs.materialized ||
         static_cast<long long>(rs.classes.size()) != rs.count)) {
      detail = std::string(family_name(f)) + ": materialized size mismatch";
      return false;
    }
    GroupoidReport v = validate_groupoid(g);
    if (f == Family::Tetrahedral || f == Family::Octahedral) {
      if (!v.matches_expected) {
        detail = std::string(family_name(f)) + " does not match its factor list";
        return false;
      }
    }
    if (f == Family::Icosahedral) {
      if (v.matches_expected || v.notes.empty()) {
        detail = "icosahedral discrepancy with the stated {3,4,5} list was not "
                 "reported";
        return false;
      }
    }
  }
  detail =
      "cyclic n^2, dihedral 4n, polyhedral 18/24/30 (computed stabilizer "
      "orders normative; icosahedral discrepancy reported)";
  return true;
}

// 7. beta surjectivity and the double-coset fiber identity, < 60 s
bool criterion7(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  TargetGroup d6 = TargetGroup::finite_group(make_group(Family::Dihedral, 3));
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::Cyclic, 2},
           {Family::Cyclic, 3},
           {Family::Tetrahedral, 0},
           {Family::Octahedral, 0}}) {
    BetaTauReport r =
        check_beta_tau(isotropy_groupoid(orbit_graph(build_skeleton(f, n))), d6);
    if (!r.ok) {
      detail = std::string(family_name(f)) + ": " + r.counterexample;
      return false;
    }
  }
  BetaTauReport edge = check_beta_tau(
      isotropy_groupoid(orbit_graph(build_skeleton(Family::Cyclic, 2))), d6);
  bool fiber2 = false;
  for (const auto& fc : edge.fibers)
    if (fc.class_a == 1 && fc.class_b == 1 && fc.fiber_size == 2 &&
        fc.double_coset_count == 2)
      fiber2 = true;
  if (!edge.fiber_applicable || !fiber2) {
    detail = "flip/flip fiber of size 2 not found on the single-edge instance";
    return false;
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    detail = "too slow: " + std::to_string(dt) + " s";
    return false;
  }
  detail = "no counterexample; single-edge flip fiber = 2 = double cosets (" +
           std::to_string(dt) + " s)";
  return true;
}

// 8. classification equals the clutching-oracle prediction; congruence holds
bool criterion8(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    ClassifyResult r = classify(Family::Cyclic, n, TargetGroup::circle(), -12, 12);
    std::map<std::pair<int, int>, std::vector<long long>> got;
    for (const auto& b : r.classes)
      got[{b.rep.assignment[0].circle_residue, b.rep.assignment[1].circle_residue}]
          .push_back(*b.chern);
    if (got.size() != static_cast<size_t>(n) * n) {
      detail = "n=" + std::to_string(n) + ": rep count";
      return false;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<long long> want;
        for (long long c = -12; c <= 12; ++c)
          if (((c - (a - b)) % n + n) % n == 0) want.push_back(c);
        if (got[{a, b}] != want) {
          detail = "n=" + std::to_string(n) + " weights (" + std::to_string(a) +
                   "," + std::to_string(b) + ")";
          return false;
        }
      }
    for (size_t i = 0; i < r.classes.size(); ++i)
      for (size_t j = i + 1; j < r.classes.size(); ++j)
        if (!congruence_check(r.classes[i], r.classes[j], r.gamma_order)) {
          detail = "congruence violated, n=" + std::to_string(n);
          return false;
        }
  }
  detail = "realizable Chern values = (a-b) + nZ on [-12,12] for n=1..6";
  return true;
}

// 9. the whole property battery through one CLI command
bool criterion9(std::string& detail) {
  std::ostringstream out, err;
  int code = cli::run({"verify"}, out, err);
  if (code != 0) {
    detail = "verify exited " + std::to_string(code) + ": " + err.str();
    return false;
  }
  detail =
      "CLI verify exits 0; checked paths are integer-only by construction "
      "(the sole floating-point output is the optional coordinate export)";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  struct Entry {
    int id;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const auto& e : entries) {
    if (only != 0 && e.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::cout << "CRITERION " << e.id << ": " << (ok ? "PASS" : "FAIL")
              << (detail.empty() ? "" : " - " + detail) << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
