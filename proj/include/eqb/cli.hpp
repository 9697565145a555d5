#pragma once

// Batch command-line surface.  Exit codes: 0 = success and all checks pass,
// 1 = a mathematical check failed (a certificate is emitted), 2 = usage
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eqb/json_io.hpp"

namespace eqb::cli {

struct CommandConfig {
  std::string subcommand;
  std::string family;
  int n = 0;
  std::string target = "circle";
  std::string window;
  std::string format = "json";
  std::string output;
  int max_n = 12;
  bool all = false;
  bool coords = false;
  bool emit_modules = false;
  int bound = 24;
  bool verbose = false;
};

inline TargetGroup parse_target(const std::string& s) {
  if (s == "circle") return TargetGroup::circle();
  if (s == "su2") return TargetGroup::su2();
  if (s.rfind("unitary:", 0) == 0)
    return TargetGroup::unitary(std::stoi(s.substr(8)));
  if (s.rfind("finite:", 0) == 0) {
    std::string rest = s.substr(7);
    auto colon = rest.find(':');
    std::string fam = colon == std::string::npos ? rest : rest.substr(0, colon);
    int n = colon == std::string::npos ? 0 : std::stoi(rest.substr(colon + 1));
    return TargetGroup::finite_group(make_group(parse_family(fam), n));
  }
  throw std::invalid_argument(
      "unknown target '" + s +
      "' (expected circle, su2, unitary:<rank>, finite:<family>[:<n>])");
}

inline std::pair<long long, long long> parse_window(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw std::invalid_argument("window must look like <lo>..<hi>");
  long long lo = std::stoll(s.substr(0, pos));
  long long hi = std::stoll(s.substr(pos + 2));
  if (lo > hi) throw std::invalid_argument("window is empty");
  return {lo, hi};
}

namespace detail_cli {

inline void emit(const CommandConfig& cfg, const std::string& doc,
                 std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << doc;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.output);
  f << doc;
}

inline std::vector<std::pair<Family, int>> family_list(const CommandConfig& cfg) {
  std::vector<std::pair<Family, int>> out;
  if (cfg.all) {
    for (int n = 2; n <= cfg.max_n; ++n) out.push_back({Family::Cyclic, n});
    for (int n = 2; n <= cfg.max_n; ++n) out.push_back({Family::Dihedral, n});
    out.push_back({Family::Tetrahedral, 0});
    out.push_back({Family::Octahedral, 0});
    out.push_back({Family::Icosahedral, 0});
  } else {
    Family f = parse_family(cfg.family);
    out.push_back({f, family_takes_n(f) ? cfg.n : 0});
  }
  return out;
}

inline GammaComplex complex_for(Family f, int n) {
  if (f == Family::Cyclic && n == 1) return eqb::detail::trivial_cyclic_complex();
  return build_skeleton(f, n);
}

// ---- subcommand bodies ----------------------------------------------------

inline int cmd_skeleton(const CommandConfig& cfg, std::ostream& out) {
  GammaComplex c = build_skeleton(parse_family(cfg.family), cfg.n);
  json j = complex_json(c);
  if (cfg.coords) j["coordinates"] = coordinates_json(c);
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

inline int cmd_orbit(const CommandConfig& cfg, std::ostream& out) {
  GammaComplex c = build_skeleton(parse_family(cfg.family), cfg.n);
  OrbitGraph a = orbit_graph(c);
  IsotropyGroupoid g = isotropy_groupoid(a);
  json j;
  j["group"] = group_json(c.group);
  j["orbit_graph"] = orbit_graph_json(a);
  j["groupoid"] = groupoid_json(g);
  GroupoidReport rep = validate_groupoid(g);
  j["vertex_orders"] = rep.vertex_orders;
  j["notes"] = rep.notes;
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

inline int cmd_rh_check(const CommandConfig& cfg, std::ostream& out,
                        std::ostream& err) {
  json arr = json::array();
  bool all_hold = true;
  for (auto [f, n] : family_list(cfg)) {
    GammaComplex c = build_skeleton(f, n);
    RHReport r = riemann_hurwitz_check(c);
    arr.push_back(rh_report_json(c, r));
    if (!r.holds) {
      all_hold = false;
      err << "rh-check failed for " << family_name(f) << " n=" << n
          << ": chi_X=" << r.chi_X << " != " << r.group_order << "*" << r.chi_A
          << " - " << r.singular_sum << "\n";
    }
  }
  if (cfg.format == "plain") {
    std::string doc;
    for (const auto& e : arr) {
      doc += e["group"]["family"].get<std::string>();
      if (e["group"].contains("n"))
        doc += " n=" + std::to_string(e["group"]["n"].get<int>());
      doc += ": chi_X=" + std::to_string(e["chi_X"].get<long long>()) +
             " chi_A=" + std::to_string(e["chi_A"].get<long long>()) +
             " singular_sum=" + std::to_string(e["singular_sum"].get<long long>()) +
             (e["holds"].get<bool>() ? " holds" : " FAILS") + "\n";
    }
    emit(cfg, doc, out);
  } else {
    emit(cfg, (arr.size() == 1 ? arr[0] : arr).dump(2) + "\n", out);
  }
  return all_hold ? 0 : 1;
}

inline int cmd_reps(const CommandConfig& cfg, std::ostream& out) {
  GammaComplex c = build_skeleton(parse_family(cfg.family), cfg.n);
  IsotropyGroupoid g = isotropy_groupoid(orbit_graph(c));
  RepSpace rs = enumerate_reps(g, parse_target(cfg.target));
  json j = rep_space_json(rs);
  j["group"] = group_json(c.group);
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

inline int cmd_zmod_check(const CommandConfig& cfg, std::ostream& out,
                          std::ostream& err) {
  TargetGroup target = parse_target(cfg.target);
  json arr = json::array();
  for (auto [f, n] : family_list(cfg)) {
    try {
      GammaComplex c = complex_for(f, n);
      FixedSequenceReport r = fixed_sequence_check(c, target);
      json j = fixed_sequence_json(r);
      if (cfg.emit_modules) {
        ChainModel cm = chain_model(c, target);
        j["modules"] = {{"sigma_x", module_json(cm.sigma_x)},
                        {"two_cell", module_json(cm.two_cell)}};
        j["two_cell_fixed"] = sublattice_json(fixed_points(cm.two_cell));
      }
      arr.push_back(j);
    } catch (const std::runtime_error& e) {
      err << "zmod-check failed for " << family_name(f) << " n=" << n << ": "
          << e.what() << "\n";
      return 1;
    }
  }
  emit(cfg, (arr.size() == 1 ? arr[0] : arr).dump(2) + "\n", out);
  return 0;
}

inline int cmd_table1(const CommandConfig& cfg, std::ostream& out) {
  struct Row {
    std::string family;
    std::string n;
    long long one_minus_chi;
    long long ncells;
  };
  std::vector<Row> rows;
  auto add = [&](Family f, int n) {
    GammaComplex c = build_skeleton(f, n);
    rows.push_back({family_name(f), family_takes_n(f) ? std::to_string(n) : "",
                    1 - euler_char(c), two_cell_count(c)});
  };
  for (int n = 2; n <= cfg.max_n; ++n) add(Family::Cyclic, n);
  for (int n = 2; n <= cfg.max_n; ++n) add(Family::Dihedral, n);
  add(Family::Tetrahedral, 0);
  add(Family::Octahedral, 0);
  add(Family::Icosahedral, 0);

  std::string doc;
  if (cfg.format == "csv") {
    doc = "family,n,one_minus_chi,N\n";
    for (const auto& r : rows)
      doc += r.family + "," + r.n + "," + std::to_string(r.one_minus_chi) + "," +
             std::to_string(r.ncells) + "\n";
  } else if (cfg.format == "plain") {
    for (const auto& r : rows)
      doc += r.family + (r.n.empty() ? "" : " n=" + r.n) + ": 1-chi=" +
             std::to_string(r.one_minus_chi) + " N=" + std::to_string(r.ncells) +
             "\n";
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json e;
      e["family"] = r.family;
      if (!r.n.empty()) e["n"] = std::stoi(r.n);
      e["one_minus_chi"] = r.one_minus_chi;
      e["N"] = r.ncells;
      arr.push_back(e);
    }
    doc = arr.dump(2) + "\n";
  }
  emit(cfg, doc, out);
  return 0;
}

inline int cmd_classify(const CommandConfig& cfg, std::ostream& out) {
  Family f = parse_family(cfg.family);
  TargetGroup target = parse_target(cfg.target);
  long long order = f == Family::Cyclic     ? cfg.n
                    : f == Family::Dihedral ? 2LL * cfg.n
                    : f == Family::Tetrahedral ? 12
                    : f == Family::Octahedral  ? 24
                                               : 60;
  long long lo = -2 * order, hi = 2 * order;
  if (!cfg.window.empty()) std::tie(lo, hi) = parse_window(cfg.window);
  ClassifyResult r = classify(f, cfg.n, target, lo, hi);
  emit(cfg, classify_json(r).dump(2) + "\n", out);
  return 0;
}

inline int cmd_beta_check(const CommandConfig& cfg, std::ostream& out,
                          std::ostream& err) {
  GammaComplex c = build_skeleton(parse_family(cfg.family), cfg.n);
  IsotropyGroupoid g = isotropy_groupoid(orbit_graph(c));
  BetaTauReport r = check_beta_tau(g, parse_target(cfg.target), cfg.bound);
  json j = beta_tau_json(r);
  j["group"] = group_json(c.group);
  j["target"] = cfg.target;
  emit(cfg, j.dump(2) + "\n", out);
  if (!r.ok) {
    err << "beta-check counterexample: " << r.counterexample << "\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace detail_cli

/// Parse and dispatch.  The stream arguments make the whole surface
/// testable in-process.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"equivariant principal bundles over the 2-sphere"};
  app.require_subcommand(1);
  CommandConfig cfg;
  if (const char* v = std::getenv("EQB_VERBOSE"))
    cfg.verbose = std::string(v) != "0" && std::string(v) != "";

  auto add_family = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--family", cfg.family,
                              "cyclic|dihedral|tetrahedral|octahedral|icosahedral");
    if (required) f->required();
    sub->add_option("--n", cfg.n, "parameter for cyclic/dihedral");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--output", cfg.output, "output path ('-' = stdout)");
  };

  auto* skeleton = app.add_subcommand("skeleton", "emit a 1-skeleton complex");
  add_family(skeleton, true);
  add_output(skeleton);
  skeleton->add_flag("--coords", cfg.coords, "include unit-sphere coordinates");

  auto* orbit = app.add_subcommand("orbit", "emit orbit graph and groupoid");
  add_family(orbit, true);
  add_output(orbit);

  auto* rh = app.add_subcommand("rh-check", "Riemann-Hurwitz identity");
  add_family(rh, false);
  add_output(rh);
  rh->add_flag("--all", cfg.all, "run every family");
  rh->add_option("--max-n", cfg.max_n, "n range bound for --all");

  auto* reps = app.add_subcommand("reps", "enumerate isotropy representations");
  add_family(reps, true);
  add_output(reps);
  reps->add_option("--target", cfg.target, "structural group");

  auto* zmod = app.add_subcommand("zmod-check", "group-ring fixed point checks");
  add_family(zmod, false);
  add_output(zmod);
  zmod->add_flag("--all", cfg.all, "run every family");
  zmod->add_option("--max-n", cfg.max_n, "n range bound for --all");
  zmod->add_option("--target", cfg.target, "structural group");
  zmod->add_flag("--emit-modules", cfg.emit_modules, "include action matrices");

  auto* table1 = app.add_subcommand("table1", "per-family copy counts");
  add_output(table1);
  table1->add_option("--max-n", cfg.max_n, "n range bound");

  auto* classify_cmd = app.add_subcommand("classify", "bundle classification");
  add_family(classify_cmd, true);
  add_output(classify_cmd);
  classify_cmd->add_option("--target", cfg.target, "structural group");
  classify_cmd->add_option("--window", cfg.window, "Chern window lo..hi");

  auto* beta = app.add_subcommand("beta-check", "brute-force lifting checks");
  add_family(beta, true);
  add_output(beta);
  beta->add_option("--target", cfg.target, "finite structural group");
  beta->add_option("--bound", cfg.bound, "max finite target order");

  auto* verify = app.add_subcommand("verify", "run the whole property suite");
  add_output(verify);
  verify->add_option("--max-n", cfg.max_n, "n range bound");

  std::vector<const char*> argv = {"eqbundle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    using namespace detail_cli;
    for (const CLI::App* sub : app.get_subcommands())
      if (cfg.verbose)
        err << "eqbundle: running " << sub->get_name() << " family=" << cfg.family
            << " n=" << cfg.n << " target=" << cfg.target << "\n";
    if (skeleton->parsed()) {
      cfg.subcommand = "skeleton";
      return cmd_skeleton(cfg, out);
    }
    if (orbit->parsed()) {
      cfg.subcommand = "orbit";
      return cmd_orbit(cfg, out);
    }
    if (rh->parsed()) {
      cfg.subcommand = "rh-check";
      return cmd_rh_check(cfg, out, err);
    }
    if (reps->parsed()) {
      cfg.subcommand = "reps";
      return cmd_reps(cfg, out);
    }
    if (zmod->parsed()) {
      cfg.subcommand = "zmod-check";
      return cmd_zmod_check(cfg, out, err);
    }
    if (table1->parsed()) {
      cfg.subcommand = "table1";
      return cmd_table1(cfg, out);
    }
    if (classify_cmd->parsed()) {
      cfg.subcommand = "classify";
      return cmd_classify(cfg, out);
    }
    if (beta->parsed()) {
      cfg.subcommand = "beta-check";
      return cmd_beta_check(cfg, out, err);
    }
    if (verify->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

// ---- verify ----------------------------------------------------------------

namespace detail_cli {

/// End-to-end property battery over the whole catalogue; every check is an
/// exact integer identity.  Returns 0 only if everything holds.
inline int cmd_verify(const CommandConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok,
                   const std::string& detail = "") {
    if (ok) {
      out << "ok: " << name << "\n";
    } else {
      ++failures;
      out << "FAIL: " << name << (detail.empty() ? "" : " - " + detail) << "\n";
      err << "FAIL: " << name << (detail.empty() ? "" : " - " + detail) << "\n";
    }
  };
  const int max_n = std::min(cfg.max_n, 12);

  std::vector<std::pair<Family, int>> families;
  for (int n = 2; n <= max_n; ++n) families.push_back({Family::Cyclic, n});
  for (int n = 2; n <= max_n; ++n) families.push_back({Family::Dihedral, n});
  families.push_back({Family::Tetrahedral, 0});
  families.push_back({Family::Octahedral, 0});
  families.push_back({Family::Icosahedral, 0});

  {  // group laws and class equation
    bool ok = true;
    std::string what;
    for (auto [f, n] : families) {
      FiniteGroup g = make_group(f, n);
      try {
        validate_group(g);
      } catch (const std::exception& e) {
        ok = false;
        what = e.what();
        break;
      }
      long long total = 0;
      for (const auto& cls : conjugacy_classes(g)) {
        total += static_cast<long long>(cls.members.size());
        if (g.order % cls.members.size() != 0) ok = false;
      }
      if (total != g.order) ok = false;
      for (int a = 0; a < g.order && ok; ++a)
        for (int b = 0; b < g.order; ++b)
          if (g.inverse(g.op(a, b)) != g.op(g.inverse(b), g.inverse(a))) {
            ok = false;
            what = "product inverse law";
            break;
          }
    }
    check("group laws, class equation, inverse law", ok, what);
  }

  {  // complexes: validity, regularity, orbit-stabilizer, Riemann-Hurwitz
    bool ok = true;
    std::string what;
    for (auto [f, n] : families) {
      GammaComplex c = build_skeleton(f, n);
      if (!validate_complex(c).empty() || !check_regular(c).empty()) {
        ok = false;
        what = std::string(family_name(f)) + " complex invalid";
        break;
      }
      OrbitGraph a = orbit_graph(c);
      for (int o = 0; o < a.num_vertex_orbits(); ++o)
        if (static_cast<int>(a.vertex_orbits[o].size() * a.vertex_stab[o].size()) !=
            c.group.order)
          ok = false;
      for (int o = 0; o < a.num_edge_orbits(); ++o)
        if (static_cast<int>(a.edge_orbits[o].size() * a.edge_stab[o].size()) !=
            c.group.order)
          ok = false;
      RHReport r = riemann_hurwitz_check(c);
      if (!r.holds) {
        ok = false;
        what = std::string(family_name(f)) + " Riemann-Hurwitz fails";
      }
      const auto [want_sigma, want_two] = copy_counts(f, n);
      if (1 - euler_char(c) != want_sigma || two_cell_count(c) != want_two) {
        ok = false;
        what = std::string(family_name(f)) + " copy counts off";
      }
    }
    check("skeleton regularity, orbit-stabilizer, Riemann-Hurwitz, copy counts",
          ok, what);
  }

  {  // groupoids
    bool ok = true;
    std::string what;
    for (auto [f, n] : families) {
      IsotropyGroupoid g = isotropy_groupoid(orbit_graph(build_skeleton(f, n)));
      GroupoidReport r = validate_groupoid(g);
      if (!r.cellular || !r.face_compatible || !r.locally_maximal) {
        ok = false;
        what = std::string(family_name(f)) + " groupoid structure";
      }
      std::vector<int> want;
      switch (f) {
        case Family::Cyclic: want = {n, n}; break;
        case Family::Dihedral: want = {2, 2, n}; break;
        case Family::Tetrahedral: want = {2, 3, 3}; break;
        case Family::Octahedral: want = {2, 3, 4}; break;
        case Family::Icosahedral: want = {2, 3, 5}; break;
      }
      std::sort(want.begin(), want.end());
      if (r.signature != want) {
        ok = false;
        what = std::string(family_name(f)) + " vertex-order signature";
      }
    }
    check("isotropy groupoid signatures and face inclusions", ok, what);
  }

  {  // group-ring fixed points and the |Gamma| index
    bool ok = true;
    std::string what;
    for (auto [f, n] : families) {
      try {
        FixedSequenceReport r =
            fixed_sequence_check(build_skeleton(f, n), TargetGroup::circle());
        if (r.augmentation_index != r.gamma_order) ok = false;
      } catch (const std::exception& e) {
        ok = false;
        what = e.what();
      }
    }
    check("group-ring fixed points, augmentation index = |Gamma|, coker", ok,
          what);
  }

  {  // Hom class counts and rep-space products
    bool ok = true;
    std::string what;
    for (int k = 1; k <= 12 && ok; ++k) {
      if (static_cast<long long>(hom_classes(k, TargetGroup::circle()).size()) != k)
        ok = false;
      if (static_cast<long long>(hom_classes(k, TargetGroup::su2()).size()) !=
          k / 2 + 1)
        ok = false;
      for (int u = 1; u <= 3; ++u)
        if (static_cast<long long>(hom_classes(k, TargetGroup::unitary(u)).size()) !=
            static_cast<long long>(binomial(u + k - 1, u)))
          ok = false;
    }
    for (auto [f, n] : families) {
      IsotropyGroupoid g = isotropy_groupoid(orbit_graph(build_skeleton(f, n)));
      RepSpace rs = enumerate_reps(g, TargetGroup::circle());
      long long want = 1;
      for (int k : g.vertex_group_order) want *= k;
      if (rs.count != want ||
          (rs.materialized &&
           static_cast<long long>(rs.classes.size()) != rs.count)) {
        ok = false;
        what = std::string(family_name(f)) + " rep count";
      }
    }
    check("Hom class counts and rep-space products", ok, what);
  }

  {  // beta/tau brute force over the order-6 dihedral target
    bool ok = true;
    std::string what;
    TargetGroup t = TargetGroup::finite_group(make_group(Family::Dihedral, 3));
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::Cyclic, 2},
             {Family::Cyclic, 3},
             {Family::Tetrahedral, 0},
             {Family::Octahedral, 0}}) {
      BetaTauReport r =
          check_beta_tau(isotropy_groupoid(orbit_graph(build_skeleton(f, n))), t);
      if (!r.ok) {
        ok = false;
        what = std::string(family_name(f)) + ": " + r.counterexample;
      }
    }
    check("beta surjectivity and double-coset fibers (finite target)", ok, what);
  }

  {  // classification vs clutching oracle
    bool ok = true;
    std::string what;
    for (int n = 1; n <= 6 && ok; ++n) {
      ClassifyResult r = classify(Family::Cyclic, n, TargetGroup::circle(), -12, 12);
      std::map<std::pair<int, int>, std::vector<long long>> got;
      for (const auto& b : r.classes)
        got[{b.rep.assignment[0].circle_residue,
             b.rep.assignment[1].circle_residue}]
            .push_back(*b.chern);
      for (int a = 0; a < n && ok; ++a)
        for (int bb = 0; bb < n && ok; ++bb) {
          std::vector<long long> want;
          for (long long c = -12; c <= 12; ++c)
            if (((c - (a - bb)) % n + n) % n == 0) want.push_back(c);
          if (got[{a, bb}] != want) {
            ok = false;
            what = "cyclic n=" + std::to_string(n) + " weights (" +
                   std::to_string(a) + "," + std::to_string(bb) + ")";
          }
        }
      for (size_t i = 0; i < r.classes.size() && ok; ++i)
        for (size_t j = i + 1; j < r.classes.size(); ++j)
          if (!congruence_check(r.classes[i], r.classes[j], r.gamma_order)) {
            ok = false;
            what = "congruence violated inside one output";
            break;
          }
    }
    check("classification matches the clutching oracle; congruence holds", ok,
          what);
  }

  {  // byte determinism
    CommandConfig c2;
    c2.max_n = 6;
    c2.format = "csv";
    std::ostringstream s1, s2;
    cmd_table1(c2, s1);
    cmd_table1(c2, s2);
    check("byte-identical output for identical configs", s1.str() == s2.str());
  }

  if (failures == 0) {
    out << "verify: all check groups passed\n";
    return 0;
  }
  err << "verify: " << failures << " check group(s) failed\n";
  return 1;
}

}  // namespace detail_cli

}  // namespace eqb::cli
