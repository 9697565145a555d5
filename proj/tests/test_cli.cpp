#include "eqb/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "schema_check.hpp"

using namespace eqb;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string schema_dir() { return std::string(EQB_SOURCE_DIR) + "/docs/schemas/"; }

void expect_valid(const std::string& doc, const std::string& schema_file) {
  std::string why;
  bool ok = schema_check::validate(nlohmann::json::parse(doc),
                                   schema_check::load(schema_dir() + schema_file),
                                   why);
  INFO(why);
  CHECK(ok);
}

}  // namespace

TEST_CASE("table1 command") {
  RunResult r = run({"table1", "--max-n", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic,4,3,4\n") != std::string::npos);
  CHECK(r.out.find("icosahedral,,59,60\n") != std::string::npos);
  CHECK(r.out.find("dihedral,2,7,8\n") != std::string::npos);
  CHECK(r.out.rfind("family,n,one_minus_chi,N\n", 0) == 0);

  SECTION("byte determinism") {
    RunResult again = run({"table1", "--max-n", "4", "--format", "csv"});
    CHECK(again.out == r.out);
  }
  SECTION("json rows validate") {
    RunResult j = run({"table1", "--max-n", "3"});
    CHECK(j.code == 0);
    expect_valid(j.out, "table1.schema.json");
  }
}

TEST_CASE("rh-check command") {
  RunResult r = run({"rh-check", "--family", "dihedral", "--n", "2", "--format",
                     "plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi_X=-6") != std::string::npos);
  CHECK(r.out.find("holds") != std::string::npos);

  RunResult all = run({"rh-check", "--all", "--max-n", "5"});
  CHECK(all.code == 0);
  expect_valid(all.out, "rh.schema.json");
}

TEST_CASE("skeleton command") {
  RunResult r = run({"skeleton", "--family", "cyclic", "--n", "5"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"] == 2);
  CHECK(doc["edges"].size() == 5);
  expect_valid(r.out, "skeleton.schema.json");

  SECTION("coordinates are optional") {
    RunResult c = run({"skeleton", "--family", "icosahedral", "--coords"});
    CHECK(c.code == 0);
    auto d = nlohmann::json::parse(c.out);
    REQUIRE(d.contains("coordinates"));
    CHECK(d["coordinates"].size() == 62);
    expect_valid(c.out, "skeleton.schema.json");
  }
}

TEST_CASE("orbit command") {
  for (std::string fam : {"cyclic", "dihedral", "octahedral"}) {
    std::vector<std::string> args = {"orbit", "--family", fam};
    if (fam == "cyclic" || fam == "dihedral") {
      args.push_back("--n");
      args.push_back("3");
    }
    RunResult r = run(args);
    CHECK(r.code == 0);
    expect_valid(r.out, "orbit.schema.json");
  }
}

TEST_CASE("reps command") {
  RunResult r = run({"reps", "--family", "tetrahedral", "--target", "circle"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 18);
  expect_valid(r.out, "reps.schema.json");
}

TEST_CASE("zmod-check command") {
  RunResult r = run({"zmod-check", "--family", "cyclic", "--n", "4"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["augmentation_index"] == 4);
  expect_valid(r.out, "zmod.schema.json");

  SECTION("module matrices on demand") {
    RunResult m = run({"zmod-check", "--family", "cyclic", "--n", "3",
                       "--emit-modules"});
    CHECK(m.code == 0);
    auto doc2 = nlohmann::json::parse(m.out);
    REQUIRE(doc2.contains("modules"));
    CHECK(doc2["modules"]["two_cell"]["rank"] == 3);
    expect_valid(m.out, "zmod.schema.json");
  }
  SECTION("whole catalogue at once") {
    RunResult all = run({"zmod-check", "--all", "--max-n", "4"});
    CHECK(all.code == 0);
    auto doc3 = nlohmann::json::parse(all.out);
    REQUIRE(doc3.is_array());
    CHECK(doc3.size() == 9);  // cyclic 2..4, dihedral 2..4, three polyhedral
    expect_valid(all.out, "zmod.schema.json");
  }
}

TEST_CASE("classify command") {
  RunResult r = run({"classify", "--family", "cyclic", "--n", "2", "--target",
                     "circle", "--window", "-3..3"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  // 4 representations; residue-constrained windows hold 3 or 4 values each
  CHECK(doc["classes"].size() == 14);
  expect_valid(r.out, "classify.schema.json");

  SECTION("symbolic output for polyhedral families") {
    RunResult s = run({"classify", "--family", "octahedral", "--target", "circle"});
    CHECK(s.code == 0);
    auto d = nlohmann::json::parse(s.out);
    CHECK(d["symbolic"] == true);
    CHECK(d["classes"][0]["chern"] == "coset(mod 24)");
    expect_valid(s.out, "classify.schema.json");
  }
}

TEST_CASE("beta-check command") {
  RunResult r = run({"beta-check", "--family", "cyclic", "--n", "2", "--target",
                     "finite:dihedral:3"});
  CHECK(r.code == 0);
  expect_valid(r.out, "beta.schema.json");
}

TEST_CASE("verify command passes end to end") {
  RunResult r = run({"verify", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify: all check groups passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  SECTION("unknown flag is a usage error") {
    CHECK(run({"table1", "--bogus"}).code == 2);
  }
  SECTION("missing required option is a usage error") {
    CHECK(run({"skeleton"}).code == 2);
  }
  SECTION("unknown family is a usage error") {
    CHECK(run({"skeleton", "--family", "hexagonal"}).code == 2);
  }
  SECTION("polyhedral family with n is a usage error") {
    CHECK(run({"skeleton", "--family", "octahedral", "--n", "3"}).code == 2);
  }
  SECTION("disconnected classify target is refused") {
    RunResult r = run({"classify", "--family", "cyclic", "--n", "2", "--target",
                       "finite:dihedral:3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("connected") != std::string::npos);
  }
  SECTION("no subcommand") { CHECK(run({}).code != 0); }
  SECTION("help exits zero") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("output lands in a file when requested") {
  std::string path = "cli_test_output.json";
  RunResult r = run({"table1", "--max-n", "2", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json doc;
  f >> doc;
  CHECK(doc.is_array());
  std::remove(path.c_str());
}
