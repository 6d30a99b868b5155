#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "floerbox/cfk.hpp"
#include "floerbox/cli.hpp"
#include "floerbox/error.hpp"
#include "floerbox/model_io.hpp"

namespace floerbox {
namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_model(const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "floerbox-cli-tests";
  fs::create_directories(dir);
  fs::path file = dir / name;
  std::ofstream stream(file, std::ios::binary | std::ios::trunc);
  stream << text;
  return file.string();
}

std::string unknot_file() {
  return write_model("unknot.json", R"({"thin": {"tau": 0}})");
}

std::string rht_file() {
  return write_model("rht.json", R"({"thin": {"tau": 1}})");
}

std::string six1_file() {
  return write_model(
      "six1.json",
      R"({"thin": {"tau": 0, "squares": [{"center": 0, "count": 2}]}})");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rank table of the trivial satellite at framing zero") {
    CliResult r = invoke({"hfk", "--model", unknot_file(), "--n", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "A\tdelta_rel\trank\n0\t2\t1\n");
    CHECK(r.err.empty());
  }

  TEST_CASE("rank table as JSON") {
    CliResult r = invoke(
        {"hfk", "--model", unknot_file(), "--n", "0", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"command\":\"hfk\",\"n\":0,\"pattern\":\"mazur\","
          "\"rows\":[{\"A\":0,\"delta_rel\":2,\"rank\":1}],"
          "\"schema\":\"floerbox/1\",\"shift\":-2,\"total_rank\":1}\n");
    CHECK(r.err.empty());
  }

  TEST_CASE("invariant summary") {
    CliResult r = invoke({"invariants", "--model", unknot_file(), "--n", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "genus\tfibered\tthickness\ttotal_rank\n0\ttrue\t0\t1\n");

    CliResult j = invoke({"invariants", "--model", unknot_file(), "--n", "0",
                          "--format", "json"});
    CHECK(j.exit_code == 0);
    CHECK(j.out ==
          "{\"command\":\"invariants\","
          "\"invariants\":{\"fibered\":true,\"genus\":0,\"thickness\":0,"
          "\"total_rank\":1},\"n\":0,\"pattern\":\"mazur\","
          "\"schema\":\"floerbox/1\"}\n");
  }

  TEST_CASE("framing sweep streams rows in order") {
    CliResult r = invoke({"sweep", "--model", rht_file(), "--n-min", "-2",
                          "--n-max", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n\tgenus\tfibered\tthickness\ttotal_rank\n"
          "-2\t3\ttrue\t3\t45\n"
          "-1\t2\tfalse\t2\t37\n"
          "0\t2\tfalse\t2\t29\n");
    CHECK(r.err.empty());
  }

  TEST_CASE("framing sweep as JSON under an explicit thread count") {
    setenv("FLOERBOX_THREADS", "2", 1);
    CliResult r = invoke({"sweep", "--model", rht_file(), "--n-min", "-1",
                          "--n-max", "0", "--format", "json"});
    unsetenv("FLOERBOX_THREADS");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"command\":\"sweep\",\"pattern\":\"mazur\","
          "\"schema\":\"floerbox/1\"}\n"
          "{\"invariants\":{\"fibered\":false,\"genus\":2,\"thickness\":2,"
          "\"total_rank\":37},\"n\":-1}\n"
          "{\"invariants\":{\"fibered\":false,\"genus\":2,\"thickness\":2,"
          "\"total_rank\":29},\"n\":0}\n");
  }

  TEST_CASE("malformed thread count falls back to the default pool") {
    setenv("FLOERBOX_THREADS", "carrots", 1);
    CliResult r = invoke({"sweep", "--model", rht_file(), "--n-min", "0",
                          "--n-max", "1"});
    unsetenv("FLOERBOX_THREADS");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n\tgenus\tfibered\tthickness\ttotal_rank\n"
          "0\t2\tfalse\t2\t29\n"
          "1\t3\ttrue\t2\t21\n");
  }

  TEST_CASE("surgery screen of a genus-one exceptional pair") {
    CliResult r = invoke({"csc", "--model", six1_file(), "--n", "-1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "status\tobstruction\tslopes\tfamily\n"
          "exceptional\tnone\t+-2,+-1\tg1.n-1.pm2\n");

    CliResult with_tau = invoke(
        {"csc", "--model", six1_file(), "--n", "-1", "--tau-satellite", "1"});
    CHECK(with_tau.exit_code == 0);
    CHECK(with_tau.out ==
          "status\tobstruction\tslopes\tfamily\n"
          "verified\tni_wu\t-\t-\n");
  }

  TEST_CASE("surgery screen as JSON") {
    CliResult r = invoke(
        {"csc", "--model", six1_file(), "--n", "-1", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"alexander\":\"-4*t^2 + 16*t - 23 + 16*t^-1 - 4*t^-2\","
          "\"alexander_second_derivative\":0,\"command\":\"csc\","
          "\"family\":\"g1.n-1.pm2\",\"genus\":2,\"n\":-1,"
          "\"obstruction\":\"none\",\"schema\":\"floerbox/1\","
          "\"slopes\":[{\"display\":\"+-2\",\"numerator\":2,\"q\":1},"
          "{\"display\":\"+-1\",\"numerator\":1,\"q\":1}],"
          "\"status\":\"exceptional\",\"thickness\":2}\n");
  }

  TEST_CASE("output bytes are stable across runs") {
    std::vector<std::string> args{"hfk",      "--model", rht_file(), "--n",
                                  "-2",       "--format", "json"};
    CliResult first = invoke(args);
    CliResult second = invoke(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
  }

  TEST_CASE("explicit model files reproduce the built-in shapes") {
    std::string explicit_rht = write_model("explicit-rht.json", R"({
      "explicit": {
        "generators": [
          {"name": "eta0", "alexander": -1, "maslov": -2},
          {"name": "eta1", "alexander": 0, "maslov": -1},
          {"name": "xi0", "alexander": 1, "maslov": 0}
        ],
        "arrows": [
          {"kind": "vertical", "src": "eta1", "dst": "eta0", "length": 1},
          {"kind": "horizontal", "src": "eta1", "dst": "xi0", "length": 1}
        ],
        "tau": 1,
        "epsilon": 1
      }
    })");
    CliResult lhs = invoke({"invariants", "--model", explicit_rht, "--n", "2"});
    CliResult rhs = invoke({"invariants", "--model", rht_file(), "--n", "2"});
    CHECK(lhs.exit_code == 0);
    CHECK(lhs.out == rhs.out);
    CHECK(lhs.out == "genus\tfibered\tthickness\ttotal_rank\n4\ttrue\t4\t17\n");
  }

  TEST_CASE("model JSON routing") {
    CfkModel staircase = parse_model_json(R"({"lspace": {"sign": 1, "r": [3, 2]}})");
    CHECK(classify(staircase).kind == ModelClass::Staircase);
    CHECK(staircase.tau == 3);

    CfkModel mirror = parse_model_json(R"({"lspace": {"sign": -1, "r": [2, 1]}})");
    CHECK(mirror.tau == -2);

    CHECK_THROWS_AS(parse_model_json("not json at all"), Error);
    CHECK_THROWS_AS(parse_model_json(R"({"unrecognized": {}})"), Error);
    CHECK_THROWS_AS(parse_model_json(R"({"thin": {}})"), Error);
    CHECK_THROWS_AS(parse_model_json(R"({"lspace": {"sign": 2, "r": [2, 1]}})"),
                    Error);
  }

  TEST_CASE("missing model file reports an io error") {
    CliResult r = invoke({"hfk", "--model", "/nonexistent.json", "--n", "0"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(r.err ==
          "{\"error\":{\"code\":\"io\",\"message\":"
          "\"cannot open model file: /nonexistent.json\"},"
          "\"schema\":\"floerbox/1\"}\n");
  }

  TEST_CASE("unparsable model file reports an io error") {
    std::string bad = write_model("bad.json", "][");
    CliResult r = invoke({"invariants", "--model", bad, "--n", "0"});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"code\":\"io\"") != std::string::npos);
    CHECK(r.err.find("model file is not a JSON object") != std::string::npos);
  }

  TEST_CASE("framing outside the guard range is a usage error") {
    CliResult r = invoke({"hfk", "--model", unknot_file(), "--n", "10001"});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"code\":\"usage\"") != std::string::npos);
    CHECK(r.err.find("framing must lie in [-10000, 10000]") !=
          std::string::npos);
  }

  TEST_CASE("empty sweep range is a usage error") {
    CliResult r = invoke({"sweep", "--model", unknot_file(), "--n-min", "1",
                          "--n-max", "0"});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"code\":\"usage\"") != std::string::npos);
  }

  TEST_CASE("surgery screen rejects the cable pattern") {
    CliResult r = invoke({"csc", "--model", six1_file(), "--n", "-1",
                          "--pattern", "cable21"});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"code\":\"usage\"") != std::string::npos);
  }

  TEST_CASE("cable pattern flows through the rank commands") {
    CliResult r = invoke({"invariants", "--model", unknot_file(), "--n", "0",
                          "--pattern", "cable21", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pattern\":\"cable21\"") != std::string::npos);
  }

  TEST_CASE("command line parse failures exit with code two") {
    CliResult unknown = invoke({"bogus"});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("\"code\":\"usage\"") != std::string::npos);

    CliResult none = invoke({});
    CHECK(none.exit_code == 2);

    CliResult missing_n = invoke({"hfk", "--model", unknot_file()});
    CHECK(missing_n.exit_code == 2);
  }

  TEST_CASE("help is printed on request") {
    CliResult top = invoke({"--help"});
    CHECK(top.exit_code == 0);
    CHECK(top.out.find("satellite") != std::string::npos);

    CliResult sub = invoke({"hfk", "--help"});
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("--model") != std::string::npos);
  }

  TEST_CASE("selftest command runs the golden tables") {
    CliResult r = invoke({"selftest"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
  }
}

}  // namespace floerbox
