#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waveheat/config.hpp"
#include "waveheat/csv.hpp"
#include "waveheat/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace waveheat;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir =
      fs::temp_directory_path() / ("waveheat_test_" + std::to_string(::getpid()) + "_" +
                                   std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  out << body;
  return p;
}

const std::string kMinimalConfig =
    "[params]\n"
    "a = 0.5\n"
    "b = 0.1\n"
    "c = 4\n"
    "d = 0.2\n"
    "epsilon = 0.01\n"
    "mu = 0.1\n";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(WAVEHEAT_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_config: minimal file gets the documented defaults") {
  const fs::path dir = temp_dir();
  const RunConfig rc = parse_config(write_file(dir, "min.cfg", kMinimalConfig).string());
  CHECK(rc.nx == 100);
  CHECK(rc.dt == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(rc.t_final == 10.0);
  CHECK(rc.record_stride == 4);
  CHECK(rc.u0 == "sine 1");
  CHECK(rc.p0 == "zero");
  CHECK(rc.eps_list.size() == 4);
  CHECK(rc.trials == 1000);
  CHECK(rc.params.c == 4.0);
}

TEST_CASE("parse_config: dt default follows nx") {
  const fs::path dir = temp_dir();
  const std::string body = kMinimalConfig + "[grid]\nnx = 200\n";
  const RunConfig rc = parse_config(write_file(dir, "nx.cfg", body).string());
  CHECK(rc.nx == 200);
  CHECK(rc.dt == doctest::Approx(0.0025).epsilon(1e-15));
}

TEST_CASE("parse_config: error paths") {
  const fs::path dir = temp_dir();

  // missing key c, named in the message
  const std::string missing =
      "[params]\na = 0.5\nb = 0.1\nd = 0.2\nepsilon = 0.01\nmu = 0.1\n";
  try {
    parse_config(write_file(dir, "missing.cfg", missing).string());
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("params.c") != std::string::npos);
  }

  // negative epsilon
  std::string neg = kMinimalConfig;
  neg.replace(neg.find("epsilon = 0.01"), 14, "epsilon = -1.0");
  CHECK_THROWS_AS(parse_config(write_file(dir, "neg.cfg", neg).string()), ConfigError);

  // unknown key
  CHECK_THROWS_AS(
      parse_config(write_file(dir, "unk.cfg", kMinimalConfig + "[grid]\nfoo = 1\n").string()),
      ConfigError);

  // malformed number carries the line number
  try {
    parse_config(write_file(dir, "bad.cfg", kMinimalConfig + "[grid]\nnx = banana\n").string());
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line_number == 9);  // [grid] header is line 8
  }

  CHECK_THROWS_AS(parse_config((dir / "does_not_exist.cfg").string()), ConfigError);
}

TEST_CASE("parse_ic_preset: grammar") {
  const auto sine = parse_ic_preset("sine 3", InitialConditionSpec::Target::u0);
  CHECK(sine.kind == InitialConditionSpec::Kind::sine);
  CHECK(sine.wavenumber == 3);

  const auto poly = parse_ic_preset("poly 0 1 2.5", InitialConditionSpec::Target::p0);
  REQUIRE(poly.coefficients.size() == 3);
  CHECK(poly.coefficients[2] == 2.5);

  const auto gauss = parse_ic_preset("gauss 0.5 0.1 2", InitialConditionSpec::Target::p0);
  CHECK(gauss.center == 0.5);

  CHECK_THROWS_AS(parse_ic_preset("wavelet 1", InitialConditionSpec::Target::u0), ConfigError);
  CHECK_THROWS_AS(parse_ic_preset("sine", InitialConditionSpec::Target::u0), ConfigError);
  CHECK_THROWS_AS(parse_ic_preset("zero 1", InitialConditionSpec::Target::u0), ConfigError);
  CHECK_THROWS_AS(parse_ic_preset("gauss 0.5 0 1", InitialConditionSpec::Target::u0),
                  ConfigError);
}

TEST_CASE("format_float: 17 significant digits round-trip") {
  for (double v : {1.0 / 3.0, 2.718281828459045e-12, -4.9303806576313238e5, 0.0}) {
    const std::string s = format_float(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("cli: validate and simulate produce the contracted outputs") {
  const fs::path dir = temp_dir();
  const fs::path cfg = write_file(dir, "run.cfg", kMinimalConfig + "[grid]\nnx = 40\nt_final = 1\n");

  CHECK(run_cli("validate --config " + cfg.string() + " --out " + (dir / "v.txt").string()) ==
        0);
  CHECK(slurp(dir / "v.txt").find("theorem T1_4: SATISFIED") != std::string::npos);

  const fs::path csv = dir / "layer.csv";
  CHECK(run_cli("simulate --config " + cfg.string() + " --system layer --out " +
                csv.string()) == 0);
  const std::string content = slurp(csv);
  CHECK(content.rfind("t,E,V1,W2,V2,u1,ut1,p0,p1\n", 0) == 0);
  CHECK(content.find("\r") == std::string::npos);

  // csv round-trips at full precision
  const auto rows = read_csv(csv.string());
  REQUIRE(!rows.empty());
  REQUIRE(rows.front().size() == 9);

  // full and reduced runs work too
  CHECK(run_cli("simulate --config " + cfg.string() + " --system full --out " +
                (dir / "full.csv").string()) == 0);
  CHECK(run_cli("simulate --config " + cfg.string() + " --system reduced --out " +
                (dir / "red.csv").string()) == 0);
}

TEST_CASE("cli: byte-identical reruns") {
  const fs::path dir = temp_dir();
  const fs::path cfg = write_file(dir, "run.cfg", kMinimalConfig + "[grid]\nnx = 40\nt_final = 1\n");

  for (const std::string sub : {"a", "b"}) {
    CHECK(run_cli("simulate --config " + cfg.string() + " --system full --out " +
                  (dir / ("full_" + sub + ".csv")).string()) == 0);
    CHECK(run_cli("spectrum --config " + cfg.string() + " --out " +
                  (dir / ("spec_" + sub + ".csv")).string()) == 0);
    CHECK(run_cli("inequalities --config " + cfg.string() + " --trials 20 --seed 5 --out " +
                  (dir / ("ineq_" + sub + ".txt")).string()) == 0);
  }
  CHECK(slurp(dir / "full_a.csv") == slurp(dir / "full_b.csv"));
  CHECK(slurp(dir / "spec_a.csv") == slurp(dir / "spec_b.csv"));
  CHECK(slurp(dir / "ineq_a.txt") == slurp(dir / "ineq_b.txt"));
  CHECK(!slurp(dir / "spec_a.csv").empty());
}

TEST_CASE("cli: exit codes") {
  const fs::path dir = temp_dir();
  const fs::path cfg = write_file(dir, "run.cfg", kMinimalConfig);

  CHECK(run_cli("frobnicate --config " + cfg.string()) == 1);  // unknown subcommand
  CHECK(run_cli("validate") == 1);                             // missing --config
  CHECK(run_cli("validate --config " + (dir / "nope.cfg").string()) == 1);

  std::string neg = kMinimalConfig;
  neg.replace(neg.find("epsilon = 0.01"), 14, "epsilon = -1.0");
  const fs::path bad = write_file(dir, "bad.cfg", neg);
  CHECK(run_cli("validate --config " + bad.string()) == 1);
}
