#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hycap/cli.hpp"
#include "hycap/errors.hpp"

using namespace hycap;
using cli::run_command;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

double result(const cli::CommandResult& r, const std::string& name) {
  for (const auto& [key, value] : r.report.results) {
    if (key == name) return value;
  }
  FAIL("missing result " << name);
  return 0.0;
}

// Same keys in the same order, same strings and booleans, reals within
// a relative 1e-12. Error estimates are only checked for presence.
void compare_json(const nlohmann::ordered_json& got, const nlohmann::ordered_json& want,
                  const std::string& where) {
  INFO(where);
  REQUIRE(got.type_name() == std::string(want.type_name()));
  if (want.is_object()) {
    REQUIRE(got.size() == want.size());
    auto g = got.begin();
    for (auto w = want.begin(); w != want.end(); ++w, ++g) {
      REQUIRE(g.key() == w.key());
      if (w.key() == "max_error_estimate") continue;
      compare_json(*g, *w, where + "." + w.key());
    }
  } else if (want.is_array()) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]");
    }
  } else if (want.is_number()) {
    const double a = got.get<double>();
    const double b = want.get<double>();
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
  } else {
    CHECK(got == want);
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ring example") {
  const auto r = run_command({"compute", "ring", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2"});
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(result(r, "capacity") == doctest::Approx(11.15385).epsilon(1e-6));
  REQUIRE(r.report.bounds.has_value());
  CHECK(report_from_json(r.output) == r.report);
}

TEST_CASE("degenerate condenser exits 2") {
  const auto r = run_command({"compute", "ring", "--n", "2", "--p", "2", "--r", "2", "--R", "1"});
  CHECK(r.exit_code == cli::kExitError);
  CHECK(r.error.find("degenerate") != std::string::npos);
  CHECK(r.output.empty());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_command({"compute", "bogus"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"frobnicate"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"compute", "ring", "--n", "2", "--unknown", "3"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"compute", "ring", "--n", "2", "--p", "2", "--r", "0.5"}).exit_code ==
        cli::kExitUsage);
  CHECK(run_command({"compute", "ring", "--json", "--csv", "--r", "1", "--R", "2"}).exit_code ==
        cli::kExitUsage);
  CHECK(run_command({}).exit_code == cli::kExitUsage);
  const auto help = run_command({"--help"});
  CHECK(help.exit_code == cli::kExitOk);
  CHECK(help.output.find("compute") != std::string::npos);
}

TEST_CASE("every compute operation runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"compute", "ball-cap", "--n", "2", "--p", "2", "--r", "1"},
      {"compute", "kappa", "--n", "2", "--p", "2", "--r", "1"},
      {"compute", "rvol", "--n", "1", "--volume", "6.283185307179586"},
      {"compute", "rcap", "--n", "2", "--p", "2", "--capacity", "40.14359"},
      {"compute", "rv", "--n", "2", "--r", "1"},
      {"compute", "rv", "--n", "2", "--r", "1", "--R", "12"},
      {"compute", "rv", "--n", "2", "--ball-r", "1"},
      {"compute", "point-cap", "--n", "1", "--p", "3", "--R", "inf"},
      {"compute", "potential", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2", "--t", "1"},
      {"compute", "flux", "--n", "2", "--p", "2", "--r", "1", "--t", "3"},
  };
  for (const auto& argv : commands) {
    INFO(argv[1]);
    const auto r = run_command(argv);
    CHECK(r.exit_code == cli::kExitOk);
    CHECK(!r.report.results.empty());
  }
  CHECK(result(run_command(commands[2]), "rvol") == doctest::Approx(std::acosh(2.0)).epsilon(1e-12));
  CHECK(result(run_command(commands[3]), "rcap") == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(result(run_command(commands[8]), "value") == doctest::Approx(0.24472847).epsilon(1e-7));
  CHECK(result(run_command(commands[9]), "flux") ==
        doctest::Approx(2 * 3.141592653589793 * (std::exp(2.0) - 1)).epsilon(1e-10));
}

TEST_CASE("every bound operation runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"bound", "mazya", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2"},
      {"bound", "mazya", "--n", "2", "--p", "2", "--vol-K", "1", "--vol-O", "5", "--route", "substituted"},
      {"bound", "polya", "--n", "2", "--p", "2", "--ball-r", "1"},
      {"bound", "rv-upper", "--n", "2", "--p", "2", "--rv", "7.38905609893065"},
      {"bound", "diam", "--d", "2"},
      {"bound", "steiner", "--n", "2", "--ball-r", "1", "--s", "0.5"},
      {"bound", "af", "--n", "2", "--area", "10"},
      {"bound", "af", "--n", "2", "--area", "10", "--k", "1"},
  };
  for (const auto& argv : commands) {
    INFO(argv[1]);
    CHECK(run_command(argv).exit_code == cli::kExitOk);
  }
  CHECK(result(run_command(commands[0]), "lower") == doctest::Approx(11.15385).epsilon(1e-6));
  CHECK(run_command({"bound", "mazya", "--n", "2", "--vol-K", "1", "--route", "sideways"}).exit_code ==
        cli::kExitUsage);
  CHECK(run_command({"bound", "polya", "--n", "2"}).exit_code == cli::kExitUsage);
}

TEST_CASE("certify subcommands") {
  CHECK(run_command({"certify", "t51", "--n", "2", "--p", "2", "--ball-r", "1"}).exit_code == 0);
  CHECK(run_command({"certify", "t21", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2"}).exit_code == 0);
  CHECK(run_command({"certify", "t31", "--n", "1", "--p", "3", "--r", "0.5", "--R", "2"}).exit_code == 0);
  CHECK(run_command({"certify", "t32", "--d-grid", "1,2,3"}).exit_code == 0);
  CHECK(run_command({"certify", "t32", "--d-grid", "1,x"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"certify", "t41", "--n", "3", "--p", "2", "--r", "1"}).exit_code == 0);
  CHECK(run_command({"certify", "t31", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2"}).exit_code ==
        cli::kExitError);
  const auto tight = run_command({"certify", "t41", "--n", "2", "--p", "2", "--r", "1", "--tol", "1e-16"});
  CHECK(tight.exit_code == cli::kExitFailedVerdict);
  CHECK(!tight.output.empty());
  const auto loose = run_command({"certify", "t41", "--n", "2", "--p", "2", "--r", "1", "--verdict-tol", "1e-6"});
  CHECK(loose.exit_code == 0);
  CHECK(loose.report.verdicts.front().tol == 1e-6);
}

TEST_CASE("certify output is byte-identical across runs") {
  const std::vector<std::string> argv = {"certify", "t21", "--n", "3", "--p", "2", "--r", "0.5", "--R", "2"};
  CHECK(run_command(argv).output == run_command(argv).output);
}

TEST_CASE("CSV output") {
  const auto r = run_command({"compute", "ring", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2", "--csv"});
  CHECK(r.output.rfind("name,value\ncapacity,", 0) == 0);
}

TEST_CASE("quermass files") {
  const auto good = write_temp("hycap_q_good.json", R"({"n": 2, "area": 17.3, "P": [25.0, 30.0]})");
  const auto extra = write_temp("hycap_q_extra.json", R"({"n": 2, "area": 17.3, "P": [25.0, 30.0], "label": "x"})");
  const auto bad_af = write_temp("hycap_q_af.json", R"({"n": 2, "area": 17.3, "P": [1.0, 30.0]})");
  const auto bad_n = write_temp("hycap_q_n.json", R"({"n": 2.5, "area": 17.3, "P": [25.0, 30.0]})");
  CHECK(cli::load_quermass(good.string(), true).n() == 2);
  CHECK(cli::load_quermass(extra.string(), false).n() == 2);
  CHECK_THROWS_AS(cli::load_quermass(extra.string(), true), Error);
  CHECK_THROWS_AS(cli::load_quermass(bad_af.string(), false), Error);
  CHECK_THROWS_AS(cli::load_quermass(bad_n.string(), false), Error);
  CHECK_THROWS_AS(cli::load_quermass("/nonexistent/q.json", false), Error);
  CHECK_THROWS_AS(cli::parse_quermass("not json", false), Error);
  CHECK_THROWS_AS(cli::parse_quermass(R"({"n": 2, "area": 1})", false), Error);

  CHECK(run_command({"bound", "polya", "--p", "2", "--quermass", good.string()}).exit_code == 0);
  CHECK(run_command({"certify", "t51", "--p", "2", "--quermass", good.string()}).exit_code == 0);
  CHECK(run_command({"bound", "polya", "--p", "2", "--strict", "--quermass", extra.string()}).exit_code ==
        cli::kExitError);
  CHECK(run_command({"bound", "polya", "--n", "3", "--p", "2", "--quermass", good.string()}).exit_code ==
        cli::kExitError);
}

TEST_CASE("sweep specification") {
  const auto s = cli::parse_sweep("r:0.1:1:10");
  CHECK(s.param == "r");
  CHECK(s.steps == 10);
  const auto grid = s.grid();
  CHECK(grid.size() == 10);
  CHECK(grid.front() == 0.1);
  CHECK(grid.back() == 1.0);
  CHECK_THROWS_AS(cli::parse_sweep("r:1:0.1:10"), Error);
  CHECK_THROWS_AS(cli::parse_sweep("r:0:1:1"), Error);
  CHECK_THROWS_AS(cli::parse_sweep("r:0:1"), Error);
  CHECK_THROWS_AS(cli::parse_sweep("r:a:1:3"), Error);
}

TEST_CASE("scan of ring capacity over r") {
  const auto r = run_command({"scan", "--n", "2", "--p", "2", "--R", "2", "--sweep", "r:0.1:1:10", "--of", "ring"});
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "r,capacity,error");
  double previous = 0.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    const double capacity = std::stod(line.substr(first + 1, second - first - 1));
    CHECK(capacity > previous);
    CHECK(line.substr(second + 1).empty());
    previous = capacity;
    ++rows;
  }
  CHECK(rows == 10);
}

TEST_CASE("scan error rows and targets") {
  const auto r = run_command({"scan", "--n", "2", "--p", "2", "--R", "1", "--sweep", "r:0.5:1.5:3", "--of", "ring"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("degenerate") != std::string::npos);
  CHECK(run_command({"scan", "--sweep", "r:0.5:1.5:3", "--of", "t21"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"scan", "--sweep", "zeta:0.5:1.5:3", "--of", "ring"}).exit_code == cli::kExitUsage);
  CHECK(run_command({"scan", "--sweep", "r:0.5:1.5:1", "--of", "ring"}).exit_code == cli::kExitUsage);
  const auto p = run_command({"scan", "--n", "1", "--r", "0.5", "--R", "2", "--sweep", "p:1.1:3:8", "--of", "ring"});
  CHECK(p.exit_code == 0);
  CHECK(p.output.find("error\n") != std::string::npos);
  CHECK(p.output.find(": ") == std::string::npos);
  const auto a = run_command({"scan", "--sweep", "d:1:30:12", "--of", "diam"});
  const auto b = run_command({"scan", "--sweep", "d:1:30:12", "--of", "diam"});
  CHECK(a.output == b.output);
}

TEST_CASE("golden reports") {
  const std::filesystem::path dir = HYCAP_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"compute_ring.json", {"compute", "ring", "--n", "2", "--p", "2", "--r", "0.5", "--R", "2"}},
      {"compute_point_cap.json", {"compute", "point-cap", "--n", "1", "--p", "3", "--R", "inf"}},
      {"bound_diam.json", {"bound", "diam", "--d", "2"}},
      {"certify_t51.json", {"certify", "t51", "--n", "2", "--p", "2", "--ball-r", "1"}},
  };
  for (const auto& [file, argv] : cases) {
    INFO(file);
    const auto r = run_command(argv);
    REQUIRE(r.exit_code == 0);
    const auto want = nlohmann::ordered_json::parse(read_file(dir / file));
    const auto got = nlohmann::ordered_json::parse(r.output);
    compare_json(got, want, file);
  }
}

}
