#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qdba/error.hpp"
#include "qdba/experiments/config.hpp"
#include "qdba/experiments/ensemble.hpp"
#include "qdba/experiments/metrics.hpp"
#include "qdba/experiments/output.hpp"
#include "qdba/experiments/ternary.hpp"

using namespace qdba;
using namespace qdba::experiments;
namespace fs = std::filesystem;

namespace {

protocol::ShotOutcome shot_with(bool commander_loyal, std::vector<protocol::LieutenantRecord> lts) {
  protocol::ShotOutcome o;
  o.commander_loyal = commander_loyal;
  if (commander_loyal) o.commander_order = 1;
  o.lieutenants = std::move(lts);
  return o;
}

protocol::LieutenantRecord lt(protocol::Decision d, bool loyal, bool error) {
  protocol::LieutenantRecord r;
  r.loyal = loyal;
  r.decision = d;
  r.error = error;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qdba_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("ternary grid") {
  const auto grid = ternary_grid(0.025, 13);
  CHECK(grid.size() == 105);
  for (const auto& p : grid) {
    CHECK(p.p0 == doctest::Approx(0.975));
    CHECK(std::abs(p.p0 + p.px + p.py + p.pz - 1.0) < 1e-12);
    CHECK(p.px >= 0);
    CHECK(p.py >= 0);
    CHECK(p.pz >= 0);
  }
  const auto vertices = ternary_grid(0.5, 1);
  REQUIRE(vertices.size() == 3);
  int pure = 0;
  for (const auto& p : vertices) pure += (p.px == 0.5) + (p.py == 0.5) + (p.pz == 0.5);
  CHECK(pure == 3);
  for (int r = 1; r <= 20; ++r) CHECK(ternary_grid(0.1, r).size() == static_cast<std::size_t>((r + 1) * (r + 2) / 2));
  CHECK_THROWS_AS(ternary_grid(0.1, 0), ParameterError);
}

TEST_CASE("minimal config") {
  const auto c = parse_config("n = 3\nt = 1\nm = 16\nprofile = logical\np0 = 1\n");
  CHECK(c.n == std::vector<int>{3});
  CHECK(c.t == std::vector<int>{1});
  REQUIRE(c.pauli.size() == 1);
  CHECK(c.pauli[0].p0 == 1.0);
  CHECK(c.tolerances.theta == 0.25);
  CHECK(c.tolerances.epsilon == 0.0);
  CHECK(c.classical_delay_s == 0.0);
  CHECK(expand_points(c).size() == 1);
}

TEST_CASE("lists, ranges and comments") {
  const auto c = parse_config("# sweep\nn = 3, 6, 11   # three sizes\nm = 16:160:16\nt = 0\n");
  CHECK(c.n == std::vector<int>{3, 6, 11});
  CHECK(c.m.size() == 10);
  CHECK(c.m.back() == 160);
  CHECK(expand_points(c).size() == 30);
  const auto d = parse_config("profile = photonic\nlength_km = 1, 10\nalpha_db_per_km = 0.02, 0.2\n");
  CHECK(expand_points(d).size() == 4);
}

TEST_CASE("superconducting defaults T2 to T1") {
  const auto c = parse_config("profile = superconducting\nt1_s = 1e-3\ntransit_s = 0, 1e-6\n");
  const auto points = expand_points(c);
  REQUIRE(points.size() == 2);
  const auto& p = std::get<hardware::SuperconductingProfile>(points[1].shot.profile);
  CHECK(p.t2 == 1e-3);
  CHECK(p.transit == 1e-6);
}

TEST_CASE("config errors name the key") {
  const auto fails_on = [](const std::string& text, const std::string& key) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what()).rfind(key, 0) == 0;
    }
    return false;
  };
  CHECK(fails_on("n = 11\nt = 11\n", "t"));
  CHECK(fails_on("profile = superconducting\nt1_s = 1\nt2_s = 3\n", "t2_s"));
  CHECK(fails_on("bogus = 1\n", "bogus"));
  CHECK(fails_on("n = 2\n", "n"));
  CHECK(fails_on("m = 0\n", "m"));
  CHECK(fails_on("runs = 0\n", "runs"));
  CHECK(fails_on("px = 0.5\np0 = 0.6\n", "p0"));
  CHECK(fails_on("profile = quantum-dots\n", "profile"));
  CHECK(fails_on("n = three\n", "n"));
  CHECK(fails_on("theta = 0.9\n", "theta"));
  CHECK(fails_on("ternary_resolution = 13\npx = 0.1\n", "ternary_resolution"));
  CHECK(fails_on("profile = photonic\nlength_km = 0\n", "length_km"));
  CHECK(fails_on("n = 3\nn = 4\n", "n"));
  CHECK(fails_on("profile = photonic\nt1_s = 1\n", "profile"));
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
}

TEST_CASE("large N warns") {
  const auto c = parse_config("n = 15\n");
  CHECK(c.warnings.size() == 1);
}

TEST_CASE("Pauli lists zip and p0 fills the remainder") {
  const auto c = parse_config("px = 0.01, 0.02\npz = 0.01\n");
  REQUIRE(c.pauli.size() == 2);
  CHECK(c.pauli[1].px == 0.02);
  CHECK(c.pauli[1].pz == 0.01);
  CHECK(c.pauli[1].p0 == doctest::Approx(0.97));
  const auto t = parse_config("ternary_resolution = 13\np0 = 0.975\n");
  CHECK(t.pauli.size() == 105);
}

TEST_CASE("overrides replace config keys") {
  const auto c = parse_config("m = 16\nseed = 3\n", {{"m", "32"}, parse_assignment("seed=9")});
  CHECK(c.m == std::vector<int>{32});
  CHECK(c.seed == 9);
  CHECK_THROWS_AS(parse_assignment("noequals"), ConfigError);
  CHECK_THROWS_AS(parse_assignment("unknown=1"), ConfigError);
}

TEST_CASE("metrics counting") {
  using D = protocol::Decision;
  std::vector<protocol::ShotOutcome> shots;
  for (int k = 0; k < 5; ++k) {
    shots.push_back(shot_with(true, {lt(D::One, true, false), lt(D::One, true, false)}));
  }
  shots[2].lieutenants[1] = lt(D::Abort, true, true);
  const auto row = aggregate_metrics(shots);
  CHECK(row.loyal_lieutenant_shots == 10);
  CHECK(row.lieutenant_error_rate == doctest::Approx(0.1));
  CHECK(row.abort_rate == doctest::Approx(0.1));
  CHECK(row.wrong_value_rate == 0.0);
  CHECK(row.shot_error_rate == doctest::Approx(0.2));

  const auto all_ok = aggregate_metrics(std::vector{shot_with(true, {lt(D::One, true, false)})});
  CHECK(all_ok.lieutenant_error_rate == 0.0);
  CHECK(all_ok.abort_rate == 0.0);

  const auto detected = aggregate_metrics(
      std::vector{shot_with(false, {lt(D::Abort, true, false), lt(D::Abort, true, false)})});
  CHECK(detected.lieutenant_error_rate == 0.0);
  CHECK(detected.wrong_value_rate == 0.0);

  const auto fooled = aggregate_metrics(
      std::vector{shot_with(false, {lt(D::Zero, true, true), lt(D::Abort, true, false)})});
  CHECK(fooled.lieutenant_error_rate == doctest::Approx(0.5));
  CHECK(fooled.wrong_value_rate == doctest::Approx(0.5));

  const auto traitors_only = aggregate_metrics(std::vector{shot_with(true, {lt(D::Zero, false, false)})});
  CHECK(traitors_only.lieutenant_error_rate == 0.0);

  CHECK_THROWS_AS(aggregate_metrics(std::vector<protocol::ShotOutcome>{}), AggregationError);
}

TEST_CASE("property: rates decompose under a loyal commander") {
  const auto c = parse_config("n = 4\nt = 1\nm = 16\npx = 0.02\nruns = 2\nshots = 20\n");
  const auto result = run_ensemble(c, 1);
  for (const auto& row : result.rows) {
    CHECK(row.lieutenant_error_rate == doctest::Approx(row.abort_rate + row.wrong_value_rate));
    for (double r : {row.lieutenant_error_rate, row.shot_error_rate, row.abort_rate, row.wrong_value_rate}) {
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
    }
  }
}

TEST_CASE("ensemble is independent of worker count") {
  const auto c = parse_config("n = 3, 5\nt = 1\nm = 16\npx = 0.0, 0.02\nruns = 3\nshots = 7\nseed = 17\n");
  const auto one = run_ensemble(c, 1);
  const auto eight = run_ensemble(c, 8);
  CHECK(metrics_csv(one) == metrics_csv(eight));
  CHECK(shots_csv(one) == shots_csv(eight));
  REQUIRE(one.outcomes.size() == 4);
  CHECK(one.outcomes[0].size() == 21);
  CHECK(one.outcomes[0][8].run == 1);
  CHECK(one.outcomes[0][8].shot == 1);
  CHECK(one.outcomes[0][8].rng_path == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("ensemble rethrows shot failures") {
  auto c = parse_config("n = 3\n");
  c.t = {5};  // bypasses parse-time validation
  CHECK_THROWS_AS(run_ensemble(c, 2), ParameterError);
}

TEST_CASE("outputs are byte-deterministic and follow the schema") {
  auto c = parse_config("n = 3\nt = 1\nm = 16\nruns = 1\nshots = 5\nper_shot_csv = true\n");
  const auto a = scratch("out_a");
  const auto b = scratch("out_b");
  write_outputs(c, run_ensemble(c, 1), a);
  write_outputs(c, run_ensemble(c, 4), b);
  for (const char* f : {"metrics.csv", "shots.csv", "manifest.json"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
  const std::string csv = slurp(a / "metrics.csv");
  CHECK(csv.rfind(std::string(kMetricsHeader) + "\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.find("logical,3,1,16,1,0,0,0,,,,,,true,5,") != std::string::npos);
  const std::string manifest = slurp(a / "manifest.json");
  CHECK(manifest.find("\"seed\": 0") != std::string::npos);
  CHECK(manifest.find("\"version\"") != std::string::npos);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("output errors carry the path") {
  const auto c = parse_config("n = 3\nruns = 1\nshots = 1\n");
  const auto result = run_ensemble(c, 1);
  const fs::path blocker = scratch("blocker");
  std::ofstream(blocker) << "file";
  try {
    write_outputs(c, result, blocker / "sub");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(blocker.string()) != std::string::npos);
  }
  fs::remove(blocker);
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(5e-11) == "5e-11");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("exit codes and outputs") {
  const std::string sim = QDBA_SIM_PATH;
  const auto dir = scratch("cli");
  const auto run = [&](const std::string& args) {
    const int rc = std::system((sim + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  CHECK(run("sweep --param n=3 --param m=16 --param runs=1 --param shots=2 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "metrics.csv"));
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(run("sweep --param n=3 --param t=3") == 2);
  CHECK(run("sweep --param nonsense=1") == 2);
  CHECK(run("run --config " + (dir / "missing.cfg").string()) == 2);
  CHECK(run("bogus-subcommand") == 2);

  const fs::path cfg = dir / "ternary.cfg";
  std::ofstream(cfg) << "n = 3\nt = 1\nm = 16\nruns = 1\nshots = 1\n";
  CHECK(run("ternary --config " + cfg.string() + " --p0 0.9 --resolution 2 --out " + (dir / "t").string()) == 0);
  const std::string csv = slurp(dir / "t" / "metrics.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6);

  CHECK(run("run --config " + cfg.string() + " --workers 3 --seed 4 --out " + (dir / "w3").string()) == 0);
  CHECK(run("run --config " + cfg.string() + " --workers 1 --seed 4 --out " + (dir / "w1").string()) == 0);
  CHECK(slurp(dir / "w3" / "metrics.csv") == slurp(dir / "w1" / "metrics.csv"));

  // Unwritable output directory is a runtime failure.
  std::ofstream(dir / "file") << "x";
  CHECK(run("run --config " + cfg.string() + " --out " + (dir / "file" / "sub").string()) == 1);
  fs::remove_all(dir);
}

}  // TEST_SUITE
