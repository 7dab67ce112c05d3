#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "wfh/errors.hpp"
#include "wfh/experiment.hpp"
#include "wfh/results_csv.hpp"
#include "wfh/summary.hpp"
#include "wfh/sweep_config.hpp"

using namespace wfh;

namespace {

SweepConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

std::string csv_without_times(std::vector<ResultRow> rows) {
  for (auto& r : rows) r.wall_time_s = 0.0;
  std::ostringstream out;
  write_csv(rows, out);
  return out.str();
}

std::filesystem::path temp_dir(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("grid spec") {
  const auto v = GridSpec{1e-5, 10.0, 41}.values();
  REQUIRE(v.size() == 41);
  CHECK(v.front() == 1e-5);
  CHECK(v.back() == 10.0);
  CHECK(v[20] == doctest::Approx(std::pow(10.0, -2.0)));
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 3}.values()), ConfigError);
  CHECK_THROWS_AS((GridSpec{1.0, 2.0, 1}.values()), ConfigError);
}

TEST_CASE("config parsing") {
  const auto c = parse(R"(
# comment
[sweep]
experiment = ngm
threads = 2
output = out.csv
[grid]
n_S_min = 0.01
n_S_max = 1   # trailing comment
points = 5
extra = 1e-4, 100
[detectors]
M = 5, 10
[quadrature]
nodes_gamma = 256
[optimizer]
coarse_points = 11
nu_grid = 0.5, 2, inf
)");
  CHECK(c.experiment == ExperimentKind::Ngm);
  CHECK(c.threads == 2);
  CHECK(c.output_path == "out.csv");
  CHECK(c.n_S_grid.points == 5);
  CHECK(c.M_list == std::vector<int>{5, 10});
  CHECK(c.nodes_gamma == 256);
  CHECK(c.optimizer.coarse_points == 11);
  REQUIRE(c.optimizer.nu_grid.size() == 3);
  CHECK(is_bpsk_shape(c.optimizer.nu_grid[2]));
  const auto n = c.n_S_values();
  CHECK(n.size() == 7);
  CHECK(n.front() == 1e-4);
  CHECK(n.back() == 100.0);

  const auto d = parse("[sweep]\nexperiment = gains\n");
  CHECK(d.M_list == std::vector<int>{5, 10});

  CHECK_THROWS_AS(parse("[sweep]\nexperiment = nope\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid]\npoints = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse("[sweep]\nexperiment = ngm\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[nowhere]\n"), ConfigError);
  CHECK_THROWS_AS(parse("[sweep]\nexperiment = ngm\n[grid]\npoints = x\n"), ConfigError);
  CHECK_THROWS_AS(parse("[sweep]\nexperiment = ngm\n[grid]\nn_S_min = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment = ngm\n"), ConfigError);
  CHECK_THROWS_AS(load_sweep_config("/nonexistent/sweep.cfg"), IoError);
}

TEST_CASE("baselines experiment") {
  auto c = SweepConfig::defaults(ExperimentKind::Baselines);
  c.n_S_grid = {0.01, 100.0, 5};
  const auto rows = run_experiment(c);
  REQUIRE(rows.size() == 20);
  for (const auto& r : rows) {
    if (r.n_S == 1.0 && r.detector == "Holevo") CHECK(r.bits_per_use == doctest::Approx(2.0));
    CHECK(std::abs(r.pie * r.n_S - r.bits_per_use) < 1e-9);
  }
}

TEST_CASE("single-quadrature sweep, determinism and threads") {
  auto c = SweepConfig::defaults(ExperimentKind::SingleQuadrature);
  c.n_S_grid = {1e-3, 3.0, 4};
  c.M_list = {1, 5};
  const auto rows = run_experiment(c);
  REQUIRE(rows.size() == 16);
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    REQUIRE(rows[i].detector == "HL");
    REQUIRE(rows[i + 1].detector == "WH");
    CHECK(rows[i].bits_per_use <= rows[i + 1].bits_per_use + 1e-9);
    CHECK(std::abs(rows[i].pie * rows[i].n_S - rows[i].bits_per_use) < 1e-9);
  }
  c.threads = 3;
  CHECK(csv_without_times(run_experiment(c)) == csv_without_times(rows));
}

TEST_CASE("CSV round trip") {
  ResultRow a;
  a.experiment = "ngm";
  a.n_S = 0.123456789012345;
  a.M = 5;
  a.detector = "WH";
  a.modulation = "ngm_opt";
  a.bits_per_use = 1.0 / 3.0;
  a.pie = a.bits_per_use / a.n_S;
  a.ratio = 0.9;
  a.gain = -0.25;
  a.z_opt = 1.7e-3;
  a.nu_opt = kBpskShape;
  a.node_count = 128;
  a.wall_time_s = 0.01;
  ResultRow b = a;
  b.nu_opt.reset();
  b.detector = "HL";
  std::stringstream ss;
  write_csv({a, b}, ss);
  CHECK(ss.str().find(",inf,") != std::string::npos);
  const auto back = parse_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].n_S == doctest::Approx(a.n_S).epsilon(1e-10));
  CHECK(back[0].bits_per_use == doctest::Approx(a.bits_per_use).epsilon(1e-10));
  CHECK(back[0].pie == doctest::Approx(a.pie).epsilon(1e-10));
  CHECK(back[0].z_opt == doctest::Approx(a.z_opt).epsilon(1e-10));
  CHECK(is_bpsk_shape(*back[0].nu_opt));
  CHECK(!back[1].nu_opt.has_value());
  CHECK(back[1].detector == "HL");

  CHECK_THROWS_AS(emit_csv({}, "/tmp/x.csv"), DomainError);
  CHECK_THROWS_AS(emit_csv({a}, "/nonexistent/dir/x.csv"), IoError);
  std::istringstream bad("experiment,n_S\n");
  CHECK_THROWS_AS(parse_csv(bad), ConfigError);
  std::istringstream short_row(std::string(kCsvHeader) + "\nngm,1,2\n");
  CHECK_THROWS_AS(parse_csv(short_row), ConfigError);
}

TEST_CASE("summary from rows alone") {
  CHECK(first_crossing({{1.0, -1.0}, {100.0, 1.0}}).value() == doctest::Approx(10.0));
  CHECK(!first_crossing({{1.0, 1.0}, {2.0, 2.0}}).has_value());

  auto c = SweepConfig::defaults(ExperimentKind::Baselines);
  c.n_S_grid = {0.05, 2.0, 81};
  const auto rows = run_experiment(c);
  const auto s = summarize(rows);
  REQUIRE(s.n_SH.has_value());
  REQUIRE(s.n_DH.has_value());
  CHECK(std::abs(*s.n_SH - 0.22) < 0.02);
  CHECK(std::abs(*s.n_DH - 0.79) < 0.02);
  std::ostringstream out;
  print_summary(s, out);
  CHECK(out.str().find("n_SH") != std::string::npos);
}

TEST_CASE("figure slices") {
  auto c = SweepConfig::defaults(ExperimentKind::Baselines);
  c.n_S_grid = {0.1, 1.0, 3};
  const auto dir = temp_dir("wfh_fig_test");
  write_figures(run_experiment(c), dir.string());
  for (int f : {1, 4, 5, 6, 7, 8, 9, 10, 11})
    CHECK(std::filesystem::exists(dir / ("fig" + std::to_string(f) + ".csv")));
  const auto fig1 = read_csv((dir / "fig1.csv").string());
  CHECK(fig1.size() == 12);
  std::filesystem::remove_all(dir);
}
