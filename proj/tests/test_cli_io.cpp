#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <random>
#include <string>

#include "json.hpp"
#include "zeno/config.hpp"
#include "zeno/error.hpp"
#include "zeno/io.hpp"

using namespace zeno;
using nlohmann::json;

namespace {

std::filesystem::path fresh_dir(const char* name) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("format_double emits shortest round-trip decimals") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(0.6) == "0.6");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(3.141592653589793) == "3.141592653589793");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("format_double round-trips exactly on random values") {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-12, 12);
  for (int i = 0; i < 2000; ++i) {
    const double v = mantissa(rng) * std::pow(10.0, expo(rng));
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("text files round-trip and report open failures") {
  const std::filesystem::path dir = fresh_dir("zeno_io_files");
  const std::filesystem::path file = dir / "probe.txt";
  const std::string payload = "line one\nline two\n";
  write_text_file(file, payload);
  CHECK(read_text_file(file) == payload);
  CHECK_THROWS_AS(read_text_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("analytic csv rows are frozen byte for byte") {
  std::vector<AnalyticRow> rows;
  rows.push_back({0.5, 0.25, {0.75, false}});
  rows.push_back({0.0, 1.0, {std::numeric_limits<double>::quiet_NaN(), true}});
  CHECK(analytic_csv(rows) ==
        "t,p1,vqsl,discontinuity\n"
        "0.5,0.25,0.75,0\n"
        "0,1,nan,1\n");
}

TEST_CASE("trajectory csv rows are frozen byte for byte") {
  Trajectory traj;
  traj.times = {0.0, 0.25};
  traj.p1 = {1.0, 0.875};
  traj.purity = {1.0, 0.78125};
  CHECK(trajectory_csv(traj) ==
        "t,p1,purity_Q\n"
        "0,1,1\n"
        "0.25,0.875,0.78125\n");
}

TEST_CASE("qfi csv rows are frozen byte for byte") {
  QslCurve curve;
  curve.times = {0.0, 0.1};
  curve.qfi = {4.0, 2.0};
  curve.vqsl = {1.0, 0.5};
  curve.rank_truncated = {1, 0};
  CHECK(qfi_csv(curve) ==
        "t,qfi,vqsl,rank_truncated\n"
        "0,4,1,1\n"
        "0.1,2,0.5,0\n");
}

TEST_CASE("tau_qsl csv rows are frozen and lengths must agree") {
  const std::vector<int> ns = {1, 2};
  std::vector<TauQslValue> values;
  values.push_back({1.5, false});
  values.push_back({std::numeric_limits<double>::infinity(), true});
  CHECK(tau_qsl_csv(ns, values) ==
        "n,tau_qsl,divergent\n"
        "1,1.5,0\n"
        "2,inf,1\n");
  CHECK_THROWS_AS(tau_qsl_csv({1}, values), Error);
}

TEST_CASE("sweep csv rows are frozen byte for byte") {
  std::vector<SweepRow> rows;
  rows.push_back({0.5, {true, 1.25, 0.0, 1}});
  rows.push_back({2.0, {false, std::numeric_limits<double>::quiet_NaN(), 0.125, 0}});
  CHECK(sweep_csv(rows) ==
        "r,tau_min,residual,branch\n"
        "0.5,1.25,0,1\n"
        "2,nan,0.125,0\n");
}

TEST_CASE("grid csv rows are frozen byte for byte") {
  std::vector<FidelityCell> cells;
  cells.push_back({0.0, 0.0, 0.9});
  cells.push_back({0.5, 1.5, 0.125});
  CHECK(grid_csv(cells) ==
        "r,tau,p1\n"
        "0,0,0.9\n"
        "0.5,1.5,0.125\n");
}

TEST_CASE("config serialization round-trips exactly") {
  RunConfig cfg;
  cfg.model.nu = 0.9;
  cfg.model.r = 1.7;
  cfg.qfi.fd_step = 1e-7;
  cfg.search.dt_scan_points = 500;
  cfg.tau = 2.5;
  cfg.n_list = {1, 3, 9};
  cfg.sweep.asymptote = false;
  cfg.grid.n_tau = 64;
  cfg.output_dir = "elsewhere";

  const json j = config_to_json(cfg);
  const RunConfig back = config_from_json(j);
  CHECK(config_to_json(back).dump() == j.dump());
  CHECK(j.at("seedless").get<bool>());
}

TEST_CASE("partial configs keep defaults for absent keys") {
  const json j = json::parse(R"({"model": {"nu": 0.5}, "tau": 2.5, "seedless": true})");
  const RunConfig cfg = config_from_json(j);
  CHECK(cfg.model.nu == 0.5);
  CHECK(cfg.model.n_memory == 3);
  CHECK(cfg.model.delta_t == 0.6);
  CHECK(cfg.tau == 2.5);
  CHECK(cfg.n_list.size() == 8);
  CHECK(cfg.sweep.r_step == 0.01);
  CHECK(cfg.output_dir == "out");
}

TEST_CASE("malformed configs are rejected with the offending key") {
  CHECK_THROWS_AS(config_from_json(json::array()), Error);
  CHECK_THROWS_WITH_AS(config_from_json(json::parse(R"({"bogus": 1})")),
                       "cli-io: unknown config key: bogus", Error);
  CHECK_THROWS_WITH_AS(config_from_json(json::parse(R"({"model": {"mu": 1}})")),
                       "cli-io: unknown config key: model.mu", Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"model": {"nu": "x"}})")), Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"model": {"n_memory": 2.5}})")), Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"model": 3})")), Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"n_list": 3})")), Error);
  CHECK_THROWS_WITH_AS(config_from_json(json::parse(R"({"seedless": false})")),
                       "cli-io: seedless must be true", Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"sweep": {"asymptote": 1}})")), Error);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"output_dir": 4})")), Error);
}

TEST_CASE("config files load and parse errors carry the path") {
  const std::filesystem::path dir = fresh_dir("zeno_io_config");
  write_text_file(dir / "good.json", R"({"tau": 3.0, "seedless": true})");
  const RunConfig cfg = load_config(dir / "good.json");
  CHECK(cfg.tau == 3.0);

  write_text_file(dir / "bad.json", "{not json");
  try {
    load_config(dir / "bad.json");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad.json") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("overrides resolve bare and dotted keys") {
  RunConfig cfg;
  apply_override(cfg, "nu=0.99");
  CHECK(cfg.model.nu == 0.99);
  apply_override(cfg, "model.nu=0.5");
  CHECK(cfg.model.nu == 0.5);
  apply_override(cfg, "n_memory=4");
  CHECK(cfg.model.n_memory == 4);
  apply_override(cfg, "fd_step=1e-7");
  CHECK(cfg.qfi.fd_step == 1e-7);
  apply_override(cfg, "dt_scan_points=800");
  CHECK(cfg.search.dt_scan_points == 800);
  apply_override(cfg, "r_step=0.1");
  CHECK(cfg.sweep.r_step == 0.1);
  apply_override(cfg, "asymptote=false");
  CHECK(cfg.sweep.asymptote == false);
  apply_override(cfg, "tau_lo=1");
  CHECK(cfg.grid.tau_lo == 1.0);
  apply_override(cfg, "grid.n_r=60");
  CHECK(cfg.grid.n_r == 60);
  apply_override(cfg, "ropt.r_lo=1.2");
  CHECK(cfg.ropt.r_lo == 1.2);
  apply_override(cfg, "tau=2.25");
  CHECK(cfg.tau == 2.25);
  apply_override(cfg, "sample_dt=0.01");
  CHECK(cfg.sample_dt == 0.01);
  apply_override(cfg, "output_dir=results");
  CHECK(cfg.output_dir == "results");
  apply_override(cfg, "n_list=1,2,4");
  CHECK(cfg.n_list == std::vector<int>{1, 2, 4});
}

TEST_CASE("bad overrides are rejected") {
  RunConfig cfg;
  CHECK_THROWS_WITH_AS(apply_override(cfg, "r_lo=1.0"),
                       "cli-io: ambiguous key r_lo; use ropt.r_lo or rcrit.r_lo", Error);
  CHECK_THROWS_AS(apply_override(cfg, "r_hi=1.0"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "bogus=1"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "model.bogus=1"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "nu"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "=5"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "nu=abc"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "nu=0.5x"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "n_memory=2.5"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "asymptote=maybe"), Error);
  CHECK_THROWS_AS(apply_override(cfg, "n_list=1,,2"), Error);
}

TEST_CASE("run configuration validation rejects bad slices") {
  RunConfig cfg;
  cfg.validate();
  CHECK(cfg.resolved_sample_dt() == 0.6 / 200.0);
  cfg.sample_dt = 0.01;
  CHECK(cfg.resolved_sample_dt() == 0.01);

  cfg = RunConfig{};
  cfg.tau = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.sample_dt = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.n_list.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.n_list = {4, 0};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.output_dir.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.model.nu = 1.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.sweep.r_step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.ropt = {2.0, 1.0};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.rcrit = {1.9, 1.9};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.grid.tau_hi = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.grid.n_r = 1;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("landmarks merge instead of overwriting") {
  const std::filesystem::path dir = fresh_dir("zeno_io_landmarks");
  merge_landmarks(dir, {{"r_opt", 1.61}, {"tau_min_opt", 1.807}});
  json j = json::parse(read_text_file(dir / "landmarks.json"));
  CHECK(j.size() == 2);
  CHECK(j.at("r_opt").get<double>() == 1.61);

  merge_landmarks(dir, {{"r_crit", 2.09}, {"r_opt", 1.62}});
  const std::string text = read_text_file(dir / "landmarks.json");
  CHECK(text.back() == '\n');
  j = json::parse(text);
  CHECK(j.size() == 3);
  CHECK(j.at("r_opt").get<double>() == 1.62);
  CHECK(j.at("tau_min_opt").get<double>() == 1.807);
  CHECK(j.at("r_crit").get<double>() == 2.09);

  write_text_file(dir / "landmarks.json", "[]");
  CHECK_THROWS_AS(merge_landmarks(dir, {{"x", 1.0}}), Error);
  write_text_file(dir / "landmarks.json", "{broken");
  CHECK_THROWS_AS(merge_landmarks(dir, {{"x", 1.0}}), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run manifests name the artifact and embed the config") {
  RunConfig cfg;
  cfg.model.r = 2.0;
  const json j = run_manifest("simulate", cfg);
  CHECK(j.at("artifact").get<std::string>() == "zeno-lab");
  CHECK(j.at("version").get<std::string>() == "0.1.0");
  CHECK(j.at("command").get<std::string>() == "simulate");
  CHECK(j.at("config").at("model").at("r").get<double>() == 2.0);
  CHECK(j.at("config").at("seedless").get<bool>());
}
