#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeno/analytic.hpp"
#include "zeno/config.hpp"
#include "zeno/error.hpp"
#include "zeno/io.hpp"
#include "zeno/model.hpp"
#include "zeno/qfi.hpp"
#include "zeno/sweep.hpp"
#include "zeno/trajectory.hpp"

namespace {

namespace fs = std::filesystem;
using zeno::RunConfig;

void run_analytic(const RunConfig& cfg, const fs::path& out) {
  const zeno::ModelParams& m = cfg.model;
  const zeno::Schedule schedule = zeno::sequential_schedule(m, m.n_memory);
  const std::vector<double> boundaries = schedule.boundaries();
  const std::vector<double> grid = zeno::sample_grid(schedule, cfg.resolved_sample_dt());

  std::vector<zeno::AnalyticRow> rows;
  rows.reserve(grid.size());
  for (double t : grid) {
    const zeno::WindowPoint w = zeno::locate_window(boundaries, t);
    const zeno::UncorrelatedPoint point{m.nu, w.index, m.omega * w.offset, m.omega * m.delta_t};
    rows.push_back({t, zeno::analytic_p1(point), zeno::analytic_vqsl(point)});
  }
  zeno::write_text_file(out / "analytic.csv", zeno::analytic_csv(rows));
}

void run_simulate(const RunConfig& cfg, const fs::path& out) {
  const zeno::Schedule schedule = zeno::sequential_schedule(cfg.model, cfg.model.n_memory);
  const zeno::Trajectory traj = zeno::evolve(cfg.model, schedule, cfg.resolved_sample_dt());
  zeno::write_text_file(out / "trajectory.csv", zeno::trajectory_csv(traj));
}

void run_qfi(const RunConfig& cfg, const fs::path& out) {
  const zeno::Schedule schedule = zeno::sequential_schedule(cfg.model, cfg.model.n_memory);
  const zeno::Trajectory traj =
      zeno::rank2_fast_path(cfg.model, schedule, cfg.resolved_sample_dt());
  const zeno::QslCurve curve = zeno::vqsl_curve(traj, cfg.qfi);
  if (curve.fd_warnings > 0)
    std::cerr << "warning: finite-difference check flagged " << curve.fd_warnings
              << " of " << curve.times.size() << " samples\n";
  zeno::write_text_file(out / "qfi.csv", zeno::qfi_csv(curve));
}

void run_tau_qsl(const RunConfig& cfg, const fs::path& out) {
  std::vector<zeno::TauQslValue> values;
  values.reserve(cfg.n_list.size());
  for (int n : cfg.n_list)
    values.push_back(zeno::analytic_tau_qsl(cfg.model.nu, cfg.tau, n));
  zeno::write_text_file(out / "tau_qsl.csv", zeno::tau_qsl_csv(cfg.n_list, values));
}

void run_sweep_r(const RunConfig& cfg, const fs::path& out) {
  const std::vector<zeno::SweepRow> rows =
      zeno::sweep_r(cfg.model, cfg.sweep.r_min, cfg.sweep.r_max, cfg.sweep.r_step, cfg.search);
  zeno::write_text_file(out / "sweep.csv", zeno::sweep_csv(rows));
  if (cfg.sweep.asymptote) {
    std::map<std::string, double> landmarks;
    for (double r : {20.0, 50.0, 100.0}) {
      const zeno::TauMinResult res = zeno::asymptote_tau_min(cfg.model, r, cfg.search);
      if (!res.erased)
        throw zeno::Error("sweep-optimize",
                          "no erasure at asymptote probe r = " + zeno::format_double(r));
      landmarks["tau_min_r" + std::to_string(static_cast<int>(r))] = res.tau_min;
    }
    zeno::merge_landmarks(out, landmarks);
  }
}

void run_find_ropt(const RunConfig& cfg, const fs::path& out) {
  const zeno::RoptResult res =
      zeno::find_r_opt(cfg.model, cfg.ropt.r_lo, cfg.ropt.r_hi, cfg.search);
  zeno::merge_landmarks(out, {{"r_opt", res.r_opt}, {"tau_min_opt", res.tau_min_opt}});
}

void run_find_rcrit(const RunConfig& cfg, const fs::path& out) {
  const double r_crit = zeno::find_r_crit(cfg.model, cfg.rcrit.r_lo, cfg.rcrit.r_hi, cfg.search);
  zeno::merge_landmarks(out, {{"r_crit", r_crit}});
}

void run_grid(const RunConfig& cfg, const fs::path& out) {
  const std::vector<zeno::FidelityCell> cells =
      zeno::fidelity_grid(cfg.model, cfg.grid.r_min, cfg.grid.r_max, cfg.grid.n_r,
                          cfg.grid.tau_lo, cfg.grid.tau_hi, cfg.grid.n_tau);
  zeno::write_text_file(out / "grid.csv", zeno::grid_csv(cells));
}

int run(const std::string& command, const RunConfig& cfg) {
  static const std::set<std::string> known = {"analytic", "simulate", "qfi",       "tau-qsl",
                                              "sweep-r",  "find-ropt", "find-rcrit", "grid"};
  if (!known.count(command)) throw zeno::Error("cli-io", "unknown command: " + command);

  cfg.validate();
  const fs::path out(cfg.output_dir);
  fs::create_directories(out);

  if (command == "analytic") run_analytic(cfg, out);
  else if (command == "simulate") run_simulate(cfg, out);
  else if (command == "qfi") run_qfi(cfg, out);
  else if (command == "tau-qsl") run_tau_qsl(cfg, out);
  else if (command == "sweep-r") run_sweep_r(cfg, out);
  else if (command == "find-ropt") run_find_ropt(cfg, out);
  else if (command == "find-rcrit") run_find_rcrit(cfg, out);
  else run_grid(cfg, out);

  zeno::write_text_file(out / "manifest.json", zeno::run_manifest(command, cfg).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeno-lab: piecewise-swap qubit dynamics, QFI speed limits, erasure landmarks"};
  app.get_formatter()->column_width(28);

  std::string command;
  std::string config_file;
  std::string out_dir;
  std::vector<std::string> overrides;
  app.add_option("command", command,
                 "one of: analytic, simulate, qfi, tau-qsl, sweep-r, find-ropt, find-rcrit, grid")
      ->required();
  app.add_option("--config", config_file, "JSON config file");
  app.add_option("--set", overrides, "override a config entry, key=value (repeatable)");
  app.add_option("--out", out_dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_file.empty() ? RunConfig{} : zeno::load_config(config_file);
    for (const std::string& assignment : overrides) zeno::apply_override(cfg, assignment);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    return run(command, cfg);
  } catch (const zeno::Error& e) {
    const nlohmann::json err = {{"module", e.module()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    const nlohmann::json err = {{"module", "cli-io"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
