#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "zeno/model.hpp"
#include "zeno/qfi.hpp"
#include "zeno/sweep.hpp"

namespace zeno {

struct SweepSettings {
  double r_min = 0.0;
  double r_max = 3.0;
  double r_step = 0.01;
  bool asymptote = true;  // also probe r in {20, 50, 100} and record landmarks
};

struct BracketSettings {
  double r_lo;
  double r_hi;
};

struct GridSettings {
  double r_min = 0.0;
  double r_max = 3.0;
  double tau_lo = 0.0;
  double tau_hi = 6.283185307179586;
  int n_r = 100;
  int n_tau = 100;
};

// Full run configuration; every command reads the slices it needs. The
// artifact is seedless: identical configs give identical output bytes.
struct RunConfig {
  ModelParams model;
  QfiPolicy qfi;
  ErasureSearchConfig search;
  double sample_dt = 0.0;  // <= 0 resolves to model.delta_t / 200
  double tau = 1.5707963267948966;
  std::vector<int> n_list = {1, 2, 4, 8, 16, 32, 64, 128};
  SweepSettings sweep;
  BracketSettings ropt = {1.0, 2.0};
  BracketSettings rcrit = {1.9, 2.2};
  GridSettings grid;
  std::string output_dir = "out";

  double resolved_sample_dt() const;
  void validate() const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::filesystem::path& file);

// Apply one --set override, "key=value". Keys may be dotted ("model.nu",
// "grid.n_r") or bare ("nu", "tau", "r_step"); bare names resolve to their
// unique section, sweep settings taking the r_min/r_max/r_step names.
void apply_override(RunConfig& cfg, const std::string& assignment);

// Merge key/value pairs into <dir>/landmarks.json, keeping existing entries.
void merge_landmarks(const std::filesystem::path& dir,
                     const std::map<std::string, double>& values);

// manifest.json content for a command run.
nlohmann::json run_manifest(const std::string& command, const RunConfig& cfg);

}  // namespace zeno
