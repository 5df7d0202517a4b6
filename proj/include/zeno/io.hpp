#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zeno/analytic.hpp"
#include "zeno/qfi.hpp"
#include "zeno/sweep.hpp"
#include "zeno/trajectory.hpp"

namespace zeno {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

struct AnalyticRow {
  double t;
  double p1;
  SpeedValue vqsl;
};

std::string analytic_csv(const std::vector<AnalyticRow>& rows);      // t,p1,vqsl,discontinuity
std::string trajectory_csv(const Trajectory& traj);                  // t,p1,purity_Q
std::string qfi_csv(const QslCurve& curve);                          // t,qfi,vqsl,rank_truncated
std::string tau_qsl_csv(const std::vector<int>& ns,
                        const std::vector<TauQslValue>& values);     // n,tau_qsl,divergent
std::string sweep_csv(const std::vector<SweepRow>& rows);            // r,tau_min,residual,branch
std::string grid_csv(const std::vector<FidelityCell>& cells);        // r,tau,p1

}  // namespace zeno
