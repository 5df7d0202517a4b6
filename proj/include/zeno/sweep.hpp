#pragma once

#include <vector>

#include "zeno/model.hpp"

namespace zeno {

struct ErasureSearchConfig {
  double erasure_tol = 1e-9;
  double dt_scan_max = 6.283185307179586;  // 2*pi
  int dt_scan_points = 4000;
  double refine_tol = 1e-9;
  double jump_threshold = 0.5;

  void validate() const;
};

struct TauMinResult {
  bool erased;
  double tau_min;   // n_memory * delta_t at the accepted minimum; NaN if none erased
  double residual;  // p1 at the accepted minimum, or the best residual seen
  int branch;       // ordinal of the accepted local minimum in delta_t order; 0 if none
};

// Smallest total duration tau = N * delta_t at which the final excitation
// p1(tau) vanishes (<= erasure_tol), over delta_t in (0, dt_scan_max]:
// scan on a uniform grid, bracket each local minimum, refine by golden
// section, accept the first refined minimum reaching the tolerance.
// Requires nu = 1.
TauMinResult tau_min_for_r(const ModelParams& params, const ErasureSearchConfig& cfg);

struct RoptResult {
  double r_opt;
  double tau_min_opt;
};

// Golden-section minimum of tau_min(r) over [r_lo, r_hi] to width 1e-4,
// after checking unimodality on a coarse probe grid.
RoptResult find_r_opt(const ModelParams& params, double r_lo, double r_hi,
                      const ErasureSearchConfig& cfg);

// Bisection on the branch of the accepted minimum: below the critical r the
// first local minimum erases, above it only a later one does. The bracket
// endpoints must classify differently and their tau_min values must differ
// by more than cfg.jump_threshold. Returns the midpoint at width 1e-4.
double find_r_crit(const ModelParams& params, double r_lo, double r_hi,
                   const ErasureSearchConfig& cfg);

// tau_min at a single large coupling (r >= 20), for probing the r -> infinity
// plateau.
TauMinResult asymptote_tau_min(const ModelParams& params, double r_large,
                               const ErasureSearchConfig& cfg);

struct SweepRow {
  double r;
  TauMinResult result;
};

// tau_min_for_r on the inclusive grid r_min + k * r_step, k = 0, 1, ...
std::vector<SweepRow> sweep_r(const ModelParams& params, double r_min, double r_max, double r_step,
                              const ErasureSearchConfig& cfg);

struct FidelityCell {
  double r;
  double tau;
  double p1;
};

// Final excitation p1 on an n_r x n_tau grid (row-major in tau), with
// delta_t = tau / n_memory per cell. Resolution must be at least 50 x 50.
std::vector<FidelityCell> fidelity_grid(const ModelParams& params, double r_min, double r_max,
                                        int n_r, double tau_lo, double tau_hi, int n_tau);

}  // namespace zeno
