#include "zeno/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

namespace {

// Per-r cache of the segment eigendecompositions; delta_t stays free, so one
// profile serves the whole scan over delta_t.
class ErasureProfile {
public:
  explicit ErasureProfile(const ModelParams& params)
      : nu_(params.nu), n_memory_(params.n_memory) {
    psi0_ = ComplexVector::Zero(params.dim());
    psi0_(1L << n_memory_) = 1.0;
    eigs_.reserve(n_memory_);
    for (int k = 1; k <= n_memory_; ++k)
      eigs_.push_back(eig_hermitian(segment_hamiltonian(params, k)));
  }

  double p1_final(double dt) const {
    ComplexVector psi = psi0_;
    for (const auto& eig : eigs_) psi = propagate_vector(eig, dt, psi);
    const long m = 1L << n_memory_;
    double w = 0.0;
    for (long k = 0; k < m; ++k) w += std::norm(psi(m + k));
    return nu_ * w;
  }

private:
  double nu_;
  int n_memory_;
  ComplexVector psi0_;
  std::vector<Eigendecomposition> eigs_;
};

struct GoldenResult {
  double x;
  double fx;
};

template <typename F>
GoldenResult golden_min(F&& f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

ModelParams with_r(const ModelParams& params, double r) {
  ModelParams p = params;
  p.r = r;
  return p;
}

}  // namespace

void ErasureSearchConfig::validate() const {
  if (!(erasure_tol > 0.0)) throw Error("sweep-optimize", "erasure_tol must be > 0");
  if (!(dt_scan_max > 0.0)) throw Error("sweep-optimize", "dt_scan_max must be > 0");
  if (dt_scan_points < 100) throw Error("sweep-optimize", "dt_scan_points must be >= 100");
  if (!(refine_tol > 0.0)) throw Error("sweep-optimize", "refine_tol must be > 0");
  if (!(jump_threshold > 0.0)) throw Error("sweep-optimize", "jump_threshold must be > 0");
}

TauMinResult tau_min_for_r(const ModelParams& params, const ErasureSearchConfig& cfg) {
  params.validate();
  cfg.validate();
  if (params.nu != 1.0) throw Error("sweep-optimize", "tau_min_for_r requires nu = 1");

  const ErasureProfile profile(params);
  const int n = cfg.dt_scan_points;
  std::vector<double> dts(n), vals(n);
  for (int i = 0; i < n; ++i) {
    dts[i] = cfg.dt_scan_max * (i + 1) / n;
    vals[i] = profile.p1_final(dts[i]);
  }

  int ordinal = 0;
  double best_res = std::numeric_limits<double>::infinity();
  double best_tau = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i + 1 < n; ++i) {
    if (!(vals[i] < vals[i - 1] && vals[i] <= vals[i + 1])) continue;
    ++ordinal;
    const GoldenResult min = golden_min([&](double dt) { return profile.p1_final(dt); },
                                        dts[i - 1], dts[i + 1], cfg.refine_tol);
    if (min.fx <= cfg.erasure_tol)
      return {true, params.n_memory * min.x, min.fx, ordinal};
    if (min.fx < best_res) {
      best_res = min.fx;
      best_tau = params.n_memory * min.x;
    }
  }
  if (!std::isfinite(best_res)) {
    for (int i = 0; i < n; ++i) best_res = std::min(best_res, vals[i]);
  }
  return {false, best_tau, best_res, 0};
}

RoptResult find_r_opt(const ModelParams& params, double r_lo, double r_hi,
                      const ErasureSearchConfig& cfg) {
  if (!(r_lo >= 0.0 && r_hi > r_lo)) throw Error("sweep-optimize", "invalid r_opt bracket");
  const auto tau_at = [&](double r) {
    const TauMinResult res = tau_min_for_r(with_r(params, r), cfg);
    if (!res.erased)
      throw Error("sweep-optimize", "no erasure at r = " + std::to_string(r) + " inside bracket");
    return res.tau_min;
  };

  constexpr int kProbes = 9;
  double probe_tau[kProbes];
  for (int k = 0; k < kProbes; ++k)
    probe_tau[k] = tau_at(r_lo + (r_hi - r_lo) * k / (kProbes - 1));
  int imin = 0;
  for (int k = 1; k < kProbes; ++k)
    if (probe_tau[k] < probe_tau[imin]) imin = k;
  for (int k = 0; k + 1 < kProbes; ++k) {
    const bool ok = (k < imin) ? probe_tau[k + 1] <= probe_tau[k] + 1e-12
                               : probe_tau[k + 1] >= probe_tau[k] - 1e-12;
    if (!ok) throw Error("sweep-optimize", "tau_min is not unimodal over the r_opt bracket");
  }

  const GoldenResult min = golden_min(tau_at, r_lo, r_hi, 1e-4);
  return {min.x, min.fx};
}

double find_r_crit(const ModelParams& params, double r_lo, double r_hi,
                   const ErasureSearchConfig& cfg) {
  if (!(r_lo >= 0.0 && r_hi > r_lo)) throw Error("sweep-optimize", "invalid r_crit bracket");
  const auto on_first_branch = [&](const TauMinResult& res) { return res.erased && res.branch == 1; };

  const TauMinResult lo = tau_min_for_r(with_r(params, r_lo), cfg);
  const TauMinResult hi = tau_min_for_r(with_r(params, r_hi), cfg);
  if (!lo.erased || !hi.erased)
    throw Error("sweep-optimize", "r_crit bracket endpoint fails to erase");
  const bool lo_first = on_first_branch(lo);
  if (lo_first == on_first_branch(hi))
    throw Error("sweep-optimize", "r_crit bracket endpoints lie on the same branch");
  if (!(std::abs(hi.tau_min - lo.tau_min) > cfg.jump_threshold))
    throw Error("sweep-optimize", "tau_min jump across r_crit bracket below jump_threshold");

  double a = r_lo, b = r_hi;
  while (b - a > 1e-4) {
    const double mid = 0.5 * (a + b);
    const TauMinResult res = tau_min_for_r(with_r(params, mid), cfg);
    if (on_first_branch(res) == lo_first)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

TauMinResult asymptote_tau_min(const ModelParams& params, double r_large,
                               const ErasureSearchConfig& cfg) {
  if (!(r_large >= 20.0)) throw Error("sweep-optimize", "asymptote probe requires r >= 20");
  return tau_min_for_r(with_r(params, r_large), cfg);
}

std::vector<SweepRow> sweep_r(const ModelParams& params, double r_min, double r_max, double r_step,
                              const ErasureSearchConfig& cfg) {
  if (!(r_min >= 0.0) || !(r_max >= r_min) || !(r_step > 0.0))
    throw Error("sweep-optimize", "invalid sweep range");
  std::vector<double> rs;
  for (long k = 0;; ++k) {
    const double r = r_min + k * r_step;
    if (r > r_max + 1e-9 * r_step) break;
    rs.push_back(r);
  }

  std::vector<SweepRow> rows(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) {
    rows[i] = {rs[i], tau_min_for_r(with_r(params, rs[i]), cfg)};
  });
  return rows;
}

std::vector<FidelityCell> fidelity_grid(const ModelParams& params, double r_min, double r_max,
                                        int n_r, double tau_lo, double tau_hi, int n_tau) {
  params.validate();
  if (!(r_min >= 0.0) || !(r_max > r_min) || !(tau_lo >= 0.0) || !(tau_hi > tau_lo))
    throw Error("sweep-optimize", "invalid grid range");
  if (n_r < 50 || n_tau < 50)
    throw Error("sweep-optimize", "grid resolution must be at least 50 x 50");

  std::vector<FidelityCell> cells(static_cast<std::size_t>(n_r) * n_tau);
  parallel_for(n_r, [&](std::size_t i) {
    const double r = r_min + (r_max - r_min) * static_cast<double>(i) / (n_r - 1);
    const ErasureProfile profile(with_r(params, r));
    for (int j = 0; j < n_tau; ++j) {
      const double tau = tau_lo + (tau_hi - tau_lo) * static_cast<double>(j) / (n_tau - 1);
      cells[i * n_tau + j] = {r, tau, profile.p1_final(tau / params.n_memory)};
    }
  });
  return cells;
}

}  // namespace zeno
