#include "zeno/qfi.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

namespace {

constexpr double kDerivativeHermTol = 1e-8;

enum class Stencil { Central, Forward, Backward };

struct Window {
  double start;
  double end;
};

Window window_containing(const std::vector<double>& boundaries, double t) {
  const WindowPoint w = locate_window(boundaries, t);
  return {boundaries[w.index], boundaries[w.index + 1]};
}

Stencil pick_stencil(const Window& w, double t, double h) {
  if (w.end - w.start < 4.0 * h)
    throw Error("qfi-qsl", "segment too short for fd_step");
  const double margin = h * (1.0 - 1e-9);
  if (t - w.start < margin) return Stencil::Forward;
  if (w.end - t < margin) return Stencil::Backward;
  return Stencil::Central;
}

ComplexMatrix fd_derivative(const ReducedStateFn& state_at, const Window& w, double t, double h) {
  switch (pick_stencil(w, t, h)) {
    case Stencil::Central:
      return (state_at(t + h).matrix() - state_at(t - h).matrix()) / (2.0 * h);
    case Stencil::Forward:
      return (-3.0 * state_at(t).matrix() + 4.0 * state_at(t + h).matrix() -
              state_at(t + 2.0 * h).matrix()) /
             (2.0 * h);
    case Stencil::Backward:
      return (3.0 * state_at(t).matrix() - 4.0 * state_at(t - h).matrix() +
              state_at(t - 2.0 * h).matrix()) /
             (2.0 * h);
  }
  throw Error("qfi-qsl", "unreachable stencil case");
}

}  // namespace

void QfiPolicy::validate() const {
  if (!(eig_floor > 0.0)) throw Error("qfi-qsl", "eig_floor must be > 0");
  if (!(fd_step > 0.0)) throw Error("qfi-qsl", "fd_step must be > 0");
}

QfiValue qfi_spectral(const DensityMatrix& rho, const ComplexMatrix& drho_dt,
                      const QfiPolicy& policy) {
  policy.validate();
  if (drho_dt.rows() != rho.dim() || drho_dt.cols() != rho.dim())
    throw Error("qfi-qsl", "derivative dimension does not match state");
  if (max_abs_entry(drho_dt - drho_dt.adjoint()) > kDerivativeHermTol)
    throw Error("qfi-qsl", "derivative is not Hermitian");
  if (std::abs(drho_dt.trace()) > kDerivativeHermTol)
    throw Error("qfi-qsl", "derivative is not traceless");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("qfi-qsl", "state eigendecomposition failed to converge");
  const RealVector& lam = solver.eigenvalues();
  const ComplexMatrix a = solver.eigenvectors().adjoint() * drho_dt * solver.eigenvectors();

  double f = 0.0;
  bool truncated = false;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
      const double pair = lam(i) + lam(j);
      if (pair <= policy.eig_floor) {
        truncated = true;
        continue;
      }
      f += 2.0 * std::norm(a(i, j)) / pair;
    }
  }
  if (f < -1e-10) throw Error("qfi-qsl", "negative QFI " + std::to_string(f));
  return {std::max(f, 0.0), truncated};
}

QslCurve vqsl_curve(const Trajectory& traj, const QfiPolicy& policy,
                    const ReducedStateFn& state_at) {
  policy.validate();
  if (traj.times.empty()) throw Error("qfi-qsl", "trajectory has no samples");
  const std::vector<double> boundaries = traj.schedule.boundaries();

  QslCurve curve;
  curve.times = traj.times;
  curve.qfi.reserve(traj.times.size());
  curve.vqsl.reserve(traj.times.size());
  curve.rank_truncated.reserve(traj.times.size());

  const double h = policy.fd_step;
  for (double t : traj.times) {
    const Window w = window_containing(boundaries, t);
    const DensityMatrix rho = state_at(t);
    const QfiValue qfi = qfi_spectral(rho, fd_derivative(state_at, w, t, h), policy);
    const double v = 0.5 * std::sqrt(qfi.value);

    const QfiValue check = qfi_spectral(rho, fd_derivative(state_at, w, t, 2.0 * h), policy);
    const double v2 = 0.5 * std::sqrt(check.value);
    if (v > 1e-8 && std::abs(v - v2) > 1e-5 * v) ++curve.fd_warnings;

    curve.qfi.push_back(qfi.value);
    curve.vqsl.push_back(v);
    curve.rank_truncated.push_back(qfi.rank_truncated ? 1 : 0);
  }

  // Left limits at interior boundaries, via backward stencils in the closing
  // segment.
  for (std::size_t k = 1; k + 1 < boundaries.size(); ++k) {
    const double b = boundaries[k];
    const ComplexMatrix drho = (3.0 * state_at(b).matrix() - 4.0 * state_at(b - h).matrix() +
                                state_at(b - 2.0 * h).matrix()) /
                               (2.0 * h);
    const QfiValue qfi = qfi_spectral(state_at(b), drho, policy);
    curve.boundary_times.push_back(b);
    curve.boundary_left_vqsl.push_back(0.5 * std::sqrt(qfi.value));
  }
  return curve;
}

QslCurve vqsl_curve(const Trajectory& traj, const QfiPolicy& policy) {
  Rank2Evolver resim(traj.params, traj.schedule);
  return vqsl_curve(traj, policy,
                    [&resim](double t) { return resim.reduced_qubit_state_at(t); });
}

TauQslNumeric tau_qsl_from_curve(const QslCurve& curve, double tau) {
  if (curve.times.size() < 2) throw Error("qfi-qsl", "curve needs at least two samples");
  if (!(tau > 0.0)) throw Error("qfi-qsl", "tau must be > 0");
  if (tau > curve.times.back() + 1e-9) throw Error("qfi-qsl", "tau exceeds curve range");

  // A panel closing on an interior boundary must integrate toward the
  // left-limit speed, not the stored right-limit row.
  const auto right_value = [&](std::size_t i) {
    const double t = curve.times[i];
    for (std::size_t k = 0; k < curve.boundary_times.size(); ++k)
      if (curve.boundary_times[k] == t) return curve.boundary_left_vqsl[k];
    return curve.vqsl[i];
  };

  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < curve.times.size(); ++i) {
    const double t0 = curve.times[i], t1 = curve.times[i + 1];
    if (t1 <= t0) throw Error("qfi-qsl", "curve times must be strictly increasing");
    if (t1 <= tau) {
      integral += 0.5 * (curve.vqsl[i] + right_value(i + 1)) * (t1 - t0);
      if (t1 == tau) break;
    } else if (t0 < tau) {
      const double frac = (tau - t0) / (t1 - t0);
      const double v_end = right_value(i + 1);
      const double v_tau = curve.vqsl[i] + frac * (v_end - curve.vqsl[i]);
      integral += 0.5 * (curve.vqsl[i] + v_tau) * (tau - t0);
      break;
    } else {
      break;
    }
  }
  if (integral <= 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {tau / integral, false};
}

}  // namespace zeno
