#pragma once

#include <functional>
#include <vector>

#include "zeno/linalg.hpp"
#include "zeno/trajectory.hpp"

namespace zeno {

struct QfiPolicy {
  double eig_floor = 1e-10;  // drop spectral terms with eigenvalue-pair sum <= floor
  double fd_step = 1e-6;     // finite-difference step for d(rho)/dt

  void validate() const;
};

struct QfiValue {
  double value;
  bool rank_truncated;  // some spectral term was dropped at eig_floor
};

// Quantum Fisher information 2 sum_{i,j} |<i|drho|j>|^2 / (lambda_i + lambda_j)
// over eigenpairs of rho with lambda_i + lambda_j > eig_floor.
QfiValue qfi_spectral(const DensityMatrix& rho, const ComplexMatrix& drho_dt,
                      const QfiPolicy& policy);

struct QslCurve {
  std::vector<double> times;
  std::vector<double> qfi;
  std::vector<double> vqsl;  // sqrt(qfi)/2
  std::vector<char> rank_truncated;
  // The speed jumps at segment boundaries. Rows at a boundary carry the
  // right-limit (next segment); these parallel lists keep the left-limit at
  // each interior boundary so integration does not lose the closing panel.
  std::vector<double> boundary_times;
  std::vector<double> boundary_left_vqsl;
  int fd_warnings = 0;  // points where halving fd_step shifted vqsl by > 1e-5 relative
};

// Reduced qubit state at arbitrary time, used to resimulate at stencil offsets.
using ReducedStateFn = std::function<DensityMatrix(double)>;

// QSL speed along a trajectory. d(rho)/dt uses central differences, switching
// to second-order one-sided stencils within fd_step of a segment boundary so
// no stencil straddles a Hamiltonian switch. The trajectory must start from
// the model initial state (the resimulation path assumes it).
QslCurve vqsl_curve(const Trajectory& traj, const QfiPolicy& policy);
QslCurve vqsl_curve(const Trajectory& traj, const QfiPolicy& policy, const ReducedStateFn& state_at);

struct TauQslNumeric {
  double value;
  bool divergent;
};

// tau / integral_0^tau vqsl dt by trapezoid on the curve grid.
TauQslNumeric tau_qsl_from_curve(const QslCurve& curve, double tau);

}  // namespace zeno
