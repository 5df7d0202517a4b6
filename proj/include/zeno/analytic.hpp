#pragma once

namespace zeno {

// Closed forms for the uncorrelated-memory protocol (r = 0), with all times
// in units of 1/omega. A point inside window n_completed is addressed by the
// in-window offset s in [0, delta_t].
struct UncorrelatedPoint {
  double nu;
  int n_completed;  // number of fully elapsed swap intervals
  double s;         // time since the last interval boundary
  double delta_t;

  void validate() const;
};

struct SpeedValue {
  double value;
  bool discontinuity;  // rank-change point, value undefined (NaN)
};

struct TauQslValue {
  double value;
  bool divergent;  // zero integrated speed
};

// Effective excited population after n completed intervals: nu * cos^(2n)(delta_t).
double analytic_nu_effective(double nu, int n_completed, double delta_t);

// Excited population of Q: nu_n * cos^2(s).
double analytic_p1(const UncorrelatedPoint& p);

// Instantaneous QSL speed sqrt(F_Q)/2 of the reduced qubit state.
SpeedValue analytic_vqsl(const UncorrelatedPoint& p);

// Mandelstam-Tamm style bound tau / integral of vqsl for the n-interval
// protocol of total duration tau.
TauQslValue analytic_tau_qsl(double nu, double tau, int n);

}  // namespace zeno
