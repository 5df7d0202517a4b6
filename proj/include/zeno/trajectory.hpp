#pragma once

#include <vector>

#include "zeno/linalg.hpp"
#include "zeno/model.hpp"

namespace zeno {

// Sample times for a schedule: every segment boundary exactly, plus uniform
// interior points at spacing sample_dt (boundary duplicates dropped).
std::vector<double> sample_grid(const Schedule& schedule, double sample_dt);

// Window containing t for a boundary list b_0 < ... < b_n: index k with
// b_k <= t < b_{k+1}, assigning interior boundaries to the window they start
// and the final time to the last window (offset = its full width).
struct WindowPoint {
  int index;
  double offset;  // t - b_index
};
WindowPoint locate_window(const std::vector<double>& boundaries, double t);

// Exact piecewise evolution of the full density matrix. Each segment stores
// the eigendecomposition of its Hamiltonian and the state at segment entry,
// so queries at arbitrary t are spectral (no stepping error).
class ScheduleEvolver {
public:
  ScheduleEvolver(const ModelParams& params, const Schedule& schedule, DensityMatrix rho0);

  double total_duration() const { return total_; }
  DensityMatrix full_state_at(double t) const;
  DensityMatrix reduced_qubit_state_at(double t) const;

private:
  struct Segment {
    double start;
    double duration;
    Eigendecomposition eig;
    ComplexMatrix rho_start;
  };
  const Segment& locate(double t, double& offset) const;

  ModelParams params_;
  std::vector<Segment> segments_;
  double total_;
};

// Rank-2 evolution: the initial state is nu |psi><psi| + (1-nu) |vac><vac|
// with |psi> = |1; 0...0>. The vacuum is annihilated by every segment
// Hamiltonian (zero-excitation sector), so only |psi> is propagated, as a
// state vector.
class Rank2Evolver {
public:
  Rank2Evolver(const ModelParams& params, const Schedule& schedule);

  double total_duration() const { return total_; }
  ComplexVector excited_component_at(double t) const;
  DensityMatrix reduced_qubit_state_at(double t) const;
  double p1_at(double t) const;

private:
  struct Segment {
    double start;
    double duration;
    Eigendecomposition eig;
    ComplexVector psi_start;
  };
  const Segment& locate(double t, double& offset) const;

  ModelParams params_;
  std::vector<Segment> segments_;
  double total_;
};

struct Trajectory {
  ModelParams params;
  Schedule schedule;
  std::vector<double> times;
  std::vector<double> p1;
  std::vector<double> purity;
  std::vector<DensityMatrix> reduced;
};

// Full density-matrix evolution sampled on sample_grid(schedule, sample_dt).
Trajectory evolve(const ModelParams& params, const Schedule& schedule, const DensityMatrix& rho0,
                  double sample_dt);
Trajectory evolve(const ModelParams& params, const Schedule& schedule, double sample_dt);

// Same trajectory through the rank-2 path; numerically equal to evolve()
// for the model initial state but computed independently.
Trajectory rank2_fast_path(const ModelParams& params, const Schedule& schedule, double sample_dt);

}  // namespace zeno
