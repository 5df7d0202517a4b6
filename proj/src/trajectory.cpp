#include "zeno/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/error.hpp"

namespace zeno {

namespace {

constexpr double kTimeSlack = 1e-9;

void require_schedule(const Schedule& schedule) {
  if (schedule.segments.empty()) throw Error("trajectory-sim", "schedule has no segments");
  for (const auto& seg : schedule.segments)
    if (!(seg.duration > 0.0)) throw Error("trajectory-sim", "segment durations must be > 0");
}

template <typename Segment>
const Segment& locate_segment(const std::vector<Segment>& segments, double total, double t,
                              double& offset) {
  if (t < -kTimeSlack || t > total + kTimeSlack)
    throw Error("trajectory-sim", "time outside schedule range");
  // Boundary times resolve to the later segment; the state is continuous, so
  // either segment gives the same value.
  std::size_t idx = segments.size() - 1;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (t < segments[k].start + segments[k].duration) {
      idx = k;
      break;
    }
  }
  offset = std::clamp(t - segments[idx].start, 0.0, segments[idx].duration);
  return segments[idx];
}

}  // namespace

WindowPoint locate_window(const std::vector<double>& boundaries, double t) {
  if (boundaries.size() < 2) throw Error("trajectory-sim", "need at least one window");
  if (t < boundaries.front() - kTimeSlack || t > boundaries.back() + kTimeSlack)
    throw Error("trajectory-sim", "time outside window range");
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k)
    if (t < boundaries[k + 1]) return {static_cast<int>(k), t - boundaries[k]};
  const std::size_t last = boundaries.size() - 2;
  return {static_cast<int>(last), boundaries.back() - boundaries[last]};
}

std::vector<double> sample_grid(const Schedule& schedule, double sample_dt) {
  require_schedule(schedule);
  if (!(sample_dt > 0.0)) throw Error("trajectory-sim", "sample_dt must be > 0");
  std::vector<double> grid;
  grid.push_back(0.0);
  double start = 0.0;
  for (const auto& seg : schedule.segments) {
    const double end = start + seg.duration;
    for (long k = 1;; ++k) {
      const double t = start + k * sample_dt;
      if (t >= end - 1e-9 * sample_dt) break;
      grid.push_back(t);
    }
    grid.push_back(end);
    start = end;
  }
  return grid;
}

ScheduleEvolver::ScheduleEvolver(const ModelParams& params, const Schedule& schedule,
                                 DensityMatrix rho0)
    : params_(params) {
  params_.validate();
  require_schedule(schedule);
  if (rho0.dim() != params.dim())
    throw Error("trajectory-sim", "initial state dimension does not match model");

  ComplexMatrix rho = rho0.matrix();
  double start = 0.0;
  segments_.reserve(schedule.segments.size());
  for (const auto& seg : schedule.segments) {
    Eigendecomposition eig = eig_hermitian(segment_hamiltonian(params, seg.active_memory));
    segments_.push_back({start, seg.duration, std::move(eig), rho});
    const ComplexMatrix u = propagator_from_eig(segments_.back().eig, seg.duration);
    rho = u * rho * u.adjoint();
    start += seg.duration;
  }
  total_ = start;
}

const ScheduleEvolver::Segment& ScheduleEvolver::locate(double t, double& offset) const {
  return locate_segment(segments_, total_, t, offset);
}

DensityMatrix ScheduleEvolver::full_state_at(double t) const {
  double offset = 0.0;
  const Segment& seg = locate(t, offset);
  const ComplexMatrix u = propagator_from_eig(seg.eig, offset);
  return DensityMatrix(u * seg.rho_start * u.adjoint());
}

DensityMatrix ScheduleEvolver::reduced_qubit_state_at(double t) const {
  const DensityMatrix full = full_state_at(t);
  const int dims[2] = {2, static_cast<int>(1L << params_.n_memory)};
  return partial_trace(full, dims, 0);
}

Rank2Evolver::Rank2Evolver(const ModelParams& params, const Schedule& schedule) : params_(params) {
  params_.validate();
  require_schedule(schedule);

  ComplexVector psi = ComplexVector::Zero(params.dim());
  psi(1L << params.n_memory) = 1.0;
  double start = 0.0;
  segments_.reserve(schedule.segments.size());
  for (const auto& seg : schedule.segments) {
    Eigendecomposition eig = eig_hermitian(segment_hamiltonian(params, seg.active_memory));
    segments_.push_back({start, seg.duration, std::move(eig), psi});
    psi = propagate_vector(segments_.back().eig, seg.duration, psi);
    start += seg.duration;
  }
  total_ = start;
}

const Rank2Evolver::Segment& Rank2Evolver::locate(double t, double& offset) const {
  return locate_segment(segments_, total_, t, offset);
}

ComplexVector Rank2Evolver::excited_component_at(double t) const {
  double offset = 0.0;
  const Segment& seg = locate(t, offset);
  return propagate_vector(seg.eig, offset, seg.psi_start);
}

DensityMatrix Rank2Evolver::reduced_qubit_state_at(double t) const {
  const ComplexVector psi = excited_component_at(t);
  const long m = 1L << params_.n_memory;
  Complex r00 = 0.0, r11 = 0.0, r10 = 0.0;
  for (long k = 0; k < m; ++k) {
    r00 += psi(k) * std::conj(psi(k));
    r11 += psi(m + k) * std::conj(psi(m + k));
    r10 += psi(m + k) * std::conj(psi(k));
  }
  const double nu = params_.nu;
  ComplexMatrix rho(2, 2);
  rho(0, 0) = nu * r00 + (1.0 - nu);
  rho(1, 1) = nu * r11;
  rho(1, 0) = nu * r10;
  rho(0, 1) = std::conj(rho(1, 0));
  return DensityMatrix(std::move(rho));
}

double Rank2Evolver::p1_at(double t) const {
  const ComplexVector psi = excited_component_at(t);
  const long m = 1L << params_.n_memory;
  double w = 0.0;
  for (long k = 0; k < m; ++k) w += std::norm(psi(m + k));
  return params_.nu * w;
}

namespace {

template <typename ReducedFn>
Trajectory sample_trajectory(const ModelParams& params, const Schedule& schedule, double sample_dt,
                             ReducedFn&& reduced_at) {
  Trajectory traj;
  traj.params = params;
  traj.schedule = schedule;
  traj.times = sample_grid(schedule, sample_dt);
  traj.p1.reserve(traj.times.size());
  traj.purity.reserve(traj.times.size());
  traj.reduced.reserve(traj.times.size());
  for (double t : traj.times) {
    DensityMatrix rho = reduced_at(t);
    traj.p1.push_back(rho.matrix()(1, 1).real());
    traj.purity.push_back(rho.purity());
    traj.reduced.push_back(std::move(rho));
  }
  return traj;
}

}  // namespace

Trajectory evolve(const ModelParams& params, const Schedule& schedule, const DensityMatrix& rho0,
                  double sample_dt) {
  ScheduleEvolver ev(params, schedule, rho0);
  return sample_trajectory(params, schedule, sample_dt,
                           [&](double t) { return ev.reduced_qubit_state_at(t); });
}

Trajectory evolve(const ModelParams& params, const Schedule& schedule, double sample_dt) {
  return evolve(params, schedule, initial_state(params), sample_dt);
}

Trajectory rank2_fast_path(const ModelParams& params, const Schedule& schedule, double sample_dt) {
  Rank2Evolver ev(params, schedule);
  return sample_trajectory(params, schedule, sample_dt,
                           [&](double t) { return ev.reduced_qubit_state_at(t); });
}

}  // namespace zeno
