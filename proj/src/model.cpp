#include "zeno/model.hpp"

#include <string>

#include "zeno/error.hpp"

namespace zeno {

void ModelParams::validate() const {
  if (!(nu >= 0.0 && nu <= 1.0)) throw Error("model", "nu must lie in [0,1]");
  if (n_memory < 1 || n_memory > 8) throw Error("model", "n_memory must lie in [1,8]");
  if (!(omega > 0.0)) throw Error("model", "omega must be > 0");
  if (!(r >= 0.0)) throw Error("model", "r must be >= 0");
  if (!(delta_t > 0.0)) throw Error("model", "delta_t must be > 0");
}

double Schedule::total_duration() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.duration;
  return total;
}

std::vector<double> Schedule::boundaries() const {
  std::vector<double> b;
  b.reserve(segments.size() + 1);
  double t = 0.0;
  b.push_back(t);
  for (const auto& seg : segments) {
    t += seg.duration;
    b.push_back(t);
  }
  return b;
}

HermitianOperator excitation_swap_generator(int n_qubits, int site_a, int site_b, double g) {
  if (n_qubits < 2) throw Error("model", "need at least two qubits");
  if (site_a == site_b || site_a < 0 || site_b < 0 || site_a >= n_qubits || site_b >= n_qubits)
    throw Error("model", "swap sites must be distinct qubits");

  const long dim = 1L << n_qubits;
  const long wa = 1L << (n_qubits - 1 - site_a);
  const long wb = 1L << (n_qubits - 1 - site_b);

  // T = |0><1|_a |1><0|_b maps |..1_a..0_b..> -> |..0_a..1_b..>; H = i g (T - T^dag).
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (long idx = 0; idx < dim; ++idx) {
    if ((idx & wa) && !(idx & wb)) {
      const long jdx = idx - wa + wb;
      h(jdx, idx) += Complex(0.0, g);
      h(idx, jdx) += Complex(0.0, -g);
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator segment_hamiltonian(const ModelParams& params, int active_memory) {
  params.validate();
  if (active_memory < 1 || active_memory > params.n_memory)
    throw Error("model", "active memory site out of range");

  const int nq = params.n_qubits();
  ComplexMatrix h = excitation_swap_generator(nq, 0, active_memory, params.omega).matrix();
  for (int site = 1; site < params.n_memory; ++site)
    h += excitation_swap_generator(nq, site, site + 1, params.r * params.omega).matrix();
  return HermitianOperator(std::move(h));
}

DensityMatrix initial_state(const ModelParams& params) {
  params.validate();
  const long dim = params.dim();
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  const long excited = 1L << params.n_memory;  // Q bit set, memory empty
  rho(0, 0) = 1.0 - params.nu;
  rho(excited, excited) = params.nu;
  return DensityMatrix(std::move(rho));
}

Schedule sequential_schedule(const ModelParams& params, int n_intervals) {
  params.validate();
  if (n_intervals < 1) throw Error("model", "n_intervals must be >= 1");
  if (n_intervals > params.n_memory)
    throw Error("model", "n_intervals must be <= n_memory");
  Schedule s;
  s.segments.reserve(n_intervals);
  for (int k = 1; k <= n_intervals; ++k)
    s.segments.push_back({params.delta_t, k});
  return s;
}

}  // namespace zeno
