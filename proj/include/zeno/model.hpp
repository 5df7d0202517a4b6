#pragma once

#include <vector>

#include "zeno/linalg.hpp"

namespace zeno {

// Physical parameters of the qubit + memory-chain model.
// Qubit Q is subsystem 0 (slowest tensor factor); memory qubits follow in
// chain order, so basis index bit weights are 2^(n_qubits - 1 - site).
struct ModelParams {
  double nu = 1.0;    // initial excited-state population of Q
  int n_memory = 3;   // memory chain length N
  double omega = 1.0; // Q <-> memory coupling rate
  double r = 0.0;     // memory-memory coupling in units of omega
  double delta_t = 0.6;

  void validate() const;
  int n_qubits() const { return n_memory + 1; }
  long dim() const { return 1L << n_qubits(); }
};

// Piecewise-constant interaction schedule: segment k couples Q to memory
// qubit k+1 while the full memory chain stays coupled at rate r*omega.
struct Schedule {
  struct Segment {
    double duration;
    int active_memory;  // 1-based memory site swapped with Q
  };
  std::vector<Segment> segments;

  double total_duration() const;
  std::vector<double> boundaries() const;  // segment start times plus final time
};

// i*g*(|0><1|_a tensor |1><0|_b - h.c.) embedded on sites a, b of n_qubits.
HermitianOperator excitation_swap_generator(int n_qubits, int site_a, int site_b, double g);

// Hamiltonian during segment k (1-based active memory site): the Q <-> site_k
// swap at rate omega plus every nearest-neighbour memory coupling at r*omega.
HermitianOperator segment_hamiltonian(const ModelParams& params, int active_memory);

// rho(0) = (nu |1><0...0| + (1-nu) |0><0...0|) tensor |0...0> memory, i.e.
// diag in the number basis with weight nu on index 2^N and 1-nu on index 0.
DensityMatrix initial_state(const ModelParams& params);

// Sequential schedule: n_intervals segments of length delta_t targeting
// memory sites 1..n_intervals.
Schedule sequential_schedule(const ModelParams& params, int n_intervals);

}  // namespace zeno
