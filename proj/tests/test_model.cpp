#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <complex>

#include "zeno/error.hpp"
#include "zeno/linalg.hpp"
#include "zeno/model.hpp"

using namespace zeno;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix lower() {  // |0><1|
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

ComplexMatrix raise() {  // |1><0|
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

// Independent construction of i g (|0><1|_a |1><0|_b - h.c.) via kron chains.
ComplexMatrix swap_by_kron(int n_qubits, int a, int b, double g) {
  ComplexMatrix t = ComplexMatrix::Identity(1, 1);
  for (int site = 0; site < n_qubits; ++site) {
    if (site == a)
      t = kron(t, lower());
    else if (site == b)
      t = kron(t, raise());
    else
      t = kron(t, ComplexMatrix::Identity(2, 2));
  }
  return I * g * (t - ComplexMatrix(t.adjoint()));
}

}  // namespace

TEST_CASE("two-qubit swap generator has the textbook entries") {
  const ComplexMatrix h = excitation_swap_generator(2, 0, 1, 1.5).matrix();
  REQUIRE(h.rows() == 4);
  // |01> = index 1, |10> = index 2: <01|H|10> = +i g.
  CHECK(h(1, 2) == Complex(0.0, 1.5));
  CHECK(h(2, 1) == Complex(0.0, -1.5));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!((i == 1 && j == 2) || (i == 2 && j == 1))) CHECK(h(i, j) == Complex(0.0));
}

TEST_CASE("swap generator matches an independent kron construction") {
  for (int nq : {2, 3, 4}) {
    for (int a = 0; a < nq; ++a) {
      for (int b = 0; b < nq; ++b) {
        if (a == b) continue;
        const ComplexMatrix built = excitation_swap_generator(nq, a, b, 0.7).matrix();
        CHECK(max_abs_entry(built - swap_by_kron(nq, a, b, 0.7)) == 0.0);
      }
    }
  }
}

TEST_CASE("swap generator annihilates the vacuum exactly") {
  const ComplexMatrix h = excitation_swap_generator(4, 0, 2, 1.0).matrix();
  CHECK(h.col(0).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h.row(0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("swap generator conserves total excitation number") {
  const ComplexMatrix h = excitation_swap_generator(3, 1, 2, 1.0).matrix();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (std::abs(h(i, j)) > 0.0)
        CHECK(std::popcount(static_cast<unsigned>(i)) ==
              std::popcount(static_cast<unsigned>(j)));
}

TEST_CASE("swap propagator rotates the excitation as cos/sin") {
  const double omega = 2.0, t = 0.7;
  const ComplexMatrix u = propagator(excitation_swap_generator(2, 0, 1, omega), t);
  // U |10> = cos(wt) |10> + sin(wt) |01>
  CHECK(u(2, 2).real() == doctest::Approx(std::cos(omega * t)).epsilon(1e-13));
  CHECK(u(1, 2).real() == doctest::Approx(std::sin(omega * t)).epsilon(1e-13));
  CHECK(std::abs(u(2, 2).imag()) < 1e-14);
  CHECK(std::abs(u(1, 2).imag()) < 1e-14);
  CHECK(std::abs(u(0, 2)) < 1e-14);
  CHECK(std::abs(u(3, 2)) < 1e-14);
}

TEST_CASE("full swap empties the qubit at omega t = pi/2") {
  const ComplexMatrix u = propagator(excitation_swap_generator(2, 0, 1, 1.0), M_PI_2);
  CHECK(std::abs(u(2, 2)) < 1e-14);
  CHECK(std::abs(u(1, 2)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("segment hamiltonian is the active swap plus the full chain") {
  ModelParams params;
  params.n_memory = 3;
  params.omega = 2.0;
  params.r = 0.5;
  const ComplexMatrix h = segment_hamiltonian(params, 2).matrix();
  const ComplexMatrix expected = swap_by_kron(4, 0, 2, 2.0) + swap_by_kron(4, 1, 2, 1.0) +
                                 swap_by_kron(4, 2, 3, 1.0);
  CHECK(max_abs_entry(h - expected) == 0.0);
}

TEST_CASE("segment hamiltonian with r = 0 is just the active swap") {
  ModelParams params;
  params.n_memory = 2;
  const ComplexMatrix h = segment_hamiltonian(params, 1).matrix();
  CHECK(max_abs_entry(h - swap_by_kron(3, 0, 1, 1.0)) == 0.0);
  CHECK_THROWS_AS(segment_hamiltonian(params, 3), Error);
  CHECK_THROWS_AS(segment_hamiltonian(params, 0), Error);
}

TEST_CASE("initial state is diagonal with weights nu and 1 - nu") {
  ModelParams params;
  params.nu = 0.6;
  params.n_memory = 2;
  const DensityMatrix rho = initial_state(params);
  REQUIRE(rho.dim() == 8);
  CHECK(rho.matrix()(0, 0) == Complex(0.4));
  CHECK(rho.matrix()(4, 4) == Complex(0.6));
  double off_diag = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!(i == j && (i == 0 || i == 4))) off_diag = std::max(off_diag, std::abs(rho.matrix()(i, j)));
  CHECK(off_diag == 0.0);
}

TEST_CASE("sequential schedule targets sites 1..n with equal durations") {
  ModelParams params;
  params.n_memory = 3;
  params.delta_t = 0.6;
  const Schedule s = sequential_schedule(params, 3);
  REQUIRE(s.segments.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(s.segments[k].duration == 0.6);
    CHECK(s.segments[k].active_memory == k + 1);
  }
  CHECK(s.total_duration() == doctest::Approx(1.8).epsilon(1e-15));
  const std::vector<double> b = s.boundaries();
  REQUIRE(b.size() == 4);
  CHECK(b[0] == 0.0);
  CHECK(b[1] == 0.6);
  CHECK(b[3] == doctest::Approx(1.8).epsilon(1e-15));

  CHECK(sequential_schedule(params, 2).segments.size() == 2);
  CHECK_THROWS_AS(sequential_schedule(params, 4), Error);
  CHECK_THROWS_AS(sequential_schedule(params, 0), Error);
}

TEST_CASE("model parameter validation rejects out-of-range values") {
  ModelParams params;
  CHECK_NOTHROW(params.validate());

  params.nu = 1.5;
  CHECK_THROWS_WITH_AS(params.validate(), "model: nu must lie in [0,1]", Error);
  params.nu = -0.1;
  CHECK_THROWS_AS(params.validate(), Error);
  params.nu = 1.0;

  params.n_memory = 0;
  CHECK_THROWS_AS(params.validate(), Error);
  params.n_memory = 3;

  params.omega = 0.0;
  CHECK_THROWS_AS(params.validate(), Error);
  params.omega = 1.0;

  params.r = -0.5;
  CHECK_THROWS_AS(params.validate(), Error);
  params.r = 0.0;

  params.delta_t = 0.0;
  CHECK_THROWS_AS(params.validate(), Error);
}
