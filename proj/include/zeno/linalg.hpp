#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>

namespace zeno {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kUnitaryTol = 1e-10;

double max_abs_entry(const ComplexMatrix& m);

// Square matrix checked to be Hermitian within kHermitianTol on construction.
class HermitianOperator {
public:
  explicit HermitianOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

private:
  ComplexMatrix mat_;
};

// Hermitian, unit trace, spectrum >= kEigenvalueFloor; enforced on construction.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double purity() const;

private:
  ComplexMatrix mat_;
};

struct Eigendecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, matching eigenvalue order
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Eigendecomposition eig_hermitian(const HermitianOperator& h);

// exp(-i H t) from a precomputed eigendecomposition of H.
ComplexMatrix propagator_from_eig(const Eigendecomposition& e, double t);
ComplexMatrix propagator(const HermitianOperator& h, double t);

// Apply exp(-i H t) to a vector without forming the full propagator.
ComplexVector propagate_vector(const Eigendecomposition& e, double t, const ComplexVector& psi);

// Trace out all subsystems except `keep`. `dims` lists subsystem dimensions,
// leftmost factor slowest (index = sum_k idx_k * prod_{j>k} dims_j).
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::span<const int> dims, int keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims, int keep);

}  // namespace zeno
