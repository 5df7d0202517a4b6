#include "zeno/linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error("linalg-core", std::string(what) + " has non-finite entries");
}

}  // namespace

double max_abs_entry(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) throw Error("linalg-core", "operator must be square");
  require_finite(mat_, "operator");
  const double dev = max_abs_entry(mat_ - mat_.adjoint());
  if (dev > kHermitianTol)
    throw Error("linalg-core", "operator deviates from Hermitian by " + std::to_string(dev));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) throw Error("linalg-core", "density matrix must be square");
  require_finite(mat_, "density matrix");
  const double herm_dev = max_abs_entry(mat_ - mat_.adjoint());
  if (herm_dev > kHermitianTol)
    throw Error("linalg-core",
                "density matrix deviates from Hermitian by " + std::to_string(herm_dev));
  const double trace_dev = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol)
    throw Error("linalg-core", "density matrix trace deviates from 1 by " + std::to_string(trace_dev));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("linalg-core", "eigenvalue check failed to converge");
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor)
    throw Error("linalg-core", "density matrix has eigenvalue " + std::to_string(min_eig));
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigendecomposition eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("linalg-core", "eigendecomposition failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix propagator_from_eig(const Eigendecomposition& e, double t) {
  const Eigen::Index n = e.eigenvalues.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k)
    phases(k) = std::exp(Complex(0.0, -e.eigenvalues(k) * t));
  return e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
}

ComplexMatrix propagator(const HermitianOperator& h, double t) {
  ComplexMatrix u = propagator_from_eig(eig_hermitian(h), t);
  const ComplexMatrix dev = u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols());
  if (max_abs_entry(dev) > kUnitaryTol)
    throw Error("linalg-core", "propagator deviates from unitary");
  return u;
}

ComplexVector propagate_vector(const Eigendecomposition& e, double t, const ComplexVector& psi) {
  ComplexVector coeffs = e.eigenvectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::exp(Complex(0.0, -e.eigenvalues(k) * t));
  return e.eigenvectors * coeffs;
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::span<const int> dims, int keep) {
  if (m.rows() != m.cols()) throw Error("linalg-core", "partial trace needs a square matrix");
  if (dims.empty()) throw Error("linalg-core", "partial trace needs at least one subsystem");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw Error("linalg-core", "subsystem dimensions must be positive");
    total *= d;
  }
  if (total != m.rows())
    throw Error("linalg-core", "subsystem dimensions do not match matrix size");
  if (keep < 0 || keep >= static_cast<int>(dims.size()))
    throw Error("linalg-core", "keep index out of range");

  long stride = 1;
  for (std::size_t j = keep + 1; j < dims.size(); ++j) stride *= dims[j];
  const int dk = dims[keep];

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    const long ki = (row / stride) % dk;
    const long rest = row - ki * stride;
    for (int kj = 0; kj < dk; ++kj) out(ki, kj) += m(row, rest + kj * stride);
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims, int keep) {
  return DensityMatrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

}  // namespace zeno
