#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eitprop/errors.hpp"

namespace eitprop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Atomic state: complex Hermitian matrix of dimension 2 or 3, unit trace.
/// Hermiticity is enforced on construction and after every mutation through
/// hermitize(); evolution code calls it once per accepted step.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 3))
      throw DimensionError("density matrix must be 2x2 or 3x3");
    hermitize();
  }

  /// All population in level |level> (0-based), no coherences.
  static DensityMatrix pure(int dim, int level) {
    if (level < 0 || level >= dim)
      throw InvalidParameterError("pure-state level outside dimension");
    Matrix m = Matrix::Zero(dim, dim);
    m(level, level) = 1.0;
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix ground(int dim) { return pure(dim, 0); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  double population(int i) const { return m_(i, i).real(); }
  Complex coherence(int i, int j) const { return m_(i, j); }

  void hermitize() { m_ = 0.5 * (m_ + m_.adjoint()).eval(); }

  double trace_error() const { return std::abs(m_.trace() - Complex(1.0)); }

  double hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

 private:
  Matrix m_;
};

}  // namespace eitprop
