#include "eitprop/operators.hpp"

#include <cmath>

namespace eitprop {

namespace {

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::InvalidParameter: return "invalid-parameter";
    case ErrorCategory::DimensionMismatch: return "dimension-mismatch";
    case ErrorCategory::Integration: return "integration";
    case ErrorCategory::SingularSteadyState: return "singular-steady-state";
    case ErrorCategory::GridRefinement: return "grid-refinement";
    case ErrorCategory::UndefinedGain: return "undefined-gain";
    case ErrorCategory::Config: return "config";
    case ErrorCategory::Io: return "io";
  }
  return "unknown";
}

Matrix build_two_level_hamiltonian(double delta, Complex omega) {
  if (!finite(delta) || !finite(omega))
    throw InvalidParameterError("two-level Hamiltonian: non-finite input");
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = -delta;
  h(0, 1) = -0.5 * omega;
  h(1, 0) = -0.5 * std::conj(omega);
  return h;
}

Matrix build_lambda_hamiltonian(double delta_s, double delta_c, Complex omega_s,
                                Complex omega_c) {
  if (!finite(delta_s) || !finite(delta_c) || !finite(omega_s) ||
      !finite(omega_c))
    throw InvalidParameterError("lambda Hamiltonian: non-finite input");
  const double two_photon = delta_s - delta_c;
  Matrix h = Matrix::Zero(3, 3);
  h(1, 1) = -two_photon;
  h(2, 2) = -delta_s;
  h(0, 2) = -0.5 * omega_s;
  h(2, 0) = -0.5 * std::conj(omega_s);
  h(1, 2) = -0.5 * omega_c;
  h(2, 1) = -0.5 * std::conj(omega_c);
  return h;
}

void LindbladSet::add(Matrix a, double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate))
    throw InvalidParameterError("Lindblad rate must be finite and >= 0");
  if (a.rows() != a.cols())
    throw DimensionError("jump operator must be square");
  if (!ops_.empty() && a.rows() != ops_.front().op.rows())
    throw DimensionError("jump operators must share one dimension");
  ops_.push_back({std::move(a), rate});
}

int LindbladSet::dim() const {
  return ops_.empty() ? 0 : static_cast<int>(ops_.front().op.rows());
}

Matrix LindbladSet::dissipator_superoperator(int n) const {
  Matrix d = Matrix::Zero(n * n, n * n);
  const Matrix eye = Matrix::Identity(n, n);
  for (const auto& [a, rate] : ops_) {
    if (a.rows() != n) throw DimensionError("jump operator dimension mismatch");
    const Matrix ada = a.adjoint() * a;
    d += rate * (kron(a.conjugate(), a) - 0.5 * kron(eye, ada) -
                 0.5 * kron(ada.transpose(), eye));
  }
  return d;
}

LindbladSet LindbladSet::two_level_decay(double gamma_total) {
  LindbladSet set;
  Matrix lower = Matrix::Zero(2, 2);
  lower(0, 1) = 1.0;
  set.add(std::move(lower), gamma_total);
  return set;
}

LindbladSet LindbladSet::lambda_decay(double gamma31, double gamma32,
                                      double gamma_deph) {
  LindbladSet set;
  Matrix a31 = Matrix::Zero(3, 3);
  a31(0, 2) = 1.0;
  set.add(std::move(a31), gamma31);
  Matrix a32 = Matrix::Zero(3, 3);
  a32(1, 2) = 1.0;
  set.add(std::move(a32), gamma32);
  Matrix proj2 = Matrix::Zero(3, 3);
  proj2(1, 1) = 1.0;
  set.add(std::move(proj2), 2.0 * gamma_deph);
  return set;
}

Matrix lindblad_rhs(const DensityMatrix& rho, const Matrix& h,
                    const LindbladSet& lindblad) {
  const Matrix& r = rho.matrix();
  if (h.rows() != r.rows())
    throw DimensionError("Hamiltonian/state dimension mismatch");
  Matrix out = Complex(0.0, -1.0) * (h * r - r * h);
  for (const auto& [a, rate] : lindblad.ops()) {
    if (a.rows() != r.rows())
      throw DimensionError("jump operator/state dimension mismatch");
    const Matrix ada = a.adjoint() * a;
    out += rate * (a * r * a.adjoint() - 0.5 * (ada * r + r * ada));
  }
  return out;
}

Matrix liouvillian(const Matrix& h, const LindbladSet& lindblad) {
  const int n = static_cast<int>(h.rows());
  const Matrix eye = Matrix::Identity(n, n);
  Matrix l = Complex(0.0, -1.0) * (kron(eye, h) - kron(h.transpose(), eye));
  l += lindblad.dissipator_superoperator(n);
  return l;
}

}  // namespace eitprop
