#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eitprop/density_matrix.hpp"
#include "eitprop/errors.hpp"

namespace eitprop {

/// Rotating-frame two-level Hamiltonian in angular-frequency units (hbar = 1):
///   H = -[ Delta |2><2| + (Omega/2) |1><2| + (Omega*/2) |2><1| ]
/// Level |1> is the energy reference (zero diagonal element).
Matrix build_two_level_hamiltonian(double delta, Complex omega);

/// Lambda-system Hamiltonian. States |1>,|2> are the metastable ground pair,
/// |3> the shared excited state; signal couples 1<->3, control 2<->3.
/// With the two-photon detuning d = delta_s - delta_c:
///   H = -[ d |2><2| + Delta_s |3><3| + (Omega_s/2)|1><3| + (Omega_c/2)|2><3| + h.c. ]
Matrix build_lambda_hamiltonian(double delta_s, double delta_c, Complex omega_s,
                                Complex omega_c);

struct JumpOperator {
  Matrix op;    // jump operator A
  double rate;  // >= 0, angular-frequency units
};

/// Dissipative part of the master equation: a list of (A_i, rate_i) generating
///   sum_i rate_i ( A rho A+  -  1/2 {A+A, rho} ).
class LindbladSet {
 public:
  LindbladSet() = default;

  void add(Matrix a, double rate);
  int size() const { return static_cast<int>(ops_.size()); }
  int dim() const;
  const std::vector<JumpOperator>& ops() const { return ops_; }

  /// Superoperator D acting on vec(rho) (column-major), dim^2 x dim^2.
  Matrix dissipator_superoperator(int dim) const;

  /// Spontaneous emission |2> -> |1> at rate gamma_total.
  static LindbladSet two_level_decay(double gamma_total);

  /// Lambda decays 3->1, 3->2 plus ground-state dephasing. The dephasing
  /// jump operator is the projector |2><2| with rate 2*gamma_deph, which damps
  /// the rho12 ground coherence at exactly gamma_deph.
  static LindbladSet lambda_decay(double gamma31, double gamma32,
                                  double gamma_deph);

 private:
  std::vector<JumpOperator> ops_;
};

/// Full master-equation right-hand side, -i[H,rho] + D[rho].
/// Checked to be Hermitian and traceless by construction.
Matrix lindblad_rhs(const DensityMatrix& rho, const Matrix& h,
                    const LindbladSet& lindblad);

/// Liouvillian superoperator L with L vec(rho) = vec(-i[H,rho] + D[rho]).
Matrix liouvillian(const Matrix& h, const LindbladSet& lindblad);

}  // namespace eitprop
