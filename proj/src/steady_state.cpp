#include "eitprop/steady_state.hpp"

#include <cmath>

namespace eitprop {

DensityMatrix steady_state(const Matrix& h, const LindbladSet& lindblad) {
  const int n = static_cast<int>(h.rows());
  const Matrix liou = liouvillian(h, lindblad);

  // Uniqueness requires a one-dimensional kernel. Trace preservation already
  // guarantees rank <= n^2 - 1, so anything lower is a degenerate manifold.
  Eigen::FullPivLU<Matrix> rank_lu(liou);
  double rate_scale = 0.0;
  for (const auto& [a, rate] : lindblad.ops())
    rate_scale = std::max(rate_scale, rate);
  rank_lu.setThreshold(1e-10);
  if (rank_lu.rank() < n * n - 1)
    throw SingularSteadyStateError(
        "stationary subspace is degenerate; no unique steady state");

  Matrix sys = liou;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n * n);
  // Replace the d/dt rho_00 row (index 0 in column-major vec) by the trace row.
  for (int j = 0; j < n * n; ++j) sys(0, j) = 0.0;
  for (int d = 0; d < n; ++d) sys(0, d * n + d) = 1.0;
  rhs(0) = 1.0;

  Eigen::PartialPivLU<Matrix> lu(sys);
  Eigen::VectorXcd x = lu.solve(rhs);

  Matrix rho(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rho(i, j) = x(j * n + i);

  // Residual check against the full Liouvillian (scaled by the largest rate).
  const double resid = (liou * x).cwiseAbs().maxCoeff();
  const double tol = 1e-10 * std::max(rate_scale, 1.0);
  if (!std::isfinite(resid) || resid > tol)
    throw SingularSteadyStateError("steady-state residual too large");

  return DensityMatrix(rho);
}

}  // namespace eitprop
