#pragma once

#include <functional>
#include <vector>

#include "eitprop/density_matrix.hpp"
#include "eitprop/operators.hpp"

namespace eitprop {

struct IntegratorConfig {
  enum class Method { FixedRk4, AdaptiveRk45 };

  Method method = Method::AdaptiveRk45;
  double atol = 1e-12;
  double rtol = 1e-10;
  double max_step = 0.05;   // units of 1/Gamma
  double init_step = 1e-3;

  void validate() const;
};

/// Time-dependent Hamiltonian source; fills a preallocated matrix.
using HamiltonianFn = std::function<void(double t, Matrix& h)>;

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;

  const DensityMatrix& final_state() const { return states.back(); }
};

/// Allocation-free master-equation RHS evaluator. The dissipator is baked
/// into a superoperator once; only the commutator depends on the fields.
class MasterEqWork {
 public:
  MasterEqWork(int dim, const LindbladSet& lindblad);

  int dim() const { return dim_; }

  /// out = -i[h, y] + D[y]
  void rhs(const Matrix& h, const Matrix& y, Matrix& out);

 private:
  int dim_;
  Matrix diss_;  // dim^2 x dim^2
  Matrix t1_;
};

/// Integrate the master equation over [0, t_end], sampling the state at the
/// given times (which must be ascending, starting at 0). The trajectory keeps
/// Hermiticity exact (re-symmetrized each accepted step); trace and positivity
/// follow from the generator and are monitored by the test suite.
Trajectory evolve(const DensityMatrix& rho0, const HamiltonianFn& h_of_t,
                  const LindbladSet& lindblad,
                  const std::vector<double>& sample_times,
                  const IntegratorConfig& cfg);

/// Convenience overload: n_samples uniform samples over [0, t_end].
Trajectory evolve(const DensityMatrix& rho0, const HamiltonianFn& h_of_t,
                  const LindbladSet& lindblad, double t_end,
                  const IntegratorConfig& cfg, int n_samples = 201);

/// Constant-Hamiltonian overload.
Trajectory evolve(const DensityMatrix& rho0, const Matrix& h,
                  const LindbladSet& lindblad, double t_end,
                  const IntegratorConfig& cfg, int n_samples = 201);

std::vector<double> uniform_grid(double t_end, int n_samples);

}  // namespace eitprop
