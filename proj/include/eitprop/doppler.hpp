#pragma once

#include <utility>
#include <vector>

#include "eitprop/mbe.hpp"
#include "eitprop/model.hpp"
#include "eitprop/response.hpp"

namespace eitprop {

/// Thermal velocity ensemble: quadrature nodes v_k (m/s) and probability
/// weights w_k (sum exactly 1) sampling the Maxwell-Boltzmann distribution
/// with sigma_v = sqrt(kB T / m).
struct VelocityEnsemble {
  enum class Kind { GaussHermite, Uniform };

  Kind kind = Kind::GaussHermite;
  std::vector<double> nodes;
  std::vector<double> weights;
  double sigma_v = 0.0;
  double temperature = 0.0;
  double mass = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
  void validate() const;
};

/// Gauss-Hermite nodes/weights rescaled to the thermal Gaussian. A positive
/// truncation drops nodes beyond truncation*sigma_v and renormalizes (the
/// discarded probability mass is < 6e-7 at 5 sigma).
VelocityEnsemble build_ensemble(double temperature, double mass, int n,
                                double truncation_sigma = 0.0);

/// Uniformly spaced nodes over +-span*sigma_v with trapezoid weights. Slower
/// to converge per node than Gauss-Hermite on smooth integrands, but able to
/// resolve the Gamma-scale velocity structure of EIT responses, which
/// Gauss-Hermite node spacing (~ sigma_v / sqrt(n)) cannot.
VelocityEnsemble build_uniform_ensemble(double temperature, double mass, int n,
                                        double span_sigma = 5.0);

/// Doppler-shifted one-photon detunings: Delta(v) = Delta - k v.
std::pair<double, double> shifted_detunings(double delta_s, double delta_c,
                                            double v, double k_s, double k_c);

/// Weighted average over the ensemble, fixed node order (bitwise
/// reproducible). Throws on node/response count mismatch.
Complex doppler_average(const std::vector<Complex>& per_node,
                        const VelocityEnsemble& ensemble);

/// Pointwise average of per-node traces (all traces share one grid).
std::vector<Complex> doppler_average(
    const std::vector<std::vector<Complex>>& per_node_traces,
    const VelocityEnsemble& ensemble);

/// Dressed-state effective Rabi frequency, Omega_eff = sqrt(Omega_c^2 + 4 Delta^2).
double effective_rabi(double omega_c, double delta);

/// Velocity classes for a Doppler-resolved propagation, shifts in Gamma units.
std::vector<VelocityClass> velocity_classes(const VelocityEnsemble& ensemble,
                                            const AtomSpec& spec, double k_s,
                                            double k_c);

struct Spectrum {
  std::vector<double> delta;  // two-photon detuning grid, Gamma units
  std::vector<Complex> chi;   // Doppler-averaged susceptibility

  int imag_minimum_index() const;
};

/// Steady-state Doppler-broadened EIT profile: for each grid point the signal
/// detuning is delta (control stays at the model's delta_c), each velocity
/// class is solved for its stationary state, and chi is averaged over the
/// ensemble.
Spectrum doppler_eit_spectrum(const SystemModel& model, const AtomSpec& spec,
                              const std::vector<double>& delta_grid,
                              const VelocityEnsemble& ensemble,
                              int n_threads = 0);

/// Transient response of the Doppler-broadened medium via the spatially
/// uniform OBE pipeline: per-node evolution, ensemble average of the
/// coherence, Beer-Lambert over the cell length.
ObeTrace doppler_transient_obe(const SystemModel& model, const AtomSpec& spec,
                               const VelocityEnsemble& ensemble,
                               const std::vector<double>& tau_grid,
                               const IntegratorConfig& cfg, int n_threads = 0);

}  // namespace eitprop
