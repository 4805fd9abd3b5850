#include "eitprop/response.hpp"

#include <cmath>

namespace eitprop {

void AtomSpec::validate(Scheme scheme) const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw InvalidParameterError(std::string(name) + " must be > 0");
  };
  positive(gamma, "gamma");
  positive(dipole, "dipole");
  positive(wavelength, "wavelength");
  positive(density, "density");
  positive(length, "length");
  positive(mass, "mass");
  if (gamma_deph < 0.0)
    throw InvalidParameterError("dephasing rate must be >= 0");
  if (scheme == Scheme::Lambda) {
    if (gamma31 < 0.0 || gamma32 < 0.0)
      throw InvalidParameterError("branch decay rates must be >= 0");
    if (std::abs(gamma31 + gamma32 - gamma) > 1e-9 * gamma)
      throw InvalidParameterError("Lambda spec needs gamma31 + gamma32 = gamma");
  }
}

double resonant_od(const AtomSpec& spec) {
  return spec.coupling_prefactor() / spec.gamma * spec.wavenumber() *
         spec.length;
}

AtomSpec calibrate_od(AtomSpec spec, double target_od) {
  if (!(target_od > 0.0))
    throw InvalidParameterError("target optical depth must be > 0");
  if (!(spec.density > 0.0) || !(spec.length > 0.0) || !(spec.wavelength > 0.0))
    throw InvalidParameterError("calibrate_od needs density, length, wavelength");
  spec.dipole = std::sqrt(target_od * constants::epsilon0 * constants::hbar *
                          spec.gamma /
                          (spec.density * spec.wavenumber() * spec.length));
  return spec;
}

Complex chi_from_coherence(Complex rho_ge, Complex omega,
                           const AtomSpec& spec) {
  if (omega == Complex(0.0))
    throw InvalidParameterError(
        "chi is undefined at zero drive; special-case dark fields upstream");
  return spec.coupling_prefactor() * rho_ge / omega;
}

Complex two_level_chi(double omega, double delta, const AtomSpec& spec) {
  const double g = spec.gamma;
  const double denom =
      4.0 * delta * delta + g * g + 2.0 * omega * omega;
  return -spec.coupling_prefactor() * Complex(2.0 * delta, -g) / denom;
}

Complex weak_chi(double delta, const AtomSpec& spec) {
  return -spec.coupling_prefactor() / Complex(2.0 * delta, spec.gamma);
}

Complex beer_lambert(Complex omega0, Complex chi, double k, double z) {
  const Complex phase(0.0, (1.0 + 0.5 * chi.real()) * k * z);
  return omega0 * std::exp(phase) * std::exp(-0.5 * chi.imag() * k * z);
}

ObeTrace trace_from_chi(const std::vector<double>& tau_grid,
                        std::vector<Complex> chi, const AtomSpec& spec) {
  ObeTrace out;
  out.tau = tau_grid;
  out.chi = std::move(chi);
  const double k = spec.wavenumber();
  out.transmission.reserve(out.tau.size());
  out.gain.reserve(out.tau.size());
  for (const Complex& c : out.chi) {
    if (!beer_lambert_expansion_ok(c)) out.chi_expansion_warning = true;
    const double ratio = std::abs(beer_lambert(1.0, c, k, spec.length));
    out.gain.push_back(ratio);
    out.transmission.push_back(ratio * ratio);
  }
  return out;
}

ObeTrace obe_transmission_trace(const SystemModel& model, const AtomSpec& spec,
                                const std::vector<double>& tau_grid,
                                const IntegratorConfig& cfg) {
  model.validate();
  spec.validate(model.scheme);
  Trajectory traj = evolve(model.initial_state(), model.hamiltonian_fn(),
                           model.lindblad(), tau_grid, cfg);
  std::vector<Complex> chi(tau_grid.size());
  for (size_t i = 0; i < tau_grid.size(); ++i) {
    // Signal drive in rad/s; a dark interval has zero response by definition.
    const Complex omega = model.drive.signal(tau_grid[i]) * spec.gamma;
    if (omega == Complex(0.0)) {
      chi[i] = 0.0;
      continue;
    }
    const Complex rho_ge = model.signal_coherence(traj.states[i].matrix());
    chi[i] = chi_from_coherence(rho_ge, omega, spec);
  }
  return trace_from_chi(tau_grid, std::move(chi), spec);
}

}  // namespace eitprop
