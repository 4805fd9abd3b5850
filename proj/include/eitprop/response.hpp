#pragma once

#include <complex>
#include <vector>

#include "eitprop/constants.hpp"
#include "eitprop/integrator.hpp"
#include "eitprop/model.hpp"

namespace eitprop {

/// Physical description of the medium in SI units. All rate fields are
/// angular frequencies (rad/s). Validation is explicit so that pure-formula
/// helpers (e.g. resonant_od with N = 0) stay usable on partial specs.
struct AtomSpec {
  double gamma = 0.0;       // total excited-state decay rate
  double gamma31 = 0.0;     // Lambda: decay 3 -> 1
  double gamma32 = 0.0;     // Lambda: decay 3 -> 2
  double gamma_deph = 0.0;  // ground-state dephasing
  double dipole = 0.0;      // d21, C m
  double wavelength = 0.0;  // m
  double density = 0.0;     // atoms / m^3
  double length = 0.0;      // medium length, m
  double mass = 0.0;        // kg

  double wavenumber() const { return 2.0 * constants::pi / wavelength; }

  /// N |d21|^2 / (eps0 hbar), the rad/s scale multiplying rho_ge/Omega in chi.
  double coupling_prefactor() const {
    return density * dipole * dipole / (constants::epsilon0 * constants::hbar);
  }

  void validate(Scheme scheme) const;
};

/// Resonant optical depth, OD = (N |d21|^2 / eps0 hbar Gamma) k L.
double resonant_od(const AtomSpec& spec);

/// Solve the optical-depth formula for the dipole moment so that
/// resonant_od(spec) == target. The paper quotes OD rather than d21.
AtomSpec calibrate_od(AtomSpec spec, double target_od);

/// chi = (N |d21|^2 / eps0 hbar) rho_ge / Omega, with Omega in rad/s.
Complex chi_from_coherence(Complex rho_ge, Complex omega, const AtomSpec& spec);

/// Closed-form two-level susceptibility,
/// chi = -(N|d21|^2/eps0 hbar) (2 Delta - i Gamma) / (4 Delta^2 + Gamma^2 + 2 Omega^2).
Complex two_level_chi(double omega, double delta, const AtomSpec& spec);

/// Weak-field limit, chi = -(N|d21|^2/eps0 hbar) / (2 Delta + i Gamma).
Complex weak_chi(double delta, const AtomSpec& spec);

/// Beer-Lambert propagation over distance z:
/// Omega(z) = Omega0 exp(i(1 + Re chi / 2) k z) exp(-(Im chi / 2) k z).
/// Valid for |chi| << 1; callers surface a warning above 0.5 (see
/// beer_lambert_expansion_ok).
Complex beer_lambert(Complex omega0, Complex chi, double k, double z);

inline bool beer_lambert_expansion_ok(Complex chi) {
  return std::abs(chi) <= 0.5;
}

/// Spatially uniform (single-atom) transmission pipeline: evolve the OBEs,
/// convert the ground-excited coherence to chi(tau), apply Beer-Lambert over
/// the medium length.
struct ObeTrace {
  std::vector<double> tau;           // 1/Gamma
  std::vector<Complex> chi;          // dimensionless
  std::vector<double> transmission;  // |Omega(L)/Omega(0)|^2
  std::vector<double> gain;          // |Omega(L)/Omega(0)|
  bool chi_expansion_warning = false;

  double steady_transmission() const { return transmission.back(); }
};

ObeTrace obe_transmission_trace(const SystemModel& model, const AtomSpec& spec,
                                const std::vector<double>& tau_grid,
                                const IntegratorConfig& cfg);

/// Beer-Lambert mapping of an already-averaged chi trace (shared by the
/// Doppler pipeline).
ObeTrace trace_from_chi(const std::vector<double>& tau_grid,
                        std::vector<Complex> chi, const AtomSpec& spec);

}  // namespace eitprop
