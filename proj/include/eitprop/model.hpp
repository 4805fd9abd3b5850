#pragma once

#include "eitprop/drive.hpp"
#include "eitprop/integrator.hpp"
#include "eitprop/operators.hpp"

namespace eitprop {

enum class Scheme { TwoLevel, Lambda };

/// How the atoms are prepared at tau = 0.
///  - Ground1: all population in |1>, no coherences (both fields step on).
///  - Ground2: all population in |2> (Lambda only).
///  - MixedGround: 50/50 incoherent mixture of |1>,|2> (Lambda only).
///  - SignalSteadyState: the signal transition pre-equilibrated in its closed
///    two-level steady state at the signal detuning; the control field then
///    steps on at tau = 0. This is the switching protocol behind the
///    transient-gain scenarios.
enum class InitialState { Ground1, Ground2, MixedGround, SignalSteadyState };

/// Single-atom model in Gamma-normalized units (total decay rate out of the
/// excited state = 1, times in 1/Gamma, Rabi frequencies/detunings in Gamma).
struct SystemModel {
  Scheme scheme = Scheme::TwoLevel;
  DriveProtocol drive;
  double branching31 = 0.5;  // Lambda: fraction of the decay going 3 -> 1
  double gamma_deph = 0.0;   // Lambda: ground-state dephasing, units of Gamma
  InitialState init = InitialState::Ground1;

  int dim() const { return scheme == Scheme::TwoLevel ? 2 : 3; }
  int excited_index() const { return dim() - 1; }

  void validate() const;

  LindbladSet lindblad() const;

  /// Rotating-frame Hamiltonian for explicit local fields (used by the
  /// propagation solver). Sign convention makes Im[chi] > 0 absorptive, i.e.
  /// the steady ground-excited coherence satisfies rho_ge/Omega of the
  /// two-level closed form.
  void fill_hamiltonian(Complex omega_s, Complex omega_c, Matrix& h) const;

  void hamiltonian_at(double t, Matrix& h) const;
  HamiltonianFn hamiltonian_fn() const;

  DensityMatrix initial_state() const;

  /// Ground-excited coherence sourcing the signal field: <1|rho|e>.
  Complex signal_coherence(const Matrix& rho) const {
    return rho(0, excited_index());
  }
  /// <2|rho|3> (Lambda only), sourcing the control field.
  Complex control_coherence(const Matrix& rho) const {
    return rho(1, 2);
  }

  /// Closed two-level steady state of a decay-1 transition driven at
  /// detuning delta with Rabi omega; returns {rho_ee, rho_ge}.
  static std::pair<double, Complex> two_level_steady(double delta,
                                                     Complex omega);

  /// Copy of this model with replaced one-photon detunings (Gamma units),
  /// e.g. the Doppler-shifted detunings of one velocity class.
  SystemModel with_detunings(double ds, double dc) const;
};

}  // namespace eitprop
