#include "eitprop/model.hpp"

#include <cmath>

namespace eitprop {

void SystemModel::validate() const {
  if (scheme == Scheme::TwoLevel) {
    if (init != InitialState::Ground1 && init != InitialState::SignalSteadyState)
      throw InvalidParameterError("two-level model supports Ground1 or "
                                  "SignalSteadyState preparation");
    return;
  }
  if (!(branching31 >= 0.0 && branching31 <= 1.0))
    throw InvalidParameterError("branching ratio must lie in [0,1]");
  if (!(gamma_deph >= 0.0))
    throw InvalidParameterError("dephasing rate must be >= 0");
}

LindbladSet SystemModel::lindblad() const {
  if (scheme == Scheme::TwoLevel) return LindbladSet::two_level_decay(1.0);
  return LindbladSet::lambda_decay(branching31, 1.0 - branching31, gamma_deph);
}

void SystemModel::fill_hamiltonian(Complex omega_s, Complex omega_c,
                                   Matrix& h) const {
  // Overall sign flipped relative to build_*_hamiltonian so that the steady
  // coherence <1|rho|e> is proportional to +Omega with the absorptive
  // (Im chi > 0) closed form; see two_level_chi.
  if (scheme == Scheme::TwoLevel) {
    h(0, 0) = 0.0;
    h(1, 1) = drive.delta_s;
    h(0, 1) = 0.5 * omega_s;
    h(1, 0) = 0.5 * std::conj(omega_s);
    return;
  }
  h(0, 0) = 0.0;
  h(0, 1) = 0.0;
  h(1, 0) = 0.0;
  h(1, 1) = drive.two_photon_detuning();
  h(2, 2) = drive.delta_s;
  h(0, 2) = 0.5 * omega_s;
  h(2, 0) = 0.5 * std::conj(omega_s);
  h(1, 2) = 0.5 * omega_c;
  h(2, 1) = 0.5 * std::conj(omega_c);
}

void SystemModel::hamiltonian_at(double t, Matrix& h) const {
  fill_hamiltonian(drive.signal(t), scheme == Scheme::Lambda ? drive.control(t)
                                                             : Complex(0.0),
                   h);
}

HamiltonianFn SystemModel::hamiltonian_fn() const {
  SystemModel copy = *this;
  return [copy](double t, Matrix& h) { copy.hamiltonian_at(t, h); };
}

std::pair<double, Complex> SystemModel::two_level_steady(double delta,
                                                         Complex omega) {
  const double a = std::norm(omega);
  const double denom = 4.0 * delta * delta + 1.0 + 2.0 * a;
  const double pop_e = a / denom;
  const Complex rho_ge = -omega * Complex(2.0 * delta, -1.0) / denom;
  return {pop_e, rho_ge};
}

DensityMatrix SystemModel::initial_state() const {
  const int n = dim();
  switch (init) {
    case InitialState::Ground1:
      return DensityMatrix::ground(n);
    case InitialState::Ground2:
      if (scheme != Scheme::Lambda)
        throw InvalidParameterError("Ground2 preparation needs a Lambda model");
      return DensityMatrix::pure(n, 1);
    case InitialState::MixedGround: {
      if (scheme != Scheme::Lambda)
        throw InvalidParameterError("MixedGround preparation needs a Lambda model");
      Matrix m = Matrix::Zero(3, 3);
      m(0, 0) = 0.5;
      m(1, 1) = 0.5;
      return DensityMatrix(m);
    }
    case InitialState::SignalSteadyState: {
      const auto [pop_e, rho_ge] =
          two_level_steady(drive.delta_s, drive.signal(0.0));
      Matrix m = Matrix::Zero(n, n);
      const int e = excited_index();
      m(0, 0) = 1.0 - pop_e;
      m(e, e) = pop_e;
      m(0, e) = rho_ge;
      m(e, 0) = std::conj(rho_ge);
      return DensityMatrix(m);
    }
  }
  throw InvalidParameterError("unknown initial state");
}

SystemModel SystemModel::with_detunings(double ds, double dc) const {
  SystemModel m = *this;
  m.drive.delta_s = ds;
  m.drive.delta_c = dc;
  return m;
}

}  // namespace eitprop
