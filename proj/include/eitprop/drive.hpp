#pragma once

#include <complex>
#include <vector>

#include "eitprop/density_matrix.hpp"

namespace eitprop {

/// Piecewise-defined complex field envelope (Gamma-normalized amplitude as a
/// function of Gamma-normalized time).
class Envelope {
 public:
  Envelope() = default;

  static Envelope constant(Complex amplitude);
  static Envelope off();
  /// Zero before t_on, amplitude after.
  static Envelope step(Complex amplitude, double t_on);
  /// Zero before t_on, linear rise over rise_time, amplitude after.
  static Envelope ramp(Complex amplitude, double t_on, double rise_time);

  Complex operator()(double t) const;
  Complex amplitude() const { return amplitude_; }
  bool is_constant() const { return kind_ == Kind::Constant; }

  /// Times where the definition changes; integrators split spans here.
  std::vector<double> breakpoints() const;

 private:
  enum class Kind { Constant, Step, Ramp };
  Kind kind_ = Kind::Constant;
  Complex amplitude_ = 0.0;
  double t_on_ = 0.0;
  double rise_ = 0.0;
};

/// Time-dependent drive for one scenario: signal and control envelopes plus
/// constant detunings, all in units of Gamma.
struct DriveProtocol {
  Envelope signal = Envelope::off();
  Envelope control = Envelope::off();
  double delta_s = 0.0;
  double delta_c = 0.0;

  double two_photon_detuning() const { return delta_s - delta_c; }
};

}  // namespace eitprop
