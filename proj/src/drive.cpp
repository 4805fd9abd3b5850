#include "eitprop/drive.hpp"

#include <cmath>

#include "eitprop/errors.hpp"

namespace eitprop {

Envelope Envelope::constant(Complex amplitude) {
  Envelope e;
  e.kind_ = Kind::Constant;
  e.amplitude_ = amplitude;
  return e;
}

Envelope Envelope::off() { return constant(0.0); }

Envelope Envelope::step(Complex amplitude, double t_on) {
  Envelope e;
  e.kind_ = Kind::Step;
  e.amplitude_ = amplitude;
  e.t_on_ = t_on;
  return e;
}

Envelope Envelope::ramp(Complex amplitude, double t_on, double rise_time) {
  if (!(rise_time > 0.0))
    throw InvalidParameterError("ramp rise time must be > 0");
  Envelope e;
  e.kind_ = Kind::Ramp;
  e.amplitude_ = amplitude;
  e.t_on_ = t_on;
  e.rise_ = rise_time;
  return e;
}

Complex Envelope::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return amplitude_;
    case Kind::Step:
      return t >= t_on_ ? amplitude_ : Complex(0.0);
    case Kind::Ramp:
      if (t < t_on_) return 0.0;
      if (t >= t_on_ + rise_) return amplitude_;
      return amplitude_ * ((t - t_on_) / rise_);
  }
  return 0.0;
}

std::vector<double> Envelope::breakpoints() const {
  switch (kind_) {
    case Kind::Constant:
      return {};
    case Kind::Step:
      return {t_on_};
    case Kind::Ramp:
      return {t_on_, t_on_ + rise_};
  }
  return {};
}

}  // namespace eitprop
