#pragma once

namespace eitprop::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double epsilon0 = 8.8541878128e-12;  // F/m
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K
inline constexpr double c_light = 299792458.0;        // m/s
inline constexpr double pi = 3.14159265358979323846;

inline constexpr double rb87_mass = 1.443e-25;  // kg

}  // namespace eitprop::constants
