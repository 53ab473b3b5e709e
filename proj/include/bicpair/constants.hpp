#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bicpair {

/// Fundamental constants, SI units, CODATA 2018. Fixed at compile time and
/// never user-configurable: every rate in this library is reproducible from
/// geometry and dipole data alone.
namespace constants {

inline constexpr double pi = std::numbers::pi;

/// Speed of light in vacuum [m/s] (exact).
inline constexpr double c = 299792458.0;

/// Reduced Planck constant [J s].
inline constexpr double hbar = 1.054571817e-34;

/// Vacuum permittivity [F/m].
inline constexpr double eps0 = 8.8541878128e-12;

/// One debye in C m.
inline constexpr double debye = 3.33564e-30;

}  // namespace constants

/// Free-space spontaneous decay rate of a point dipole,
/// gamma0 = w0^3 p^2 / (3 pi eps0 hbar c^3) with w0 = 2 pi c / lambda0.
///
/// p in C m, lambda0 in m, result in 1/s. Throws std::domain_error on
/// non-positive input.
inline double gamma0(double p, double lambda0) {
  if (!(p > 0.0) || !(lambda0 > 0.0)) {
    throw std::domain_error("gamma0: dipole moment and wavelength must be positive");
  }
  const double w0 = 2.0 * constants::pi * constants::c / lambda0;
  return w0 * w0 * w0 * p * p /
         (3.0 * constants::pi * constants::eps0 * constants::hbar *
          constants::c * constants::c * constants::c);
}

}  // namespace bicpair
