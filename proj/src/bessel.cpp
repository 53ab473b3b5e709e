#include "bicpair/bessel.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace bicpair {

namespace {

double j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= q / (double(m) * m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion: J0(x) = sqrt(2/(pi x)) Re[ e^{i(x - pi/4)} sum_k a_k (i/x)^k ]
// with a_0 = 1, a_k = a_{k-1} (-(2k-1)^2) / (8k). The series is divergent;
// summation stops at the smallest term.
double j0_asymptotic(double x) {
  const std::complex<double> iz(0.0, 1.0 / x);
  std::complex<double> term(1.0, 0.0);
  std::complex<double> sum(1.0, 0.0);
  double prev_mag = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double c = -double(2 * k - 1) * double(2 * k - 1) / (8.0 * k);
    term *= c * iz;
    const double mag = std::abs(term);
    if (mag >= prev_mag) break;  // asymptotic tail started growing
    sum += term;
    prev_mag = mag;
    if (mag < 1e-18) break;
  }
  const double w = x - 0.25 * std::numbers::pi;
  const std::complex<double> phase(std::cos(w), std::sin(w));
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (phase * sum).real();
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);  // even function
  if (x < 12.0) return j0_series(x);
  return j0_asymptotic(x);
}

}  // namespace bicpair
