#include "bicpair/bic_cdos.hpp"

#include <cmath>
#include <stdexcept>

#include "bicpair/bessel.hpp"
#include "bicpair/constants.hpp"

namespace bicpair {

std::vector<std::string> BicMode::validate() const {
  if (beta < 0.0 || beta > 1.0) {
    throw std::invalid_argument("BicMode: beta must lie in [0,1]");
  }
  if (!(purcell >= 1.0)) {
    throw std::invalid_argument("BicMode: purcell must be >= 1");
  }
  if (k_res < 0.0) throw std::invalid_argument("BicMode: k_res must be >= 0");
  if (!(lambda_bic > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("BicMode: lambda_bic and a must be positive");
  }
  if (c_n.empty()) throw std::invalid_argument("BicMode: c_n must be non-empty");

  std::vector<std::string> warnings;
  const double s = c_sum();
  if (std::abs(s - 1.0) > 1e-6) {
    warnings.push_back("BicMode: sum(c_n) = " + std::to_string(s) +
                       " deviates from 1; coefficients kept as supplied");
  }
  return warnings;
}

double BicMode::c_sum() const {
  double s = 0.0;
  for (double c : c_n) s += c;
  return s;
}

double osc_factor(double d, const BicMode& mode, bool renormalize_osc) {
  double s = 0.0;
  for (size_t n = 0; n < mode.c_n.size(); ++n) {
    s += mode.c_n[n] * std::cos(2.0 * constants::pi * double(n) * d / mode.a);
  }
  if (renormalize_osc) {
    const double total = mode.c_sum();
    if (total == 0.0) throw std::domain_error("osc_factor: cannot renormalize zero-sum c_n");
    s /= total;
  }
  return s;
}

double cdos(double d, const BicMode& mode, double gamma11, bool renormalize_osc) {
  return gamma11 * effective_beta(d, mode, renormalize_osc);
}

double effective_beta(double d, const BicMode& mode, bool renormalize_osc) {
  return mode.beta * bessel_j0(mode.k_res * std::abs(d)) *
         osc_factor(d, mode, renormalize_osc);
}

}  // namespace bicpair
