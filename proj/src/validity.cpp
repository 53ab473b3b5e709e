#include "bicpair/validity.hpp"

#include <cmath>
#include <stdexcept>

#include "bicpair/constants.hpp"

namespace bicpair {

double q_factor(double lambda_bic, double fwhm) {
  if (!(lambda_bic > 0.0) || !(fwhm > 0.0)) {
    throw std::domain_error("q_factor: inputs must be positive");
  }
  return lambda_bic / fwhm;
}

double bic_linewidth_rate(double lambda_bic, double q) {
  if (!(lambda_bic > 0.0) || !(q > 0.0)) {
    throw std::domain_error("bic_linewidth_rate: inputs must be positive");
  }
  return 2.0 * constants::pi * constants::c / (lambda_bic * q);
}

double max_dipole_moment(double purcell, double lambda_bic, double q) {
  if (!(purcell > 0.0) || !(lambda_bic > 0.0) || !(q > 0.0)) {
    throw std::domain_error("max_dipole_moment: inputs must be positive");
  }
  // F_p = pi c / (gamma0 lambda Q) at threshold; substituting
  // gamma0 = w0^3 p^2 / (3 pi eps0 hbar c^3) and solving for p^2:
  //   p^2 = 3 pi^2 eps0 hbar c^4 / (F_p w0^3 lambda Q)
  const double w0 = 2.0 * constants::pi * constants::c / lambda_bic;
  const double num = 3.0 * constants::pi * constants::pi * constants::eps0 *
                     constants::hbar * constants::c * constants::c *
                     constants::c * constants::c;
  return std::sqrt(num / (purcell * w0 * w0 * w0 * lambda_bic * q));
}

CouplingRegimeReport regime_report(double p, double purcell, double lambda_bic,
                                   double fwhm) {
  if (!(p > 0.0)) throw std::domain_error("regime_report: p must be positive");

  CouplingRegimeReport rep;
  rep.q_factor = q_factor(lambda_bic, fwhm);
  rep.gamma_bic = bic_linewidth_rate(lambda_bic, rep.q_factor);
  rep.p_max = max_dipole_moment(purcell, lambda_bic, rep.q_factor);
  rep.p_max_debye = rep.p_max / constants::debye;
  rep.margin = p / rep.p_max;

  const double g0 = gamma0(p, lambda_bic);
  const double g2x4 = purcell * g0 * rep.gamma_bic;  // 4 g^2
  const bool strong_full = g2x4 > 0.5 * (g0 * g0 + rep.gamma_bic * rep.gamma_bic);
  const bool strong_simplified = g2x4 > 0.5 * rep.gamma_bic * rep.gamma_bic;
  rep.weak = !strong_full;
  rep.weak_simplified = !strong_simplified;
  rep.criteria_agree = (rep.weak == rep.weak_simplified);
  return rep;
}

}  // namespace bicpair
