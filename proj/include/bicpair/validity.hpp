#pragma once

namespace bicpair {

/// Weak/strong-coupling assessment for a dipole of magnitude p coupled to a
/// BIC of given Purcell factor, wavelength and linewidth. Both the full
/// criterion 4 g^2 > (gamma0^2 + gamma_bic^2)/2 and its simplified form
/// (first right-hand term dropped) are evaluated so the usual "negligible"
/// claim is checkable rather than assumed.
struct CouplingRegimeReport {
  double q_factor = 0.0;
  double gamma_bic = 0.0;   // 1/s
  double p_max = 0.0;       // C m, simplified threshold
  double p_max_debye = 0.0;
  double margin = 0.0;      // p / p_max
  bool weak = false;        // from the full inequality
  bool weak_simplified = false;
  bool criteria_agree = false;
};

/// Q = lambda_bic / fwhm.
double q_factor(double lambda_bic, double fwhm);

/// BIC linewidth as a rate: gamma_bic = 2 pi c / (lambda_bic Q).
double bic_linewidth_rate(double lambda_bic, double q);

/// Largest dipole moment for which the weak-coupling treatment holds.
/// Inverting the simplified threshold F_p = pi c / (gamma0(p) lambda Q)
/// with gamma0(p) = w0^3 p^2 / (3 pi eps0 hbar c^3), w0 = 2 pi c / lambda:
///   p_max^2 = 3 pi^2 eps0 hbar c^4 / (F_p w0^3 lambda Q).
double max_dipole_moment(double purcell, double lambda_bic, double q);

CouplingRegimeReport regime_report(double p, double purcell, double lambda_bic,
                                   double fwhm);

}  // namespace bicpair
