#pragma once

#include <vector>

namespace bicpair {

/// Geometry and truncation orders for the evanescent lattice sums of a
/// square array of period a. l_max is the harmonic order of the output
/// cosine expansion; p_max truncates the inner sum over reciprocal-lattice
/// rows (convergence is asserted by doubling it, not trusted).
struct LatticeParams {
  double a = 400e-9;           // lattice constant [m]
  double lambda_bic = 552e-9;  // resonance wavelength [m]
  double z = 104e-9;           // source/observation height above lattice plane [m]
  double x0 = 0.164 * 400e-9;  // lateral offset, MD case only [m]
  int l_max = 8;
  int p_max = 64;

  /// Below-diffraction condition lambda_bic > a, z > 0, orders >= 1.
  void validate() const;
};

/// Unnormalized cosine coefficients gamma_j and their normalization
/// c_n = gamma_n / sum(gamma), so sum(c_n) = 1 up to rounding.
struct CosineExpansion {
  std::vector<double> gamma_raw;
  std::vector<double> c_n;
  int n_terms = 0;
  double convergence_delta = 0.0;  // max relative change on doubling the inner sum
};

/// Evanescent normal wavenumber of the (l,p) diffraction order,
/// sqrt(4 pi^2 (l^2+p^2)/a^2 - k^2) [1/m]. Requires (l,p) != (0,0) and a
/// below-diffraction k; the (0,0) order is propagating and rejected.
double evanescent_kz(int l, int p, double k, double a);

/// Out-of-plane (electric-dipole BIC) expansion: constant term from the
/// l = 0 column, gamma_l = t(l,0) + 2 sum_{p>=1} t(l,p) for l >= 1, with
/// t(l,p) = [1 + (kz'/k)^2] exp(-kz' z) / (a^2 kz').
CosineExpansion ed_cosine_coefficients(const LatticeParams& params);

/// In-plane (magnetic-dipole BIC) expansion in the scan coordinate y:
/// gamma_p built from sum_l (2 pi l/(a k)) sin(2 pi l x0/a) exp(-kz' z)/(a^2 kz'),
/// p = 0 row weight 1, p >= 1 weight 2. x0 = 0 collapses the whole expansion.
CosineExpansion md_cosine_coefficients(const LatticeParams& params);

/// c_n = gamma_n / sum(gamma); zero-sum input is a domain error.
CosineExpansion normalize(const std::vector<double>& gamma_raw);

}  // namespace bicpair
