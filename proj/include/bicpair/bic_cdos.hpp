#pragma once

#include <string>
#include <vector>

namespace bicpair {

/// Single-mode description of a BIC resonance: everything needed to evaluate
/// the collective decay rate Gamma12(d) = Gamma11 * beta * J0(k_res |d|) *
/// sum_n c_n cos(2 pi n d / a) and the effective beta-factor derived from it.
struct BicMode {
  double lambda_bic = 552e-9;  // resonance wavelength [m]
  double a = 400e-9;           // lattice constant [m]
  double purcell = 1.0;        // peak LDOS enhancement Gamma11/Gamma0
  double beta = 0.0;           // emission fraction into the mode, in [0,1]
  double k_res = 0.0;          // in-plane resonance wavenumber [rad/m]
  std::vector<double> c_n;     // normalized cosine coefficients, stored verbatim
  double q_factor = 0.0;
  double fwhm = 0.0;           // [m]

  // Published coefficient tables round to sum(c_n) slightly off 1 (the
  // out-of-plane list sums to 0.998); that is a warning, never a rejection,
  // and nothing is renormalized silently.
  std::vector<std::string> validate() const;

  double c_sum() const;
};

/// Oscillatory factor osc(d) = sum_n c_n cos(2 pi n d / a). When
/// renormalize_osc is set the sum is divided by sum(c_n); off by default.
double osc_factor(double d, const BicMode& mode, bool renormalize_osc = false);

/// Collective decay rate Gamma12(d) [1/s] given the single-emitter rate
/// gamma11 [1/s]. At d = 0 this is gamma11 * beta * sum(c_n).
double cdos(double d, const BicMode& mode, double gamma11,
            bool renormalize_osc = false);

/// Distance-dependent effective beta-factor beta * osc(d) * env(d); may be
/// negative where the oscillation dips below zero.
double effective_beta(double d, const BicMode& mode, bool renormalize_osc = false);

}  // namespace bicpair
