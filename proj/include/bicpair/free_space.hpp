#pragma once

#include <array>
#include <string>
#include <vector>

namespace bicpair {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

double norm(const Vec3& v);
Vec3 sub(const Vec3& a, const Vec3& b);
double contract(const Vec3& a, const Mat3& m, const Vec3& b);

/// One two-level emitter: position [m], unit dipole orientation,
/// dipole magnitude [C m], transition wavelength [m].
struct EmitterConfig {
  Vec3 position{0.0, 0.0, 0.0};
  Vec3 orientation{0.0, 0.0, 1.0};
  double p = 1e-29;
  double lambda0 = 552.0e-9;

  /// Throws std::invalid_argument unless |orientation| = 1 within 1e-12,
  /// p > 0 and lambda0 > 0.
  void validate() const;
};

/// The four master-equation coefficients plus the free-space reference rate,
/// all in 1/s.
struct RateSet {
  double gamma11 = 0.0;
  double gamma22 = 0.0;
  double gamma12 = 0.0;
  double omega12 = 0.0;
  double gamma0 = 0.0;

  /// Hard errors for non-positive gamma11/gamma22; the Cauchy-Schwarz bound
  /// |gamma12| <= sqrt(gamma11 gamma22) yields a warning string instead of a
  /// rejection, since externally tabulated sets may violate it marginally.
  std::vector<std::string> validate() const;
};

/// Imaginary-part tensor of the free-space dyadic Green function,
///   tau_ij = (d_ij - Ri Rj) sin(th)/th + (d_ij - 3 Ri Rj)[cos(th)/th^2 - sin(th)/th^3],
/// th = 2 pi |R| / lambda. The th -> 0 singularity is removable; below
/// th = 1e-3 a five-term series is used and tau(0) = (2/3) d_ij.
Mat3 tau_tensor(const Vec3& R, double lambda);

/// Real-part tensor,
///   kappa_ij = -(d_ij - Ri Rj) cos(th)/th + (d_ij - 3 Ri Rj)[sin(th)/th^2 + cos(th)/th^3].
/// Diverges as th^-3 at contact: |R| = 0 throws std::domain_error.
Mat3 kappa_tensor(const Vec3& R, double lambda);

/// Free-space rates for an emitter pair sharing lambda0:
///   gamma11 = gamma0(p1), gamma22 = gamma0(p2),
///   gamma12 = (3/2) sqrt(gamma11 gamma22) p1^ . tau . p2^,
///   omega12 = (3/4) sqrt(gamma11 gamma22) p1^ . kappa . p2^.
/// The prefactors make gamma12 -> gamma0 for parallel dipoles at zero
/// separation. Coincident positions are an error (omega12 undefined).
RateSet free_space_rates(const EmitterConfig& e1, const EmitterConfig& e2);

/// gamma12/gamma0 for parallel z-dipoles separated laterally, as a function
/// of th = 2 pi d / lambda: (3/2) tau_zz(th).
double lateral_zz_cdos(double theta);

struct Extremum {
  double theta = 0.0;  // dimensionless 2 pi d / lambda
  double value = 0.0;  // gamma12/gamma0 at the extremum
};

/// n-th local maximum of gamma12(d)/gamma0 for lateral z-dipoles, counting
/// the d -> 0 peak (value 1) as n = 1. Bracketed scan plus golden-section
/// refinement to 1e-10 in theta.
Extremum nth_lateral_cdos_maximum(int n);

}  // namespace bicpair
