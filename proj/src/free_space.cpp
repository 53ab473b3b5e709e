#include "bicpair/free_space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bicpair/constants.hpp"

namespace bicpair {

double norm(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double contract(const Vec3& a, const Mat3& m, const Vec3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i] * m[i][j] * b[j];
  return s;
}

void EmitterConfig::validate() const {
  const double n = norm(orientation);
  if (std::abs(n - 1.0) > 1e-12) {
    throw std::invalid_argument("EmitterConfig: orientation must be a unit vector");
  }
  if (!(p > 0.0)) throw std::invalid_argument("EmitterConfig: p must be positive");
  if (!(lambda0 > 0.0)) throw std::invalid_argument("EmitterConfig: lambda0 must be positive");
}

std::vector<std::string> RateSet::validate() const {
  if (!(gamma11 > 0.0) || !(gamma22 > 0.0)) {
    throw std::invalid_argument("RateSet: gamma11 and gamma22 must be positive");
  }
  std::vector<std::string> warnings;
  const double bound = std::sqrt(gamma11 * gamma22);
  if (std::abs(gamma12) > bound * (1.0 + 1e-12)) {
    warnings.push_back("RateSet: |gamma12| exceeds sqrt(gamma11*gamma22) by " +
                       std::to_string(std::abs(gamma12) - bound));
  }
  return warnings;
}

namespace {

// The direct form loses ~eps/theta^2 to cancellation, which already exceeds
// 1e-10 at theta = 1e-3; the five-term series is exact to ~1e-17 up to
// theta ~ 0.1, so the switch sits where both branches are accurate.
constexpr double kSeriesThreshold = 1e-2;

// sin(th)/th and cos(th)/th^2 - sin(th)/th^3 to five terms; keeps tau finite
// and fully accurate through the removable singularity.
void tau_scalars_series(double th, double& a, double& b) {
  const double t2 = th * th;
  a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2 * t2 * t2 / 5040.0 +
      t2 * t2 * t2 * t2 / 362880.0;
  b = -1.0 / 3.0 + t2 / 30.0 - t2 * t2 / 840.0 + t2 * t2 * t2 / 45360.0 -
      t2 * t2 * t2 * t2 / 3991680.0;
}

Vec3 unit_or_z(const Vec3& R, double r) {
  if (r == 0.0) return {0.0, 0.0, 1.0};  // tensor is isotropic at contact
  return {R[0] / r, R[1] / r, R[2] / r};
}

}  // namespace

Mat3 tau_tensor(const Vec3& R, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("tau_tensor: lambda must be positive");
  const double r = norm(R);
  const double th = 2.0 * constants::pi * r / lambda;
  const Vec3 u = unit_or_z(R, r);

  double a, b;
  if (th < kSeriesThreshold) {
    tau_scalars_series(th, a, b);
  } else {
    const double s = std::sin(th), c = std::cos(th);
    a = s / th;
    b = c / (th * th) - s / (th * th * th);
  }

  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d = (i == j) ? 1.0 : 0.0;
      m[i][j] = (d - u[i] * u[j]) * a + (d - 3.0 * u[i] * u[j]) * b;
    }
  }
  return m;
}

Mat3 kappa_tensor(const Vec3& R, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("kappa_tensor: lambda must be positive");
  const double r = norm(R);
  if (r == 0.0) {
    throw std::domain_error("kappa_tensor: coincident emitters: dipole-dipole shift diverges");
  }
  const double th = 2.0 * constants::pi * r / lambda;
  const Vec3 u = unit_or_z(R, r);
  const double s = std::sin(th), c = std::cos(th);
  const double a = -c / th;
  const double b = s / (th * th) + c / (th * th * th);

  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d = (i == j) ? 1.0 : 0.0;
      m[i][j] = (d - u[i] * u[j]) * a + (d - 3.0 * u[i] * u[j]) * b;
    }
  }
  return m;
}

RateSet free_space_rates(const EmitterConfig& e1, const EmitterConfig& e2) {
  e1.validate();
  e2.validate();
  if (std::abs(e1.lambda0 - e2.lambda0) > 1e-12 * e1.lambda0) {
    throw std::invalid_argument("free_space_rates: emitters must share lambda0");
  }
  const Vec3 R = sub(e1.position, e2.position);
  if (norm(R) == 0.0) {
    throw std::domain_error("free_space_rates: coincident emitters: omega12 undefined");
  }

  const double g1 = gamma0(e1.p, e1.lambda0);
  const double g2 = gamma0(e2.p, e2.lambda0);
  const double gref = std::sqrt(g1 * g2);  // = gamma0 for equal p

  const Mat3 tau = tau_tensor(R, e1.lambda0);
  const Mat3 kap = kappa_tensor(R, e1.lambda0);

  RateSet r;
  r.gamma11 = g1;
  r.gamma22 = g2;
  r.gamma12 = gref * 1.5 * contract(e1.orientation, tau, e2.orientation);
  r.omega12 = gref * 0.75 * contract(e1.orientation, kap, e2.orientation);
  r.gamma0 = gref;
  return r;
}

double lateral_zz_cdos(double theta) {
  // lateral R means Rz^ = 0, so tau_zz = sin/th + cos/th^2 - sin/th^3
  if (theta < kSeriesThreshold) {
    double a, b;
    tau_scalars_series(theta, a, b);
    return 1.5 * (a + b);
  }
  const double s = std::sin(theta), c = std::cos(theta);
  return 1.5 * (s / theta + c / (theta * theta) - s / (theta * theta * theta));
}

namespace {

// Golden-section maximization on a bracket [lo, hi].
Extremum golden_max(double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = lateral_zz_cdos(x1);
  double f2 = lateral_zz_cdos(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = lateral_zz_cdos(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = lateral_zz_cdos(x1);
    }
  }
  const double th = 0.5 * (a + b);
  return {th, lateral_zz_cdos(th)};
}

}  // namespace

Extremum nth_lateral_cdos_maximum(int n) {
  if (n < 1) throw std::domain_error("nth_lateral_cdos_maximum: n must be >= 1");
  if (n == 1) return {0.0, lateral_zz_cdos(0.0)};  // boundary peak at contact

  // One local maximum per 2 pi period beyond the contact peak; scan for
  // rising-then-falling triples and refine each bracket.
  const double step = 0.01;
  int found = 1;
  double prev = lateral_zz_cdos(step);
  double cur = lateral_zz_cdos(2.0 * step);
  for (double th = 3.0 * step; th < 1e4; th += step) {
    const double next = lateral_zz_cdos(th);
    if (cur >= prev && cur > next) {
      ++found;
      if (found == n) return golden_max(th - 2.0 * step, th);
    }
    prev = cur;
    cur = next;
  }
  throw std::runtime_error("nth_lateral_cdos_maximum: scan limit exceeded");
}

}  // namespace bicpair
