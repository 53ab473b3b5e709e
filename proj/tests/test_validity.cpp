#include <doctest.h>

#include <cmath>

#include "bicpair/constants.hpp"
#include "bicpair/validity.hpp"

using namespace bicpair;

TEST_CASE("Q-factor") {
  CHECK(q_factor(552e-9, 2e-9) == doctest::Approx(276.0).epsilon(1e-12));
  CHECK(q_factor(708.9e-9, 0.05e-9) == doctest::Approx(14178.0).epsilon(1e-12));
  CHECK(q_factor(552e-9, 552e-9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(q_factor(0.0, 1e-9), std::domain_error);
}

TEST_CASE("linewidth rate") {
  // frozen: 2 pi c / (552 nm * 276)
  CHECK(bic_linewidth_rate(552e-9, 276.0) ==
        doctest::Approx(1.236381253484597e13).epsilon(1e-12));
  CHECK(bic_linewidth_rate(552e-9, 552.0) ==
        doctest::Approx(0.5 * bic_linewidth_rate(552e-9, 276.0)).epsilon(1e-14));
  CHECK_THROWS_AS(bic_linewidth_rate(552e-9, 0.0), std::domain_error);
}

TEST_CASE("coupling-constant identity recovers the Purcell factor") {
  // g^2 = Fp gamma0 gamma_bic / 4 inverted
  const double fp = 46.9;
  const double g0 = gamma0(1e-29, 552e-9);
  const double gb = bic_linewidth_rate(552e-9, 276.0);
  const double g2 = fp * g0 * gb / 4.0;
  CHECK(4.0 * g2 / (g0 * gb) == doctest::Approx(fp).epsilon(1e-13));
}

TEST_CASE("maximum dipole moments match the published thresholds within 15%") {
  const double pe = max_dipole_moment(46.9, 552e-9, 276.0);
  const double pm = max_dipole_moment(13.7, 708.9e-9, 14178.0);
  CHECK(std::abs(pe - 90e-29) / 90e-29 < 0.15);
  CHECK(std::abs(pm - 30e-29) / 30e-29 < 0.15);
  // frozen closed-inversion values
  CHECK(pe == doctest::Approx(8.868733599158532e-28).epsilon(1e-12));
  CHECK(pm == doctest::Approx(2.9402259148499334e-28).epsilon(1e-12));
  // and the debye readings land near 270 / 90
  CHECK(pe / constants::debye == doctest::Approx(265.878).epsilon(1e-3));
  CHECK(pm / constants::debye == doctest::Approx(88.1458).epsilon(1e-3));
}

TEST_CASE("threshold scales as 1/sqrt(Fp Q) at fixed wavelength") {
  const double p1 = max_dipole_moment(10.0, 552e-9, 100.0);
  const double p2 = max_dipole_moment(40.0, 552e-9, 100.0);
  const double p3 = max_dipole_moment(10.0, 552e-9, 400.0);
  CHECK(p2 == doctest::Approx(0.5 * p1).epsilon(1e-12));
  CHECK(p3 == doctest::Approx(0.5 * p1).epsilon(1e-12));
}

TEST_CASE("threshold satisfies the simplified equality to 1e-10 relative") {
  const double fp = 46.9, lam = 552e-9, q = 276.0;
  const double pmax = max_dipole_moment(fp, lam, q);
  const double lhs = fp;
  const double rhs = constants::pi * constants::c / (gamma0(pmax, lam) * lam * q);
  CHECK(std::abs(lhs - rhs) / lhs < 1e-10);
}

TEST_CASE("regime report at the published operating point") {
  const CouplingRegimeReport rep = regime_report(1e-29, 46.9, 552e-9, 2e-9);
  CHECK(rep.weak);
  CHECK(rep.weak_simplified);
  CHECK(rep.criteria_agree);
  CHECK(rep.margin > 1.0 / 100.0);
  CHECK(rep.margin < 1.0 / 80.0);
  CHECK(rep.q_factor == doctest::Approx(276.0));

  const CouplingRegimeReport md = regime_report(1e-29, 13.7, 708.9e-9, 0.05e-9);
  CHECK(md.weak);
  CHECK(md.criteria_agree);
}

TEST_CASE("doubling past the threshold flips the regime, single crossing") {
  const double pmax = max_dipole_moment(46.9, 552e-9, 276.0);
  const CouplingRegimeReport strong = regime_report(2.0 * pmax, 46.9, 552e-9, 2e-9);
  CHECK_FALSE(strong.weak);
  CHECK(strong.margin == doctest::Approx(2.0).epsilon(1e-12));

  bool crossed = false;
  bool last_weak = true;
  for (double p = 0.01 * pmax; p < 10.0 * pmax; p *= 1.07) {
    const bool weak = regime_report(p, 46.9, 552e-9, 2e-9).weak;
    if (last_weak && !weak) {
      CHECK_FALSE(crossed);  // only one transition
      crossed = true;
    }
    CHECK(!(weak && !last_weak));  // never returns to weak
    last_weak = weak;
  }
  CHECK(crossed);
}

TEST_CASE("full and simplified criteria agree across both published modes") {
  // the dropped term shifts the crossing by ~1/(4 Fp^2) relative, so the two
  // criteria can only disagree in that sliver right at the threshold
  const double pe = max_dipole_moment(46.9, 552e-9, 276.0);
  const double pm = max_dipole_moment(13.7, 708.9e-9, 14178.0);
  for (double pexp = -30.5; pexp < -26.5; pexp += 0.11) {
    const double p = std::pow(10.0, pexp);
    if (std::abs(p / pe - 1.0) > 0.01) {
      CHECK(regime_report(p, 46.9, 552e-9, 2e-9).criteria_agree);
    }
    if (std::abs(p / pm - 1.0) > 0.01) {
      CHECK(regime_report(p, 13.7, 708.9e-9, 0.05e-9).criteria_agree);
    }
  }
}
