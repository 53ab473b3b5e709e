#include <doctest.h>

#include <cmath>

#include "bicpair/constants.hpp"
#include "bicpair/lattice_model.hpp"

using namespace bicpair;

namespace {

LatticeParams ed_params() {
  LatticeParams q;
  q.a = 400e-9;
  q.lambda_bic = 552.0e-9;
  q.z = 104e-9;
  return q;
}

LatticeParams md_params() {
  LatticeParams q;
  q.a = 400e-9;
  q.lambda_bic = 708.9e-9;
  q.z = 104e-9;
  q.x0 = 0.164 * 400e-9;
  return q;
}

}  // namespace

TEST_CASE("evanescent_kz basics") {
  CHECK(evanescent_kz(1, 0, 0.0, 400e-9) ==
        doctest::Approx(2.0 * constants::pi / 400e-9).epsilon(1e-15));
  // frozen arithmetic: sqrt((2pi/400nm)^2 - (2pi/552nm)^2)
  CHECK(evanescent_kz(1, 0, 2.0 * constants::pi / 552e-9, 400e-9) ==
        doctest::Approx(10824829.5718561).epsilon(1e-12));
  const double k = 2.0 * constants::pi / 552e-9;
  CHECK(evanescent_kz(2, 0, k, 400e-9) > evanescent_kz(1, 0, k, 400e-9));
  CHECK(evanescent_kz(1, 1, k, 400e-9) > evanescent_kz(1, 0, k, 400e-9));
  CHECK_THROWS_AS(evanescent_kz(0, 0, k, 400e-9), std::domain_error);
  // above-diffraction k is rejected for the lowest order
  CHECK_THROWS_AS(evanescent_kz(1, 0, 2.0 * constants::pi / 300e-9, 400e-9),
                  std::domain_error);
}

TEST_CASE("out-of-plane expansion: raw ratios frozen against the brute-force fold") {
  // Reference values from an independent projection of the unfolded
  // (l,p) in Z^2 sum onto the cosine basis, computed before the build.
  const CosineExpansion e = ed_cosine_coefficients(ed_params());
  REQUIRE(e.n_terms >= 5);
  CHECK(e.gamma_raw[0] / e.gamma_raw[1] == doctest::Approx(0.53808097).epsilon(1e-6));
  CHECK(e.gamma_raw[2] / e.gamma_raw[1] == doctest::Approx(0.31024122).epsilon(1e-6));
  CHECK(e.gamma_raw[3] / e.gamma_raw[1] == doctest::Approx(0.09363302).epsilon(1e-6));
  CHECK(e.gamma_raw[4] / e.gamma_raw[1] == doctest::Approx(0.02584958).epsilon(1e-6));
}

TEST_CASE("out-of-plane expansion: published ratios within 5%") {
  const CosineExpansion e = ed_cosine_coefficients(ed_params());
  CHECK(e.gamma_raw[1] / e.gamma_raw[0] == doctest::Approx(1.0 / 0.53).epsilon(0.05));
  CHECK(e.gamma_raw[2] / e.gamma_raw[1] == doctest::Approx(0.31).epsilon(0.05));
  CHECK(e.gamma_raw[3] / e.gamma_raw[1] == doctest::Approx(0.0936).epsilon(0.05));
  // NOTE: the published table prints 0.00258 for the fourth harmonic ratio,
  // exactly 10x below what the model itself yields (0.025850, confirmed by
  // an independent brute-force projection); asserting the model value.

  CHECK(e.c_n[0] == doctest::Approx(0.273).epsilon(0.05));
  CHECK(e.c_n[1] == doctest::Approx(0.516).epsilon(0.05));
  CHECK(e.c_n[2] == doctest::Approx(0.160).epsilon(0.05));
  CHECK(e.c_n[3] == doctest::Approx(0.048).epsilon(0.05));
}

TEST_CASE("in-plane expansion: raw ratios frozen against the brute-force fold") {
  const CosineExpansion e = md_cosine_coefficients(md_params());
  REQUIRE(e.n_terms >= 4);
  CHECK(e.gamma_raw[1] / e.gamma_raw[0] == doctest::Approx(0.66347644).epsilon(1e-6));
  CHECK(e.gamma_raw[2] / e.gamma_raw[0] == doctest::Approx(0.11606308).epsilon(1e-6));
  CHECK(e.gamma_raw[3] / e.gamma_raw[0] == doctest::Approx(0.01921132).epsilon(1e-6));
}

TEST_CASE("in-plane expansion collapses at zero offset") {
  LatticeParams q = md_params();
  q.x0 = 0.0;
  const CosineExpansion e = md_cosine_coefficients(q);
  for (double g : e.gamma_raw) CHECK(g == 0.0);
  for (double c : e.c_n) CHECK(c == 0.0);
}

TEST_CASE("expansion coefficients decay with harmonic order") {
  const CosineExpansion ed = ed_cosine_coefficients(ed_params());
  for (int n = 2; n < ed.n_terms; ++n) {
    CHECK(std::abs(ed.gamma_raw[n]) < std::abs(ed.gamma_raw[n - 1]));
  }
  CHECK(ed.gamma_raw[1] > ed.gamma_raw[0]);  // dominant first harmonic
  for (double g : ed.gamma_raw) CHECK(g > 0.0);

  const CosineExpansion md = md_cosine_coefficients(md_params());
  for (int n = 1; n < md.n_terms; ++n) {
    CHECK(std::abs(md.gamma_raw[n]) < std::abs(md.gamma_raw[n - 1]));
  }
}

TEST_CASE("large height suppresses every harmonic against the constant term") {
  LatticeParams q = ed_params();
  q.z = 2e-6;
  const CosineExpansion e = ed_cosine_coefficients(q);
  for (int n = 2; n < e.n_terms; ++n) {
    CHECK(std::abs(e.gamma_raw[n]) < 1e-4 * std::abs(e.gamma_raw[1]));
  }
}

TEST_CASE("truncation is converged at the default orders") {
  const CosineExpansion e = ed_cosine_coefficients(ed_params());
  CHECK(e.convergence_delta < 1e-8);
  const CosineExpansion m = md_cosine_coefficients(md_params());
  CHECK(m.convergence_delta < 1e-8);

  // raw coefficients are untouched by a deeper inner sum; the normalized
  // values shift only through the ~1e-5-relative weight of harmonics 9, 10
  LatticeParams q = ed_params();
  q.p_max = 128;
  const CosineExpansion same = ed_cosine_coefficients(q);
  for (int n = 0; n <= 8; ++n) {
    CHECK(same.gamma_raw[n] == doctest::Approx(e.gamma_raw[n]).epsilon(1e-10));
  }
  q.l_max = 10;
  const CosineExpansion wider = ed_cosine_coefficients(q);
  for (int n = 0; n <= 8; ++n) {
    CHECK(wider.c_n[n] == doctest::Approx(e.c_n[n]).epsilon(1e-4));
  }
}

TEST_CASE("normalize") {
  const CosineExpansion e = normalize({2.0, 2.0});
  CHECK(e.c_n[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e.c_n[1] == doctest::Approx(0.5).epsilon(1e-15));

  const CosineExpansion s = normalize({3.0, -1.0});
  CHECK(s.c_n[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.c_n[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(s.c_n[0] + s.c_n[1] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(normalize({1.0, -1.0}), std::domain_error);
}

TEST_CASE("normalized coefficients are scale invariant") {
  const CosineExpansion e = ed_cosine_coefficients(ed_params());
  std::vector<double> scaled = e.gamma_raw;
  for (double& v : scaled) v *= 77.3;
  const CosineExpansion n = normalize(scaled);
  for (int i = 0; i < e.n_terms; ++i) {
    CHECK(n.c_n[i] == doctest::Approx(e.c_n[i]).epsilon(1e-14));
  }
  double sum = 0.0;
  for (double c : n.c_n) sum += c;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("non-convergent truncation is reported, not returned") {
  // a source sitting almost on the lattice plane needs hundreds of orders;
  // a shallow inner sum must refuse rather than hand back garbage
  LatticeParams q = ed_params();
  q.z = 1e-9;
  q.p_max = 4;
  CHECK_THROWS_WITH_AS(ed_cosine_coefficients(q), doctest::Contains("not converged"),
                       std::runtime_error);
}

TEST_CASE("parameter validation") {
  LatticeParams q = ed_params();
  q.lambda_bic = 300e-9;  // above diffraction
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = ed_params();
  q.z = 0.0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = ed_params();
  q.l_max = 0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}
