#include "bicpair/lattice_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bicpair/constants.hpp"

namespace bicpair {

void LatticeParams::validate() const {
  if (!(a > 0.0) || !(lambda_bic > 0.0)) {
    throw std::invalid_argument("LatticeParams: a and lambda_bic must be positive");
  }
  if (!(lambda_bic > a)) {
    throw std::invalid_argument(
        "LatticeParams: below-diffraction condition requires lambda_bic > a");
  }
  if (!(z > 0.0)) throw std::invalid_argument("LatticeParams: z must be positive");
  if (l_max < 1 || p_max < 1) {
    throw std::invalid_argument("LatticeParams: truncation orders must be >= 1");
  }
}

double evanescent_kz(int l, int p, double k, double a) {
  if (l == 0 && p == 0) {
    throw std::domain_error("evanescent_kz: (0,0) is the propagating order, not evanescent");
  }
  const double g2 = 4.0 * constants::pi * constants::pi *
                    (double(l) * l + double(p) * p) / (a * a);
  const double v = g2 - k * k;
  if (!(v > 0.0)) {
    throw std::domain_error("evanescent_kz: order (" + std::to_string(l) + "," +
                            std::to_string(p) + ") is not evanescent at this k");
  }
  return std::sqrt(v);
}

namespace {

// Single reciprocal-row contribution for the out-of-plane case.
double ed_term(int l, int p, double k, double a, double z) {
  const double kz = evanescent_kz(l, p, k, a);
  const double ratio = kz / k;
  return (1.0 + ratio * ratio) * std::exp(-kz * z) / (a * a * kz);
}

// Single contribution for the in-plane case; carries the l-order coupling
// weight and the offset phase.
double md_term(int l, int p, double k, double a, double z, double x0) {
  const double kz = evanescent_kz(l, p, k, a);
  const double w = 2.0 * constants::pi * double(l) / (a * k);
  return w * std::sin(2.0 * constants::pi * double(l) * x0 / a) *
         std::exp(-kz * z) / (a * a * kz);
}

std::vector<double> ed_raw(const LatticeParams& q, int inner) {
  const double k = 2.0 * constants::pi / q.lambda_bic;
  std::vector<double> g(q.l_max + 1, 0.0);
  for (int p = 1; p <= inner; ++p) g[0] += ed_term(0, p, k, q.a, q.z);
  for (int l = 1; l <= q.l_max; ++l) {
    double s = ed_term(l, 0, k, q.a, q.z);
    for (int p = 1; p <= inner; ++p) s += 2.0 * ed_term(l, p, k, q.a, q.z);
    g[l] = s;
  }
  return g;
}

std::vector<double> md_raw(const LatticeParams& q, int inner) {
  const double k = 2.0 * constants::pi / q.lambda_bic;
  std::vector<double> g(q.l_max + 1, 0.0);
  for (int l = 1; l <= inner; ++l) g[0] += md_term(l, 0, k, q.a, q.z, q.x0);
  for (int p = 1; p <= q.l_max; ++p) {
    double s = 0.0;
    for (int l = 1; l <= inner; ++l) s += md_term(l, p, k, q.a, q.z, q.x0);
    g[p] = 2.0 * s;
  }
  return g;
}

double max_rel_change(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max(std::abs(a[i]), std::abs(b[i]));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

CosineExpansion finish(std::vector<double> coarse, std::vector<double> fine) {
  const double delta = max_rel_change(coarse, fine);
  if (delta > 1e-4) {
    throw std::runtime_error(
        "lattice expansion not converged: doubling the inner sum changed a "
        "coefficient by " +
        std::to_string(delta) + " relative (limit 1e-4); raise p_max");
  }
  CosineExpansion e;
  e.gamma_raw = std::move(fine);
  e.n_terms = int(e.gamma_raw.size());
  e.convergence_delta = delta;
  double sum = 0.0;
  for (double v : e.gamma_raw) sum += v;
  if (sum != 0.0) {
    e.c_n.reserve(e.gamma_raw.size());
    for (double v : e.gamma_raw) e.c_n.push_back(v / sum);
  } else {
    e.c_n.assign(e.gamma_raw.size(), 0.0);  // x0 = 0 in the MD case
  }
  return e;
}

}  // namespace

CosineExpansion ed_cosine_coefficients(const LatticeParams& params) {
  params.validate();
  return finish(ed_raw(params, params.p_max), ed_raw(params, 2 * params.p_max));
}

CosineExpansion md_cosine_coefficients(const LatticeParams& params) {
  params.validate();
  return finish(md_raw(params, params.p_max), md_raw(params, 2 * params.p_max));
}

CosineExpansion normalize(const std::vector<double>& gamma_raw) {
  double sum = 0.0;
  for (double v : gamma_raw) sum += v;
  if (sum == 0.0) {
    throw std::domain_error("normalize: zero-sum coefficient list");
  }
  CosineExpansion e;
  e.gamma_raw = gamma_raw;
  e.n_terms = int(gamma_raw.size());
  e.c_n.reserve(gamma_raw.size());
  for (double v : gamma_raw) e.c_n.push_back(v / sum);
  return e;
}

}  // namespace bicpair
