#include "bicpair/fitting.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "bicpair/bessel.hpp"
#include "bicpair/constants.hpp"

namespace bicpair {

void SampleSeries::validate(size_t min_points) const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("SampleSeries: x and y lengths differ");
  }
  if (x.size() < min_points) {
    throw std::invalid_argument("SampleSeries: too few points (" +
                                std::to_string(x.size()) + " < " +
                                std::to_string(min_points) + ")");
  }
  for (size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw std::invalid_argument("SampleSeries: abscissae not strictly increasing at index " +
                                  std::to_string(i));
    }
  }
}

namespace {

using Params = std::array<double, 2>;
using Model = std::function<double(double, const Params&)>;

struct Box {
  Params lo, hi;
  Params clamp(Params p) const {
    for (int i = 0; i < 2; ++i) p[i] = std::min(hi[i], std::max(lo[i], p[i]));
    return p;
  }
};

double ssr(const Model& f, const std::vector<double>& x, const std::vector<double>& y,
           const Params& p) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double r = f(x[i], p) - y[i];
    s += r * r;
  }
  return s;
}

// Damped Gauss-Newton (Levenberg-Marquardt) with central-difference
// Jacobians. Uniform absolute weighting. Steps are accepted only when the
// residual decreases, so the accepted-SSR history is non-increasing.
FitResult levenberg(const Model& f, const std::vector<double>& x,
                    const std::vector<double>& y, Params p, const Box& box,
                    const std::array<std::string, 2>& names) {
  const size_t n = x.size();
  FitResult out;
  out.n_points = int(n);

  double lambda = 1e-3;
  double cur = ssr(f, x, y, p);
  out.ssr_history.push_back(cur);

  double y_scale = 1e-30;
  for (double v : y) y_scale = std::max(y_scale, std::abs(v));
  const double grad_tol = 1e-12 * y_scale * y_scale * double(n);
  const double ssr_floor = 1e-28 * y_scale * y_scale * double(n);

  bool stationary = false;
  std::array<double, 3> jtj{0.0, 0.0, 0.0};  // a00, a11, a01
  for (int iter = 0; iter < 200 && !stationary; ++iter) {
    // numerical Jacobian, h = 1e-6 * parameter scale
    std::vector<std::array<double, 2>> J(n);
    std::vector<double> r(n);
    for (int k = 0; k < 2; ++k) {
      const double h = 1e-6 * std::max(std::abs(p[k]), (box.hi[k] - box.lo[k]) * 1e-3);
      Params pp = p, pm = p;
      pp[k] += h;
      pm[k] -= h;
      for (size_t i = 0; i < n; ++i) {
        J[i][k] = (f(x[i], pp) - f(x[i], pm)) / (2.0 * h);
      }
    }
    double a00 = 0, a01 = 0, a11 = 0, g0 = 0, g1 = 0;
    for (size_t i = 0; i < n; ++i) {
      r[i] = f(x[i], p) - y[i];
      a00 += J[i][0] * J[i][0];
      a01 += J[i][0] * J[i][1];
      a11 += J[i][1] * J[i][1];
      g0 += J[i][0] * r[i];
      g1 += J[i][1] * r[i];
    }
    jtj = {a00, a11, a01};
    const double grad_norm = std::max(std::abs(g0), std::abs(g1));
    if (grad_norm < grad_tol || cur < ssr_floor) {
      stationary = true;
      break;
    }

    bool accepted = false;
    for (int tries = 0; tries < 24 && !accepted; ++tries) {
      const double d00 = a00 + lambda * std::max(a00, 1e-30);
      const double d11 = a11 + lambda * std::max(a11, 1e-30);
      const double det = d00 * d11 - a01 * a01;
      if (det <= 0.0) {
        lambda *= 10.0;
        continue;
      }
      const Params trial = box.clamp({p[0] - (d11 * g0 - a01 * g1) / det,
                                      p[1] - (d00 * g1 - a01 * g0) / det});
      const double trial_ssr = ssr(f, x, y, trial);
      if (trial_ssr < cur) {
        const double rel_step =
            std::max(std::abs(trial[0] - p[0]) / std::max(std::abs(p[0]), 1e-30),
                     std::abs(trial[1] - p[1]) / std::max(std::abs(p[1]), 1e-30));
        p = trial;
        cur = trial_ssr;
        out.ssr_history.push_back(cur);
        lambda = std::max(lambda * 0.1, 1e-14);
        accepted = true;
        if (rel_step < 1e-13) stationary = true;  // machine-level step
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) stationary = true;  // no downhill step at any damping
  }

  out.params[names[0]] = p[0];
  out.params[names[1]] = p[1];
  out.residual_rms = std::sqrt(cur / double(n));
  out.converged = stationary;
  if (!stationary) out.message = "iteration limit reached; best-so-far returned";
  // covariance diag from the inverted Gauss-Newton normal matrix, diagnostic only
  const double dof = std::max(1.0, double(n) - 2.0);
  const double s2 = cur / dof;
  const double det = jtj[0] * jtj[1] - jtj[2] * jtj[2];
  if (det > 0.0) {
    out.covariance_diag[names[0]] = s2 * jtj[1] / det;
    out.covariance_diag[names[1]] = s2 * jtj[0] / det;
  }
  return out;
}

}  // namespace

FitResult fit_cdos(const SampleSeries& data, const BicMode& mode_template,
                   double d_min) {
  data.validate(3);
  std::vector<double> xs, ys;
  for (size_t i = 0; i < data.x.size(); ++i) {
    if (data.x[i] >= d_min) {
      xs.push_back(data.x[i]);
      ys.push_back(data.y[i] / mode_template.purcell);  // gamma12/gamma11
    }
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("fit_cdos: fewer than 3 points at d >= d_min");
  }

  const BicMode& m = mode_template;
  const Model model = [&m](double d, const Params& p) {
    return p[0] * bessel_j0(p[1] * std::abs(d)) * osc_factor(d, m);
  };
  const double k_hi = 0.1 * 2.0 * constants::pi / m.a;
  const Box box{{0.0, 0.0}, {1.0, k_hi}};

  // coarse 50x50 seed over the box; evaluations are independent
  const int ng = 50;
  std::vector<double> grid_ssr(ng * ng);
#ifdef BICPAIR_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int idx = 0; idx < ng * ng; ++idx) {
    const int ib = idx / ng, ik = idx % ng;
    const Params p{(ib + 0.5) / ng, (ik + 0.5) / ng * k_hi};
    grid_ssr[idx] = ssr(model, xs, ys, p);
  }
  int best = 0;
  for (int idx = 1; idx < ng * ng; ++idx) {
    if (grid_ssr[idx] < grid_ssr[best]) best = idx;
  }
  const Params seed{(best / ng + 0.5) / ng, (best % ng + 0.5) / ng * k_hi};

  FitResult r = levenberg(model, xs, ys, seed, box, {"beta", "k_res"});
  if (r.params["beta"] <= 0.0) {
    r.converged = false;
    r.message = "beta collapsed to the box edge; data carry no mode signal";
  }
  return r;
}

FitResult fit_purcell(const SampleSeries& data, double a, double r_sphere) {
  data.validate(3);
  for (double z : data.x) {
    if (!(z > r_sphere)) {
      throw std::invalid_argument("fit_purcell: samples must satisfy z > r_sphere");
    }
  }

  const Model model = [a, r_sphere](double z, const Params& p) {
    return 1.0 + p[0] * std::exp(-p[1] * (z - r_sphere) / a);
  };

  // seed A from the first sample, B from the log-slope across the range
  const double h0 = (data.x.front() - r_sphere) / a;
  const double h1 = (data.x.back() - r_sphere) / a;
  const double y0 = data.y.front() - 1.0;
  const double y1 = data.y.back() - 1.0;
  double b0 = 10.0;
  if (y0 > 0.0 && y1 > 0.0 && h1 > h0) b0 = std::log(y0 / y1) / (h1 - h0);
  b0 = std::min(std::max(b0, 0.1), 1e3);
  const double a0 = std::max(y0, 1e-6) * std::exp(b0 * h0);
  const Box box{{0.0, 0.0}, {1e9, 1e6}};

  FitResult r = levenberg(model, data.x, data.y, box.clamp({a0, b0}), box,
                          {"A", "B"});
  if (r.params["A"] < 1e-9) {
    r.converged = false;
    r.message = "amplitude indistinguishable from zero; B is unidentifiable";
  }
  return r;
}

}  // namespace bicpair
