// Acceptance suite: one check per published target, each printing a single
// PASS/FAIL line (plus sub-results where a target has several parts).
// Usage: bicpair_acceptance [N]   runs criterion N (1..8), or all when absent.
// Exit code = number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bicpair/bessel.hpp"
#include "bicpair/constants.hpp"
#include "bicpair/entanglement.hpp"
#include "bicpair/fitting.hpp"
#include "bicpair/free_space.hpp"
#include "bicpair/lattice_model.hpp"
#include "bicpair/sweep.hpp"
#include "bicpair/validity.hpp"

using namespace bicpair;

namespace {

struct Sub {
  bool pass;
  std::string text;
};

std::vector<Sub> g_subs;

void sub(bool pass, const std::string& text) {
  g_subs.push_back({pass, text});
}

bool within_rel(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1
bool criterion_lattice() {
  LatticeParams ed;
  ed.a = 400e-9;
  ed.lambda_bic = 552.0e-9;
  ed.z = 104e-9;
  const CosineExpansion e = ed_cosine_coefficients(ed);
  const double ed_target[4] = {0.273, 0.516, 0.160, 0.048};
  bool ed_ok = true;
  for (int n = 0; n < 4; ++n) ed_ok &= within_rel(e.c_n[n], ed_target[n], 0.05);
  sub(ed_ok, "out-of-plane c_0..c_3 = (" + num(e.c_n[0]) + ", " +
                 num(e.c_n[1]) + ", " + num(e.c_n[2]) + ", " +
                 num(e.c_n[3]) + ") vs (0.273, 0.516, 0.160, 0.048) @5%");

  LatticeParams md = ed;
  md.lambda_bic = 708.9e-9;
  md.x0 = 0.164 * md.a;
  const CosineExpansion m = md_cosine_coefficients(md);
  const bool md_ok = within_rel(m.c_n[0], 0.642, 0.05) &&
                     within_rel(m.c_n[1], 0.351, 0.05) &&
                     std::abs(m.c_n[2] - 0.005) <= 0.003;
  // Known red: the printed in-plane expansion (0.642, 0.351, 0.005) is not
  // reproducible from the evanescent-order sum itself; the model yields
  // (0.555, 0.368, 0.064). A brute-force projection of the unfolded lattice
  // sum confirms the implementation, so the target is asserted as published
  // and left failing rather than retuned.
  sub(md_ok, "in-plane c_0..c_2 = (" + num(m.c_n[0]) + ", " +
                 num(m.c_n[1]) + ", " + num(m.c_n[2]) +
                 ") vs (0.642 @5%, 0.351 @5%, 0.005 +- 0.003)");
  return ed_ok && md_ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_pipeline() {
  SimulationGrid grid;
  grid.t_end = 2.0;
  grid.n_steps = 8001;

  RateSet md;
  md.gamma11 = 13.7;
  md.gamma22 = 8.8;
  md.gamma12 = 7.9;
  md.omega12 = -0.2;
  md.gamma0 = 1.0;
  const ConcurrenceTrace mtr = concurrence_trace(integrate(excited_ground_state(), md, grid));
  const bool md_ok = std::abs(mtr.c_max - 0.25) <= 0.03 && std::abs(mtr.t_max - 0.10) <= 0.03;
  sub(md_ok, "in-plane rates: c_max = " + num(mtr.c_max) + " (0.25 +- 0.03), t_max = " +
                 num(mtr.t_max) + " (0.10 +- 0.03)");

  grid.t_end = 0.5;
  RateSet ed;
  ed.gamma11 = 46.9;
  ed.gamma22 = 42.4;
  ed.gamma12 = 15.3;
  ed.omega12 = -2.6;
  ed.gamma0 = 1.0;
  const ConcurrenceTrace etr = concurrence_trace(integrate(excited_ground_state(), ed, grid));
  const bool ed_ok = std::abs(etr.c_max - 0.13) <= 0.02 && std::abs(etr.t_max - 0.02) <= 0.01;
  sub(ed_ok, "out-of-plane rates: c_max = " + num(etr.c_max) + " (0.13 +- 0.02), t_max = " +
                 num(etr.t_max) + " (0.02 +- 0.01)");
  return md_ok && ed_ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_analytic_consistency() {
  BicMode m;
  m.a = 400e-9;
  m.lambda_bic = 552e-9;
  m.purcell = 20.0;
  m.k_res = 0.0;
  m.c_n = {1.0};

  bool grid_ok = true;
  double worst = 0.0;
  for (double b = 0.1; b < 0.95; b += 0.1) {
    m.beta = b;
    // golden-section maximization of the sinh form over t
    double lo = 0.0, hi = 5.0 / (m.purcell * b);
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * hi, x2 = invphi * hi;
    auto f = [&](double t) { return concurrence_sinh(t, 0.0, m, 1.0); };
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = f(x1);
      }
    }
    const double peak = f(0.5 * (lo + hi));
    worst = std::max(worst, std::abs(peak - c_max_analytic(b)));
    grid_ok &= std::abs(peak - c_max_analytic(b)) < 1e-10;
  }
  sub(grid_ok, "max_t sinh-form vs closed maximum: worst |diff| = " + num(worst) +
                   " over beta_bar in {0.1..0.9} (limit 1e-10)");

  const double near_unity = c_max_analytic(0.9999);
  const bool limit_ok = std::abs(near_unity - 0.5) < 1e-4;
  // Known red: exactly, 1/2 - C_max(1 - eps) = eps (1 + ln(2/eps))/2 + O(eps^2),
  // which is 2.7e-4 at eps = 1e-4; the 1e-4 window would need eps ~ 3.5e-5.
  // Asserted as stated.
  sub(limit_ok, "C_max(0.9999) = " + num(near_unity) + " vs 0.5 within 1e-4");
  return grid_ok && limit_ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_oracles() {
  RateSet r;
  r.gamma11 = 1.0;
  r.gamma22 = 1.0;
  r.gamma12 = 0.58;
  r.omega12 = -0.31;
  r.gamma0 = 1.0;
  SimulationGrid grid;
  grid.t_end = 10.0;
  grid.n_steps = 1001;
  const auto traj = integrate(excited_ground_state(), r, grid);
  double worst = 0.0;
  for (const auto& [t, s] : traj) {
    const DickeState c = closed_form_evolve(excited_ground_state(), r, t);
    worst = std::max({worst, std::abs(s.rho_ee - c.rho_ee), std::abs(s.rho_ss - c.rho_ss),
                      std::abs(s.rho_aa - c.rho_aa), std::abs(s.rho_gg - c.rho_gg),
                      std::abs(s.rho_as.real() - c.rho_as.real()),
                      std::abs(s.rho_as.imag() - c.rho_as.imag())});
  }
  const bool ode_ok = worst < 1e-8;
  sub(ode_ok, "closed form vs adaptive integration over [0, 10/Gamma]: max |diff| = " +
                  num(worst) + " (limit 1e-8)");

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_c = 0.0;
  for (int k = 0; k < 1000; ++k) {
    double w[4], tot = 0.0;
    for (double& v : w) {
      v = -std::log(std::max(u(rng), 1e-300));
      tot += v;
    }
    DickeState s;
    s.rho_ee = w[0] / tot;
    s.rho_ss = w[1] / tot;
    s.rho_aa = w[2] / tot;
    s.rho_gg = w[3] / tot;
    const double mag = std::sqrt(s.rho_ss * s.rho_aa) * u(rng);
    const double ph = 2.0 * constants::pi * u(rng);
    s.rho_as = {mag * std::cos(ph), mag * std::sin(ph)};
    worst_c = std::max(worst_c,
                       std::abs(dicke_concurrence(s) - wootters_concurrence(to_density_matrix(s))));
  }
  const bool conc_ok = worst_c < 1e-10;
  sub(conc_ok, "sector formula vs spin-flip eigenvalues on 1000 states: max |diff| = " +
                   num(worst_c) + " (limit 1e-10)");
  return ode_ok && conc_ok;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_free_space() {
  const Extremum m4 = nth_lateral_cdos_maximum(4);
  const bool max_ok = std::abs(m4.value - 0.0736) <= 0.0005;
  sub(max_ok, "fourth lateral maximum gamma12/gamma0 = " + num(m4.value) +
                  " (0.0736 +- 0.0005)");

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto unit = [&] {
    Vec3 v;
    double n;
    do {
      v = {u(rng), u(rng), u(rng)};
      n = norm(v);
    } while (n < 1e-3);
    return Vec3{v[0] / n, v[1] / n, v[2] / n};
  };
  bool bound_ok = true;
  for (int k = 0; k < 10000; ++k) {
    EmitterConfig e1, e2;
    e1.orientation = unit();
    e2.orientation = unit();
    e2.position = {u(rng) * 3e-6, u(rng) * 3e-6, u(rng) * 3e-6};
    if (norm(e2.position) < 1e-10) continue;
    const RateSet r = free_space_rates(e1, e2);
    bound_ok &= std::abs(r.gamma12) <= std::sqrt(r.gamma11 * r.gamma22) + 1e-12 * r.gamma0;
  }
  sub(bound_ok, "|gamma12| <= sqrt(gamma11 gamma22) on 10^4 random configurations");
  return max_ok && bound_ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_fits() {
  struct Case {
    double beta, k_res, purcell, d_min_a;
    const char* label;
    std::vector<double> cn;
  };
  const std::vector<Case> cases = {
      {0.4480, 0.581e6, 46.9, 5.0, "finite out-of-plane", {0.273, 0.516, 0.160, 0.048, 0.001}},
      {0.8179, 0.562e6, 13.7, 2.0, "finite in-plane", {0.642, 0.351, 0.005}},
      {0.7518, 0.219e6, 46.9, 5.0, "infinite out-of-plane", {0.273, 0.516, 0.160, 0.048, 0.001}},
      {0.8243, 0.125e6, 13.7, 2.0, "infinite in-plane", {0.642, 0.351, 0.005}},
  };
  bool all = true;
  unsigned seed = 1234;
  for (const auto& c : cases) {
    BicMode m;
    m.a = 400e-9;
    m.lambda_bic = 552e-9;
    m.purcell = c.purcell;
    m.beta = 0.5;
    m.k_res = 0.0;
    m.c_n = c.cn;
    const double d_min = c.d_min_a * m.a;

    SampleSeries clean;
    std::mt19937 rng(seed++);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SampleSeries noisy;
    for (int i = 0; i < 160; ++i) {
      const double d = d_min + (8e-6 - d_min) * i / 159.0;
      const double y = m.purcell * c.beta * bessel_j0(c.k_res * d) * osc_factor(d, m);
      clean.x.push_back(d);
      clean.y.push_back(y);
      noisy.x.push_back(d);
      noisy.y.push_back(y * (1.0 + 0.01 * gauss(rng)));
    }
    const FitResult fc = fit_cdos(clean, m, d_min);
    const FitResult fn = fit_cdos(noisy, m, d_min);
    const bool ok_clean = within_rel(fc.params.at("beta"), c.beta, 1e-6) &&
                          within_rel(fc.params.at("k_res"), c.k_res, 1e-6);
    const bool ok_noisy = within_rel(fn.params.at("beta"), c.beta, 0.02) &&
                          within_rel(fn.params.at("k_res"), c.k_res, 0.02);
    all &= ok_clean && ok_noisy;
    sub(ok_clean && ok_noisy,
        std::string(c.label) + ": clean (beta, k) rel err = (" +
            num(std::abs(fc.params.at("beta") / c.beta - 1.0)) + ", " +
            num(std::abs(fc.params.at("k_res") / c.k_res - 1.0)) +
            ") @1e-6; 1% noise rel err = (" +
            num(std::abs(fn.params.at("beta") / c.beta - 1.0)) + ", " +
            num(std::abs(fn.params.at("k_res") / c.k_res - 1.0)) + ") @2e-2");
  }

  for (const auto& [A, B] : {std::pair{51.80, 16.05}, std::pair{15.47, 16.97}}) {
    SampleSeries s;
    for (int i = 0; i < 80; ++i) {
      const double z = 100e-9 + 1e-9 + 200e-9 * i / 79.0;
      s.x.push_back(z);
      s.y.push_back(1.0 + A * std::exp(-B * (z - 100e-9) / 400e-9));
    }
    const FitResult r = fit_purcell(s, 400e-9, 100e-9);
    const bool ok = within_rel(r.params.at("A"), A, 1e-6) && within_rel(r.params.at("B"), B, 1e-6);
    all &= ok;
    sub(ok, "height profile (A = " + num(A) + ", B = " + num(B) +
                "): recovered to 1e-6");
  }
  return all;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_thresholds() {
  const double pe = max_dipole_moment(46.9, 552e-9, 276.0);
  const double pm = max_dipole_moment(13.7, 708.9e-9, 14178.0);
  const bool ed_ok = within_rel(pe, 90e-29, 0.15);
  const bool md_ok = within_rel(pm, 30e-29, 0.15);
  sub(ed_ok, "out-of-plane p_max = " + num(pe * 1e29) + "e-29 C m (90e-29 +- 15%)");
  sub(md_ok, "in-plane p_max = " + num(pm * 1e29) + "e-29 C m (30e-29 +- 15%)");

  bool agree = true;
  for (double frac : {0.03, 0.3, 0.9, 1.5, 3.0}) {
    agree &= regime_report(frac * pe, 46.9, 552e-9, 2e-9).criteria_agree;
    agree &= regime_report(frac * pm, 13.7, 708.9e-9, 0.05e-9).criteria_agree;
  }
  sub(agree, "full and simplified coupling criteria agree on both parameter sets");
  return ed_ok && md_ok && agree;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_conservation() {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<RateSet> sets;
  for (int i = 0; i < 1000; ++i) {
    RateSet r;
    r.gamma11 = 0.2 + 2.0 * u(rng);
    r.gamma22 = 0.2 + 2.0 * u(rng);
    r.gamma12 = (2.0 * u(rng) - 1.0) * std::sqrt(r.gamma11 * r.gamma22);
    r.omega12 = 4.0 * (u(rng) - 0.5);
    r.gamma0 = 1.0;
    sets.push_back(r);
  }
  SimulationGrid grid;
  grid.t_end = 1.0;  // scaled per set below to 20/Gamma
  grid.n_steps = 201;

  double worst_trace = 0.0, worst_pop = 0.0;
  bool conc_in_range = true;
  for (const auto& r : sets) {
    SimulationGrid g = grid;
    g.t_end = 20.0 / (0.5 * (r.gamma11 + r.gamma22));
    const auto traj = integrate(excited_ground_state(), r, g);
    for (const auto& [t, s] : traj) {
      worst_trace = std::max(worst_trace, std::abs(s.trace() - 1.0));
      worst_pop = std::min({worst_pop, s.rho_ee, s.rho_ss, s.rho_aa, s.rho_gg});
      const double c = dicke_concurrence(s);
      conc_in_range &= (c >= 0.0 && c <= 1.0);
    }
  }
  const bool trace_ok = worst_trace < 1e-9;
  const bool pop_ok = worst_pop > -1e-9;
  sub(trace_ok, "trace error max = " + num(worst_trace) + " (limit 1e-9) on 1000 sets");
  sub(pop_ok, "population min = " + num(worst_pop) + " (limit -1e-9)");
  sub(conc_in_range, "concurrence within [0,1] along every trajectory");
  return trace_ok && pop_ok && conc_in_range;
}

struct Criterion {
  const char* name;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"lattice cosine coefficients", criterion_lattice},
      {"concurrence pipeline vs published maxima", criterion_pipeline},
      {"analytic extremum self-consistency", criterion_analytic_consistency},
      {"integration and concurrence cross-oracles", criterion_oracles},
      {"free-space baseline", criterion_free_space},
      {"fit parameter recovery", criterion_fits},
      {"strong-coupling thresholds", criterion_thresholds},
      {"conservation and positivity", criterion_conservation},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && int(i) + 1 != only) continue;
    g_subs.clear();
    bool ok = false;
    std::string error;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("[%s] criterion %zu: %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, error.empty() ? "" : " -- exception: ",
                error.c_str());
    for (const auto& s : g_subs) {
      std::printf("        [%s] %s\n", s.pass ? "ok" : "FAIL", s.text.c_str());
    }
    if (!ok) ++failures;
  }
  return failures;
}
