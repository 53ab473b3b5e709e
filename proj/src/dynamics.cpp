#include "bicpair/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bicpair {

void DickeState::validate(double tol) const {
  if (std::abs(trace() - 1.0) > tol) {
    throw std::domain_error("DickeState: trace deviates from 1 by " +
                            std::to_string(std::abs(trace() - 1.0)));
  }
  for (double p : {rho_ee, rho_ss, rho_aa, rho_gg}) {
    if (p < -tol || p > 1.0 + tol) {
      throw std::domain_error("DickeState: population outside [0,1]");
    }
  }
  if (std::norm(rho_as) > rho_ss * rho_aa + tol) {
    throw std::domain_error("DickeState: |rho_as|^2 exceeds rho_ss*rho_aa");
  }
}

DickeState excited_ground_state() {
  DickeState s;
  s.rho_ee = 0.0;
  s.rho_ss = 0.5;
  s.rho_aa = 0.5;
  s.rho_gg = 0.0;
  s.rho_as = {0.5, 0.0};
  return s;
}

void SimulationGrid::validate() const {
  if (!(t_end > 0.0)) throw std::invalid_argument("SimulationGrid: t_end must be positive");
  if (n_steps < 2) throw std::invalid_argument("SimulationGrid: n_steps must be >= 2");
}

DickeState dicke_derivative(const DickeState& s, const RateSet& r) {
  const double G = 0.5 * (r.gamma11 + r.gamma22);
  const double Gp = G + r.gamma12;
  const double Gm = G - r.gamma12;
  const double q = 0.25 * (r.gamma11 - r.gamma22);
  const double re = s.rho_as.real();
  const double im = s.rho_as.imag();

  DickeState d;
  d.rho_ee = -2.0 * G * s.rho_ee;
  d.rho_ss = -Gp * s.rho_ss - q * 2.0 * re + Gp * s.rho_ee;
  d.rho_aa = -Gm * s.rho_aa - q * 2.0 * re + Gm * s.rho_ee;
  // trace closure: the four population derivatives sum to zero
  d.rho_gg = Gp * s.rho_ss + Gm * s.rho_aa + 4.0 * q * re;
  d.rho_as = {-G * re - 2.0 * r.omega12 * im - q * (s.rho_ss + s.rho_aa + 2.0 * s.rho_ee),
              -G * im + 2.0 * r.omega12 * re};
  return d;
}

namespace {

// (1 - e^{-x t}) / x, stable through x -> 0 where it tends to t.
double decay_quotient(double x, double t) {
  if (x == 0.0) return t;
  return -std::expm1(-x * t) / x;
}

void require_symmetric(const RateSet& r, const char* who) {
  if (std::abs(r.gamma11 - r.gamma22) > 1e-9 * std::abs(r.gamma11)) {
    throw std::invalid_argument(std::string(who) +
                                ": rates are asymmetric (gamma11 != gamma22); "
                                "use integrate() instead");
  }
}

}  // namespace

DickeState closed_form_evolve(const DickeState& s0, const RateSet& r, double t) {
  require_symmetric(r, "closed_form_evolve");
  const double G = 0.5 * (r.gamma11 + r.gamma22);
  const double Gp = G + r.gamma12;
  const double Gm = G - r.gamma12;

  const double eee = std::exp(-2.0 * G * t);
  const double ep = std::exp(-Gp * t);
  const double em = std::exp(-Gm * t);

  DickeState s;
  s.rho_ee = s0.rho_ee * eee;
  // rho_ss(t) = rho_ss0 e^{-Gp t} + (Gp/Gm) rho_ee0 (e^{-Gp t} - e^{-2G t});
  // the difference is written via decay_quotient so the Gm -> 0 (and Gp -> 0)
  // subradiant limits stay finite.
  s.rho_ss = s0.rho_ss * ep + Gp * s0.rho_ee * ep * decay_quotient(Gm, t);
  s.rho_aa = s0.rho_aa * em + Gm * s0.rho_ee * em * decay_quotient(Gp, t);
  const std::complex<double> rot(std::cos(2.0 * r.omega12 * t),
                                 std::sin(2.0 * r.omega12 * t));
  s.rho_as = s0.rho_as * std::exp(-G * t) * rot;
  s.rho_gg = 1.0 - s.rho_ee - s.rho_ss - s.rho_aa;
  return s;
}

namespace {

using State6 = std::array<double, 6>;

State6 pack(const DickeState& s) {
  return {s.rho_ee, s.rho_ss, s.rho_aa, s.rho_gg, s.rho_as.real(), s.rho_as.imag()};
}

DickeState unpack(const State6& y) {
  DickeState s;
  s.rho_ee = y[0];
  s.rho_ss = y[1];
  s.rho_aa = y[2];
  s.rho_gg = y[3];
  s.rho_as = {y[4], y[5]};
  return s;
}

State6 rhs(const State6& y, const RateSet& r) {
  return pack(dicke_derivative(unpack(y), r));
}

State6 axpy(const State6& y, double h, const State6& k) {
  State6 out;
  for (int i = 0; i < 6; ++i) out[i] = y[i] + h * k[i];
  return out;
}

State6 rk4_step(const State6& y, double h, const RateSet& r) {
  const State6 k1 = rhs(y, r);
  const State6 k2 = rhs(axpy(y, 0.5 * h, k1), r);
  const State6 k3 = rhs(axpy(y, 0.5 * h, k2), r);
  const State6 k4 = rhs(axpy(y, h, k3), r);
  State6 out;
  for (int i = 0; i < 6; ++i) {
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// Dormand-Prince 5(4) coefficients.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                 kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

struct Dormand {
  const RateSet& r;
  double rel_tol, abs_tol;
  State6 k1{};  // FSAL slot
  bool have_k1 = false;

  // One embedded attempt; fills y5 and the scaled error norm.
  void attempt(const State6& y, double h, State6& y5, double& err) {
    if (!have_k1) {
      k1 = rhs(y, r);
      have_k1 = true;
    }
    const State6 k2 = rhs(axpy(y, h * kA21, k1), r);
    State6 tmp;
    for (int i = 0; i < 6; ++i) tmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    const State6 k3 = rhs(tmp, r);
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    const State6 k4 = rhs(tmp, r);
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    const State6 k5 = rhs(tmp, r);
    for (int i = 0; i < 6; ++i)
      tmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] +
                           kA64 * k4[i] + kA65 * k5[i]);
    const State6 k6 = rhs(tmp, r);
    for (int i = 0; i < 6; ++i)
      y5[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] +
                          kB6 * k6[i]);
    const State6 k7 = rhs(y5, r);

    err = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                            kE6 * k6[i] + kE7 * k7[i]);
      const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 6.0);
    k1_next = k7;
  }

  void advance() {
    k1 = k1_next;  // FSAL
    have_k1 = true;
  }

  State6 k1_next{};
};

}  // namespace

std::vector<std::pair<double, DickeState>> integrate(const DickeState& s0,
                                                     const RateSet& r,
                                                     const SimulationGrid& grid) {
  grid.validate();
  s0.validate(1e-6);

  std::vector<std::pair<double, DickeState>> out;
  out.reserve(grid.n_steps);
  const double dt = grid.t_end / (grid.n_steps - 1);

  if (grid.method == Method::closed_form) {
    for (int i = 0; i < grid.n_steps; ++i) {
      const double t = i * dt;
      out.emplace_back(t, closed_form_evolve(s0, r, t));
    }
    return out;
  }

  State6 y = pack(s0);
  out.emplace_back(0.0, s0);

  if (grid.method == Method::rk4) {
    const double gmax = std::max({std::abs(r.gamma11), std::abs(r.gamma22),
                                  std::abs(r.gamma12), std::abs(r.omega12), 1e-300});
    const int nsub = std::max(1, int(std::ceil(dt * gmax * 4.0)));
    const double h = dt / nsub;
    for (int i = 1; i < grid.n_steps; ++i) {
      for (int s = 0; s < nsub; ++s) y = rk4_step(y, h, r);
      out.emplace_back(i * dt, unpack(y));
    }
    return out;
  }

  // rk45_adaptive
  Dormand stepper{r, grid.rel_tol, grid.abs_tol};
  double t = 0.0;
  double h = dt;  // safe initial guess; controller shrinks it immediately if not
  const double h_min = 1e-15 * std::max(grid.t_end, 1.0);
  for (int i = 1; i < grid.n_steps; ++i) {
    const double t_target = i * dt;
    while (t < t_target) {
      const bool clipped = (t + h >= t_target);
      const double h_try = clipped ? (t_target - t) : h;
      State6 y5;
      double err;
      stepper.attempt(y, h_try, y5, err);
      if (err <= 1.0) {
        y = y5;
        t = clipped ? t_target : t + h_try;
        stepper.advance();
        const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        if (!clipped) h = h_try * std::min(5.0, std::max(0.2, grow));
      } else {
        stepper.have_k1 = true;  // k1 still valid at unchanged (t, y)
        h = h_try * std::max(0.2, 0.9 * std::pow(err, -0.2));
        if (h < h_min) {
          throw std::runtime_error("integrate: step size underflow at t = " +
                                   std::to_string(t));
        }
      }
    }
    out.emplace_back(t_target, unpack(y));
  }
  return out;
}

}  // namespace bicpair
