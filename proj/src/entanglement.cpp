#include "bicpair/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bicpair {

namespace {

using cd = std::complex<double>;

cd& at(Matrix4c& m, int i, int j) { return m[4 * i + j]; }
const cd& at(const Matrix4c& m, int i, int j) { return m[4 * i + j]; }

Matrix4c matmul(const Matrix4c& a, const Matrix4c& b) {
  Matrix4c out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const cd aik = at(a, i, k);
      if (aik == cd{}) continue;
      for (int j = 0; j < 4; ++j) out[4 * i + j] += aik * at(b, k, j);
    }
  return out;
}

// Cyclic Jacobi diagonalization of a Hermitian 4x4. Rotations zero the (p,q)
// entry with a complex Givens rotation; eigenvectors are accumulated when a
// basis is requested.
void jacobi_hermitian(Matrix4c a, std::array<double, 4>& eigval, Matrix4c* eigvec) {
  Matrix4c v{};
  for (int i = 0; i < 4; ++i) at(v, i, i) = 1.0;

  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(at(a, i, i)));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) scale = std::max(scale, std::abs(at(a, i, j)));
  if (scale == 0.0) scale = 1.0;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += std::norm(at(a, i, j));
    if (std::sqrt(off) <= 1e-14 * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const cd apq = at(a, p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const cd phase = apq / r;
        const double app = at(a, p, p).real();
        const double aqq = at(a, q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;
        const cd sp = sth * phase;  // rotation entries: R[pp]=c, R[pq]=sp,
                                    // R[qp]=-conj(sp), R[qq]=c

        // columns: A <- A R
        for (int i = 0; i < 4; ++i) {
          const cd aip = at(a, i, p);
          const cd aiq = at(a, i, q);
          at(a, i, p) = cth * aip - std::conj(sp) * aiq;
          at(a, i, q) = sp * aip + cth * aiq;
        }
        // rows: A <- R^dagger A
        for (int j = 0; j < 4; ++j) {
          const cd apj = at(a, p, j);
          const cd aqj = at(a, q, j);
          at(a, p, j) = cth * apj - sp * aqj;
          at(a, q, j) = std::conj(sp) * apj + cth * aqj;
        }
        if (eigvec) {
          for (int i = 0; i < 4; ++i) {
            const cd vip = at(v, i, p);
            const cd viq = at(v, i, q);
            at(v, i, p) = cth * vip - std::conj(sp) * viq;
            at(v, i, q) = sp * vip + cth * viq;
          }
        }
      }
    }
  }

  for (int i = 0; i < 4; ++i) eigval[i] = at(a, i, i).real();
  if (eigvec) *eigvec = v;
  // ascending order, keeping vectors aligned
  for (int i = 0; i < 4; ++i) {
    int m = i;
    for (int j = i + 1; j < 4; ++j)
      if (eigval[j] < eigval[m]) m = j;
    if (m != i) {
      std::swap(eigval[i], eigval[m]);
      if (eigvec)
        for (int rrow = 0; rrow < 4; ++rrow)
          std::swap(at(*eigvec, rrow, i), at(*eigvec, rrow, m));
    }
  }
}

Matrix4c spin_flip(const Matrix4c& rho) {
  // (sy x sy) rho^* (sy x sy) expands to sign-flipped anti-transpose:
  // rho~[i][j] = s_i s_j conj(rho[3-i][3-j]) with s = (+1, -1, -1, +1).
  static constexpr double sgn[4] = {1.0, -1.0, -1.0, 1.0};
  Matrix4c out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      at(out, i, j) = sgn[i] * sgn[j] * std::conj(at(rho, 3 - i, 3 - j));
  return out;
}

void check_physical(const Matrix4c& rho, const std::array<double, 4>& ev) {
  double trace = 0.0;
  for (int i = 0; i < 4; ++i) trace += at(rho, i, i).real();
  if (std::abs(trace - 1.0) > 1e-9) {
    throw std::domain_error("wootters_concurrence: trace deviates from 1 by " +
                            std::to_string(std::abs(trace - 1.0)));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (std::abs(at(rho, i, j) - std::conj(at(rho, j, i))) > 1e-9) {
        throw std::domain_error("wootters_concurrence: matrix is not Hermitian");
      }
    }
  }
  if (ev[0] < -1e-9) {
    throw std::domain_error("wootters_concurrence: not positive semidefinite "
                            "(eigenvalue " + std::to_string(ev[0]) + ")");
  }
}

}  // namespace

Matrix4c to_density_matrix(const DickeState& s) {
  // |eg> = (|s> + |a>)/sqrt2, |ge> = (|s> - |a>)/sqrt2
  Matrix4c rho{};
  at(rho, 0, 0) = s.rho_ee;
  at(rho, 3, 3) = s.rho_gg;
  const double half = 0.5 * (s.rho_ss + s.rho_aa);
  at(rho, 1, 1) = half + s.rho_as.real();
  at(rho, 2, 2) = half - s.rho_as.real();
  const cd off(0.5 * (s.rho_ss - s.rho_aa), s.rho_as.imag());
  at(rho, 1, 2) = off;
  at(rho, 2, 1) = std::conj(off);
  return rho;
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m) {
  std::array<double, 4> ev;
  jacobi_hermitian(m, ev, nullptr);
  return ev;
}

double wootters_concurrence(const Matrix4c& rho) {
  std::array<double, 4> ev;
  Matrix4c v;
  jacobi_hermitian(rho, ev, &v);
  check_physical(rho, ev);

  // sqrt(rho) = V diag(sqrt(l)) V^dagger, with dust clamped
  Matrix4c sq{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cd s{};
      for (int k = 0; k < 4; ++k) {
        const double lk = std::max(ev[k], 0.0);
        s += at(v, i, k) * std::sqrt(lk) * std::conj(at(v, j, k));
      }
      at(sq, i, j) = s;
    }

  // spectrum of rho rho~ equals that of the Hermitian sqrt(rho) rho~ sqrt(rho)
  const Matrix4c m = matmul(matmul(sq, spin_flip(rho)), sq);
  std::array<double, 4> lam;
  jacobi_hermitian(m, lam, nullptr);

  double c = 0.0;
  for (int i = 3; i >= 0; --i) {
    double l = lam[i];
    if (std::abs(l) < 1e-12) l = 0.0;
    l = std::max(l, 0.0);
    c += (i == 3 ? 1.0 : -1.0) * std::sqrt(l);
  }
  return std::max(0.0, std::min(1.0, c));
}

double dicke_concurrence(const DickeState& s) {
  s.validate(1e-9);
  const double pop_diff = s.rho_ss - s.rho_aa;
  const double arg = pop_diff * pop_diff + 4.0 * s.rho_as.imag() * s.rho_as.imag();
  const double cross = 2.0 * std::sqrt(std::max(s.rho_ee, 0.0) * std::max(s.rho_gg, 0.0));
  return std::max(0.0, std::sqrt(arg) - cross);
}

double concurrence_sinh(double t, double d, const BicMode& mode, double gamma0) {
  const double bb = effective_beta(d, mode);
  const double x = mode.purcell * gamma0 * t;
  return std::sinh(bb * x) * std::exp(-x);
}

double concurrence_long_time(double t, double d, const BicMode& mode, double gamma0) {
  const double bb = effective_beta(d, mode);
  return 0.5 * std::exp(-(1.0 - bb) * mode.purcell * gamma0 * t);
}

double t_max_analytic(double beta_bar, double purcell, double gamma0) {
  if (!(beta_bar > 0.0) || !(beta_bar < 1.0)) {
    throw std::domain_error("t_max_analytic: beta_bar must lie in (0,1)");
  }
  // log1p form keeps the beta_bar -> 0 limit 1/(Fp gamma0) exact
  return std::log1p(2.0 * beta_bar / (1.0 - beta_bar)) /
         (2.0 * purcell * gamma0 * beta_bar);
}

double c_max_analytic(double beta_bar) {
  if (!(beta_bar > 0.0) || !(beta_bar < 1.0)) {
    throw std::domain_error("c_max_analytic: beta_bar must lie in (0,1)");
  }
  const double b = beta_bar;
  const double log_ratio = std::log1p(b) - std::log1p(-b);
  return b / std::sqrt(1.0 - b * b) * std::exp(-log_ratio / (2.0 * b));
}

double exact_concurrence_symmetric(double t, const RateSet& r) {
  if (std::abs(r.gamma11 - r.gamma22) > 1e-9 * std::abs(r.gamma11)) {
    throw std::invalid_argument(
        "exact_concurrence_symmetric: rates are asymmetric; integrate instead");
  }
  const double G = 0.5 * (r.gamma11 + r.gamma22);
  const double diff = std::exp(-(G + r.gamma12) * t) - std::exp(-(G - r.gamma12) * t);
  const double s = std::sin(2.0 * r.omega12 * t);
  return 0.5 * std::sqrt(diff * diff + 4.0 * std::exp(-2.0 * G * t) * s * s);
}

ConcurrenceTrace concurrence_trace(
    const std::vector<std::pair<double, DickeState>>& trajectory) {
  if (trajectory.empty()) {
    throw std::invalid_argument("concurrence_trace: empty trajectory");
  }
  ConcurrenceTrace tr;
  tr.times.reserve(trajectory.size());
  tr.concurrence.reserve(trajectory.size());
  size_t imax = 0;
  for (size_t i = 0; i < trajectory.size(); ++i) {
    tr.times.push_back(trajectory[i].first);
    tr.concurrence.push_back(std::min(1.0, dicke_concurrence(trajectory[i].second)));
    if (tr.concurrence[i] > tr.concurrence[imax]) imax = i;
  }
  tr.t_max = tr.times[imax];
  tr.c_max = tr.concurrence[imax];

  if (imax > 0 && imax + 1 < tr.times.size()) {
    // parabola through the three samples around the argmax
    const double t0 = tr.times[imax - 1], t1 = tr.times[imax], t2 = tr.times[imax + 1];
    const double f0 = tr.concurrence[imax - 1], f1 = tr.concurrence[imax],
                 f2 = tr.concurrence[imax + 1];
    const double d1 = (f1 - f0) / (t1 - t0);
    const double d2 = (f2 - f1) / (t2 - t1);
    const double curv = (d2 - d1) / (0.5 * (t2 - t0));
    if (curv < 0.0) {
      // Newton form f(t) = f0 + d1 (t - t0) + curv/2 (t - t0)(t - t1)
      const double tv = 0.5 * (t0 + t1) - d1 / curv;
      if (tv > t0 && tv < t2) {
        tr.t_max = tv;
        tr.c_max = f0 + d1 * (tv - t0) + 0.5 * curv * (tv - t0) * (tv - t1);
      }
    }
  }
  return tr;
}

}  // namespace bicpair
