#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "bicpair/free_space.hpp"

namespace bicpair {

/// Two-emitter density matrix restricted to the Dicke sector: populations of
/// |ee>, symmetric |s>, antisymmetric |a>, |gg> plus the single-excitation
/// coherence rho_as. rho_sa is its conjugate and never stored.
struct DickeState {
  double rho_ee = 0.0;
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  double rho_gg = 1.0;
  std::complex<double> rho_as{0.0, 0.0};

  double trace() const { return rho_ee + rho_ss + rho_aa + rho_gg; }

  /// Trace 1 and populations in [-tol, 1+tol], |rho_as|^2 <= rho_ss rho_aa + tol.
  void validate(double tol = 1e-9) const;
};

/// |e1 g2>: rho_ss = rho_aa = Re(rho_as) = 1/2.
DickeState excited_ground_state();

enum class Method { closed_form, rk4, rk45_adaptive };

struct SimulationGrid {
  double t_end = 1.0;
  int n_steps = 1001;
  Method method = Method::rk45_adaptive;
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;

  void validate() const;
};

/// Right-hand side of the six coupled master-equation components in the
/// Dicke basis, including the (gamma11 - gamma22)/4 population-coherence
/// coupling and the 2*omega12 phase rotation of rho_as. The trace derivative
/// vanishes identically.
DickeState dicke_derivative(const DickeState& s, const RateSet& r);

/// Closed-form state at time t for symmetric rates (gamma11 = gamma22):
/// exponentials in Gamma +- Gamma12 with phase e^{2 i omega12 t} on the
/// coherence; rho_gg by trace closure. Asymmetric rates are a precondition
/// error directing the caller to integrate().
DickeState closed_form_evolve(const DickeState& s0, const RateSet& r, double t);

/// Trajectory on the uniform grid t_i = i * t_end / (n_steps - 1).
/// rk45_adaptive is an embedded Dormand-Prince 5(4) pair stepping exactly
/// onto grid times; rk4 is fixed-step and kept for deterministic regression.
std::vector<std::pair<double, DickeState>> integrate(const DickeState& s0,
                                                     const RateSet& r,
                                                     const SimulationGrid& grid);

}  // namespace bicpair
