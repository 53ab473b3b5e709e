#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "bicpair/bic_cdos.hpp"
#include "bicpair/dynamics.hpp"

namespace bicpair {

using Matrix4c = std::array<std::complex<double>, 16>;  // row-major 4x4

/// Density matrix in the computational basis {|ee>, |eg>, |ge>, |gg>} built
/// from a Dicke-sector state. The Dicke -> computational map is fixed by the
/// Pauli-Z-basis conjugation convention of the spin flip.
Matrix4c to_density_matrix(const DickeState& s);

/// Eigenvalues of a Hermitian 4x4 matrix by cyclic Jacobi rotations, driven
/// to off-diagonal norm 1e-14. Ascending order. Exposed for tests.
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m);

/// Wootters concurrence C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)),
/// l_i the decreasing eigenvalues of rho * (sy x sy) rho^* (sy x sy).
/// The non-Hermitian product is diagonalized through its Hermitian similarity
/// sqrt(rho) rho~ sqrt(rho); eigenvalue dust below 1e-12 is clamped to zero.
/// Input must be Hermitian, trace one and positive semidefinite within 1e-9.
double wootters_concurrence(const Matrix4c& rho);

/// Closed-form concurrence on the Dicke sector:
///   C = max(0, sqrt((rho_ss - rho_aa)^2 + 4 Im(rho_as)^2)
///              - 2 sqrt(rho_ee rho_gg)).
/// The subtraction vanishes when |ee> is unpopulated, recovering the
/// single-excitation form; states outside the sector are a domain error.
double dicke_concurrence(const DickeState& s);

/// sinh approximation C(t,d) = sinh(beta_bar Fp gamma0 t) e^{-Fp gamma0 t};
/// may exceed the exact numerics and is deliberately not clamped to them.
double concurrence_sinh(double t, double d, const BicMode& mode, double gamma0);

/// Long-time tail C(t,d) = 1/2 e^{-(1 - beta_bar) Fp gamma0 t}, the population
/// of the antisymmetric state. Crossover near t ~ 1/(beta_bar Fp gamma0).
double concurrence_long_time(double t, double d, const BicMode& mode, double gamma0);

/// t_max = ln((1+b)/(1-b)) / (2 Fp gamma0 b) for b in (0,1); tends to
/// 1/(Fp gamma0) as b -> 0+.
double t_max_analytic(double beta_bar, double purcell, double gamma0);

/// C_max = b/sqrt(1-b^2) ((1+b)/(1-b))^(-1/(2b)) for b in (0,1); increasing,
/// with limit 1/2 at b -> 1-.
double c_max_analytic(double beta_bar);

/// Exact concurrence for symmetric rates from |e1 g2>:
///   C(t) = 1/2 sqrt((e^{-(G+G12)t} - e^{-(G-G12)t})^2
///                   + 4 e^{-2Gt} sin^2(2 W12 t)).
double exact_concurrence_symmetric(double t, const RateSet& r);

struct ConcurrenceTrace {
  std::vector<double> times;
  std::vector<double> concurrence;
  double t_max = 0.0;
  double c_max = 0.0;
};

/// Concurrence along a trajectory; (t_max, c_max) from the discrete argmax
/// refined by three-point parabolic interpolation.
ConcurrenceTrace concurrence_trace(
    const std::vector<std::pair<double, DickeState>>& trajectory);

}  // namespace bicpair
