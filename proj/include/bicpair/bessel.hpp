#pragma once

namespace bicpair {

/// Bessel function of the first kind, order zero. Ascending power series for
/// |x| < 12, Hankel asymptotic expansion beyond, summed to its smallest term.
/// Absolute error below 1e-10 for |x| <= 1e3 (a few 1e-12 at the crossover,
/// tighter elsewhere).
double bessel_j0(double x);

}  // namespace bicpair
