#pragma once

#include <vector>

#include "bicpair/bic_cdos.hpp"
#include "bicpair/dynamics.hpp"

namespace bicpair {

/// One point of a separation sweep: effective beta-factor and the analytic
/// entanglement maximum. Points with beta_bar outside (0,1) carry c_max = 0
/// and clamped = true (the closed-form maximum is undefined there).
struct SweepPoint {
  double d = 0.0;
  double beta_bar = 0.0;
  double c_max = 0.0;
  double t_max = 0.0;
  bool clamped = false;
};

/// Summary statistics of one Dicke trajectory: concurrence extremum plus the
/// conservation diagnostics the randomized suites assert on.
struct TrajectorySummary {
  double t_max = 0.0;
  double c_max = 0.0;
  double min_population = 0.0;
  double max_trace_error = 0.0;
  double final_concurrence = 0.0;
};

/// Uniform grid [d_min, d_max] with n points.
std::vector<double> linspace(double d_min, double d_max, int n);

// The sweep kernels are embarrassingly parallel maps; the serial versions
// are the reference implementations, the parallel ones distribute the same
// per-point evaluation with OpenMP and must agree bitwise.
std::vector<SweepPoint> sweep_cmax_serial(const std::vector<double>& d_grid,
                                          const BicMode& mode, double gamma0);
std::vector<SweepPoint> sweep_cmax_parallel(const std::vector<double>& d_grid,
                                            const BicMode& mode, double gamma0);

TrajectorySummary simulate_summary(const RateSet& rates, const DickeState& s0,
                                   const SimulationGrid& grid);

std::vector<TrajectorySummary> batch_summaries_serial(
    const std::vector<RateSet>& sets, const DickeState& s0,
    const SimulationGrid& grid);
std::vector<TrajectorySummary> batch_summaries_parallel(
    const std::vector<RateSet>& sets, const DickeState& s0,
    const SimulationGrid& grid);

}  // namespace bicpair
