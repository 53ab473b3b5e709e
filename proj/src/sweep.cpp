#include "bicpair/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "bicpair/entanglement.hpp"

namespace bicpair {

std::vector<double> linspace(double d_min, double d_max, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  if (!(d_max > d_min)) throw std::invalid_argument("linspace: d_max must exceed d_min");
  std::vector<double> out(n);
  const double dd = (d_max - d_min) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = d_min + i * dd;
  return out;
}

namespace {

SweepPoint eval_point(double d, const BicMode& mode, double gamma0) {
  SweepPoint pt;
  pt.d = d;
  pt.beta_bar = effective_beta(d, mode);
  if (pt.beta_bar > 0.0 && pt.beta_bar < 1.0) {
    pt.c_max = c_max_analytic(pt.beta_bar);
    pt.t_max = t_max_analytic(pt.beta_bar, mode.purcell, gamma0);
  } else {
    pt.c_max = 0.0;
    pt.t_max = 0.0;
    pt.clamped = true;
  }
  return pt;
}

TrajectorySummary summarize(const std::vector<std::pair<double, DickeState>>& traj) {
  TrajectorySummary s;
  s.min_population = 1.0;
  const ConcurrenceTrace tr = concurrence_trace(traj);
  s.t_max = tr.t_max;
  s.c_max = tr.c_max;
  s.final_concurrence = tr.concurrence.back();
  for (const auto& [t, st] : traj) {
    (void)t;
    for (double p : {st.rho_ee, st.rho_ss, st.rho_aa, st.rho_gg}) {
      s.min_population = std::min(s.min_population, p);
    }
    s.max_trace_error = std::max(s.max_trace_error, std::abs(st.trace() - 1.0));
  }
  return s;
}

}  // namespace

std::vector<SweepPoint> sweep_cmax_serial(const std::vector<double>& d_grid,
                                          const BicMode& mode, double gamma0) {
  std::vector<SweepPoint> out(d_grid.size());
  for (size_t i = 0; i < d_grid.size(); ++i) out[i] = eval_point(d_grid[i], mode, gamma0);
  return out;
}

std::vector<SweepPoint> sweep_cmax_parallel(const std::vector<double>& d_grid,
                                            const BicMode& mode, double gamma0) {
  std::vector<SweepPoint> out(d_grid.size());
#ifdef BICPAIR_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < long(d_grid.size()); ++i) {
    out[i] = eval_point(d_grid[i], mode, gamma0);
  }
  return out;
}

TrajectorySummary simulate_summary(const RateSet& rates, const DickeState& s0,
                                   const SimulationGrid& grid) {
  return summarize(integrate(s0, rates, grid));
}

std::vector<TrajectorySummary> batch_summaries_serial(
    const std::vector<RateSet>& sets, const DickeState& s0,
    const SimulationGrid& grid) {
  std::vector<TrajectorySummary> out(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) out[i] = simulate_summary(sets[i], s0, grid);
  return out;
}

std::vector<TrajectorySummary> batch_summaries_parallel(
    const std::vector<RateSet>& sets, const DickeState& s0,
    const SimulationGrid& grid) {
  std::vector<TrajectorySummary> out(sets.size());
#ifdef BICPAIR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < long(sets.size()); ++i) {
    out[i] = simulate_summary(sets[i], s0, grid);
  }
  return out;
}

}  // namespace bicpair
