#pragma once

#include <map>
#include <string>
#include <vector>

#include "bicpair/bic_cdos.hpp"

namespace bicpair {

/// Tabulated line cut: abscissae in meters (strictly increasing), ordinates
/// dimensionless (rates in gamma0 units).
struct SampleSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;

  void validate(size_t min_points) const;
};

struct FitResult {
  std::map<std::string, double> params;
  std::map<std::string, double> covariance_diag;
  double residual_rms = 0.0;
  int n_points = 0;
  bool converged = false;
  std::string message;
  std::vector<double> ssr_history;  // accepted iterations only, non-increasing
};

/// Reads a two-column series from CSV ("x,y" rows, '#' comments, optional
/// header) or from the JSON series schema {"label","unit","x":[],"y":[]}.
/// A unit declaration (nm, um, µm, m) in a "# unit = ..." comment, a header
/// suffix like "d_um", or the JSON field converts abscissae to meters.
/// Malformed rows and non-increasing abscissae report the offending line.
SampleSeries load_series(const std::string& path);

/// Least-squares extraction of (beta, k_res) from a CDOS line cut against
/// beta * J0(k_res d) * osc(d), using the template's c_n and lattice constant
/// and its Purcell factor to convert gamma12/gamma0 data to gamma12/gamma11.
/// Data below d_min is excluded. Box constraints: beta in [0,1], k_res in
/// [0, 0.1 * 2 pi / a]. A 50x50 grid seed precedes the damped Gauss-Newton
/// refinement; the J0 envelope makes the landscape multimodal and local
/// refinement alone falls into side basins.
FitResult fit_cdos(const SampleSeries& data, const BicMode& mode_template,
                   double d_min);

/// Exponential Purcell-profile fit 1 + A exp(-B (z - r_sphere)/a) over
/// samples with z > r_sphere; A, B constrained positive. Flat data leaves B
/// unidentifiable and is reported with converged = false.
FitResult fit_purcell(const SampleSeries& data, double a, double r_sphere);

}  // namespace bicpair
