#include "bicpair/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bicpair/cli/output.hpp"
#include "bicpair/cli/run_config.hpp"
#include "bicpair/entanglement.hpp"
#include "bicpair/errors.hpp"
#include "bicpair/fitting.hpp"
#include "bicpair/sweep.hpp"
#include "bicpair/validity.hpp"

namespace bicpair::cli {

namespace {

namespace fs = std::filesystem;

std::string out_path(const Options& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  return (fs::path(opt.out_dir) / name).string();
}

ConfigFile load(const Options& opt) {
  if (opt.config_path.empty()) throw config_error("config: --config PATH is required");
  if (!fs::exists(opt.config_path)) {
    throw io_error("config file not found: " + opt.config_path);
  }
  return ConfigFile::parse_file(opt.config_path);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int cmd_rates(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const auto meta = meta_lines("rates", opt.seed, cfg);

  if (cfg.has("rates", "gamma11")) {
    // ingestion round-trip of a tabulated rate set
    const RateSet r = read_rates(cfg);
    print_warnings(r.validate());
    if (opt.format == "json") {
      auto j = meta_json("rates", opt.seed, cfg);
      j["rates"] = {{"gamma11", r.gamma11}, {"gamma22", r.gamma22},
                    {"gamma12", r.gamma12}, {"omega12", r.omega12},
                    {"gamma0", r.gamma0}};
      write_json(out_path(opt, "rates.json"), j);
    } else {
      write_csv(out_path(opt, "rates.csv"), meta,
                {"gamma11", "gamma22", "gamma12", "omega12", "gamma0"},
                {{r.gamma11, r.gamma22, r.gamma12, r.omega12, r.gamma0}});
    }
    return 0;
  }

  const EmitterPair em = read_emitters(cfg);
  const ScanGrid scan = read_scan(cfg);
  std::vector<std::vector<double>> rows;
  rows.reserve(scan.n);
  for (double d : linspace(scan.d_min, scan.d_max, scan.n)) {
    EmitterConfig e2 = em.e2;
    e2.position = {em.e1.position[0] + d, em.e1.position[1], em.e1.position[2]};
    const RateSet r = free_space_rates(em.e1, e2);
    rows.push_back({d, r.gamma12 / r.gamma0, r.omega12 / r.gamma0});
  }
  write_csv(out_path(opt, "rates.csv"), meta,
            {"d_m", "gamma12_over_gamma0", "omega12_over_gamma0"}, rows);
  return 0;
}

int cmd_lattice_coeffs(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const LatticeParams params = read_lattice(cfg);
  const std::string variant = read_lattice_variant(cfg);
  const CosineExpansion e = (variant == "ed") ? ed_cosine_coefficients(params)
                                              : md_cosine_coefficients(params);

  auto meta = meta_lines("lattice-coeffs", opt.seed, cfg);
  meta.push_back("convergence_delta = " + fmt(e.convergence_delta));

  if (opt.format == "json") {
    auto j = meta_json("lattice-coeffs", opt.seed, cfg);
    j["variant"] = variant;
    j["gamma_raw"] = e.gamma_raw;
    j["c_n"] = e.c_n;
    j["convergence_delta"] = e.convergence_delta;
    write_json(out_path(opt, "lattice_coeffs.json"), j);
  } else {
    std::vector<std::vector<double>> rows;
    for (int n = 0; n < e.n_terms; ++n) {
      rows.push_back({double(n), e.gamma_raw[n], e.c_n[n]});
    }
    write_csv(out_path(opt, "lattice_coeffs.csv"), meta, {"n", "gamma_raw", "c_n"}, rows);
  }
  return 0;
}

int cmd_cdos_model(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const BicMode mode = read_mode(cfg);
  print_warnings(mode.validate());
  const ScanGrid scan = read_scan(cfg);
  const double d_valid = cfg.get_double_or("mode", "d_valid_min_a", 0.0) * mode.a;
  const double noise_rel = cfg.get_double_or("scan", "noise_rel", 0.0);

  std::mt19937 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::vector<double>> rows;
  for (double d : linspace(scan.d_min, scan.d_max, scan.n)) {
    const double bb = effective_beta(d, mode);
    double g12 = mode.purcell * bb;  // gamma12 / gamma0
    if (noise_rel > 0.0) g12 *= 1.0 + noise_rel * gauss(rng);
    rows.push_back({d, g12, bb, d < d_valid ? 1.0 : 0.0});
  }
  write_csv(out_path(opt, "cdos_model.csv"), meta_lines("cdos-model", opt.seed, cfg),
            {"d_m", "gamma12_over_gamma0", "beta_bar", "below_validity"}, rows);
  return 0;
}

int cmd_simulate(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const RateSet rates = read_rates(cfg);
  print_warnings(rates.validate());
  const SimulationGrid grid = read_grid(cfg);
  const DickeState s0 = read_initial_state(cfg);

  const auto traj = integrate(s0, rates, grid);
  const ConcurrenceTrace tr = concurrence_trace(traj);

  const auto meta = meta_lines("simulate", opt.seed, cfg);
  {
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.size());
    for (const auto& [t, s] : traj) {
      rows.push_back({t, s.rho_ee, s.rho_ss, s.rho_aa, s.rho_gg,
                      s.rho_as.real(), s.rho_as.imag()});
    }
    write_csv(out_path(opt, "trajectory.csv"), meta,
              {"t", "rho_ee", "rho_ss", "rho_aa", "rho_gg", "re_rho_as", "im_rho_as"},
              rows);
  }
  {
    std::vector<std::vector<double>> rows;
    rows.reserve(tr.times.size());
    for (size_t i = 0; i < tr.times.size(); ++i) {
      rows.push_back({tr.times[i], tr.concurrence[i]});
    }
    write_csv(out_path(opt, "concurrence.csv"), meta, {"t", "concurrence"}, rows);
  }

  auto j = meta_json("simulate", opt.seed, cfg);
  j["t_max"] = tr.t_max;
  j["c_max"] = tr.c_max;
  if (cfg.has("mode", "beta")) {
    const BicMode mode = read_mode(cfg);
    j["purcell"] = mode.purcell;
    if (cfg.has("scan", "d_um")) {
      j["beta_bar"] = effective_beta(cfg.get_double("scan", "d_um") * 1e-6, mode);
    }
  }
  write_json(out_path(opt, "summary.json"), j);
  return 0;
}

int cmd_sweep(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const BicMode mode = read_mode(cfg);
  print_warnings(mode.validate());
  const ScanGrid scan = read_scan(cfg);

  // gamma0 only scales t_max here; sweeps are reported in gamma0-units
  const auto points = sweep_cmax_parallel(linspace(scan.d_min, scan.d_max, scan.n),
                                          mode, 1.0);

  // optional per-distance rate table -> numeric concurrence maxima
  std::vector<std::vector<double>> rows;
  const bool with_numeric = cfg.has("sweep", "rates_table");
  std::vector<RateSet> table_rates;
  std::vector<double> table_d;
  if (with_numeric) {
    const std::string path = cfg.get("sweep", "rates_table");
    std::ifstream in(path);
    if (!in) throw io_error("sweep.rates_table not found: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ss(line);
      double d;
      RateSet r;
      r.gamma0 = 1.0;
      if (!(ss >> d >> r.gamma11 >> r.gamma22 >> r.gamma12 >> r.omega12)) {
        if (lineno == 1) continue;  // header
        throw io_error("sweep.rates_table: malformed row at line " +
                       std::to_string(lineno));
      }
      table_d.push_back(d);
      table_rates.push_back(r);
    }
  }

  SimulationGrid grid;
  grid.t_end = cfg.get_double_or("grid", "t_end_gamma0", 2.0);
  grid.n_steps = cfg.get_int_or("grid", "n_steps", 2001);

  std::vector<TrajectorySummary> numeric;
  if (with_numeric) {
    numeric = batch_summaries_parallel(table_rates, excited_ground_state(), grid);
  }

  for (const auto& p : points) {
    rows.push_back({p.d, p.beta_bar, p.c_max, p.t_max, p.clamped ? 1.0 : 0.0});
  }
  std::vector<std::string> cols{"d_m", "beta_bar", "c_max", "t_max", "clamped"};
  write_csv(out_path(opt, "sweep.csv"), meta_lines("sweep", opt.seed, cfg), cols, rows);

  if (with_numeric) {
    std::vector<std::vector<double>> nrows;
    for (size_t i = 0; i < table_d.size(); ++i) {
      nrows.push_back({table_d[i], numeric[i].c_max, numeric[i].t_max});
    }
    write_csv(out_path(opt, "sweep_numeric.csv"), meta_lines("sweep", opt.seed, cfg),
              {"d", "c_max_numeric", "t_max_numeric"}, nrows);
  }
  return 0;
}

int cmd_fit(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const std::string model = cfg.get("fit", "model");
  const SampleSeries data = load_series(cfg.get("fit", "data"));

  FitResult res;
  std::vector<std::vector<double>> curve;
  if (model == "cdos") {
    const BicMode tmpl = read_mode(cfg);
    const double d_min = cfg.get_double_or("fit", "d_min_a", 0.0) * tmpl.a;
    res = fit_cdos(data, tmpl, d_min);
    BicMode fitted = tmpl;
    fitted.beta = res.params.at("beta");
    fitted.k_res = res.params.at("k_res");
    for (size_t i = 0; i < data.x.size(); ++i) {
      curve.push_back({data.x[i], data.y[i],
                       fitted.purcell * effective_beta(data.x[i], fitted)});
    }
  } else if (model == "purcell") {
    const double a = cfg.get_double("fit", "a_nm") * 1e-9;
    const double r_sphere = cfg.get_double("fit", "r_sphere_nm") * 1e-9;
    res = fit_purcell(data, a, r_sphere);
    for (size_t i = 0; i < data.x.size(); ++i) {
      const double m = 1.0 + res.params.at("A") *
                                 std::exp(-res.params.at("B") * (data.x[i] - r_sphere) / a);
      curve.push_back({data.x[i], data.y[i], m});
    }
  } else {
    throw config_error("config: field \"fit.model\" must be 'cdos' or 'purcell'");
  }

  auto j = meta_json("fit", opt.seed, cfg);
  j["model"] = model;
  j["params"] = res.params;
  j["covariance_diag"] = res.covariance_diag;
  j["residual_rms"] = res.residual_rms;
  j["n_points"] = res.n_points;
  j["converged"] = res.converged;
  if (!res.message.empty()) j["message"] = res.message;
  write_json(out_path(opt, "fit.json"), j);
  write_csv(out_path(opt, "fit_curve.csv"), meta_lines("fit", opt.seed, cfg),
            {"x_m", "y", "model"}, curve);
  return 0;
}

int cmd_validity(const Options& opt) {
  const ConfigFile cfg = load(opt);
  const double p = cfg.get_double("validity", "p_Cm");
  const double purcell = cfg.get_double("mode", "purcell");
  const double lambda = cfg.get_double("mode", "lambda_bic_nm") * 1e-9;
  const double fwhm = cfg.get_double("mode", "fwhm_nm") * 1e-9;

  const CouplingRegimeReport rep = regime_report(p, purcell, lambda, fwhm);
  auto j = meta_json("validity", opt.seed, cfg);
  j["q_factor"] = rep.q_factor;
  j["gamma_bic"] = rep.gamma_bic;
  j["p_max_Cm"] = rep.p_max;
  j["p_max_debye"] = rep.p_max_debye;
  j["margin"] = rep.margin;
  j["regime"] = rep.weak ? "weak" : "strong";
  j["regime_simplified"] = rep.weak_simplified ? "weak" : "strong";
  j["criteria_agree"] = rep.criteria_agree;
  write_json(out_path(opt, "validity.json"), j);
  return 0;
}

int run_command(const std::string& name, const Options& opt) {
  try {
    if (name == "rates") return cmd_rates(opt);
    if (name == "lattice-coeffs") return cmd_lattice_coeffs(opt);
    if (name == "cdos-model") return cmd_cdos_model(opt);
    if (name == "simulate") return cmd_simulate(opt);
    if (name == "sweep") return cmd_sweep(opt);
    if (name == "fit") return cmd_fit(opt);
    if (name == "validity") return cmd_validity(opt);
    std::cerr << "unknown command: " << name << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bicpair::cli
