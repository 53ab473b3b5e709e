#include "bicpair/cli/run_config.hpp"

#include <cmath>
#include <sstream>

namespace bicpair::cli {

BicMode read_mode(const ConfigFile& cfg) {
  BicMode m;
  m.lambda_bic = cfg.get_double("mode", "lambda_bic_nm") * 1e-9;
  m.a = cfg.get_double("mode", "a_nm") * 1e-9;
  m.purcell = cfg.get_double("mode", "purcell");
  m.beta = cfg.get_double("mode", "beta");
  m.k_res = cfg.get_double("mode", "k_res_rad_per_um") * 1e6;
  m.c_n = cfg.get_list("mode", "c_n");
  m.q_factor = cfg.get_double_or("mode", "q_factor", 0.0);
  m.fwhm = cfg.get_double_or("mode", "fwhm_nm", 0.0) * 1e-9;
  m.validate();
  return m;
}

LatticeParams read_lattice(const ConfigFile& cfg) {
  LatticeParams q;
  q.a = cfg.get_double("lattice", "a_nm") * 1e-9;
  q.lambda_bic = cfg.get_double("lattice", "lambda_bic_nm") * 1e-9;
  q.z = cfg.get_double("lattice", "z_nm") * 1e-9;
  if (cfg.has("lattice", "x0_nm")) {
    q.x0 = cfg.get_double("lattice", "x0_nm") * 1e-9;
  } else {
    q.x0 = cfg.get_double_or("lattice", "x0_frac_a", 0.164) * q.a;
  }
  q.l_max = cfg.get_int_or("lattice", "l_max", 8);
  q.p_max = cfg.get_int_or("lattice", "p_max", 64);
  q.validate();
  return q;
}

std::string read_lattice_variant(const ConfigFile& cfg) {
  const std::string v = cfg.get("lattice", "variant");
  if (v != "ed" && v != "md") {
    throw config_error("config: field \"lattice.variant\" must be 'ed' or 'md'");
  }
  return v;
}

Vec3 parse_orientation(const std::string& text, const std::string& field) {
  if (text == "x") return {1.0, 0.0, 0.0};
  if (text == "y") return {0.0, 1.0, 0.0};
  if (text == "z") return {0.0, 0.0, 1.0};
  std::stringstream ss(text);
  Vec3 v{};
  char comma;
  if (!(ss >> v[0] >> comma >> v[1] >> comma >> v[2])) {
    throw config_error("config: field \"" + field + "\" must be x, y, z or 'vx,vy,vz'");
  }
  const double n = norm(v);
  if (n == 0.0) throw config_error("config: field \"" + field + "\" is a zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

EmitterPair read_emitters(const ConfigFile& cfg) {
  EmitterPair pair;
  pair.e1.p = cfg.get_double("emitters", "p_Cm");
  pair.e1.lambda0 = cfg.get_double("emitters", "lambda0_nm") * 1e-9;
  pair.e1.orientation = parse_orientation(cfg.get_or("emitters", "orientation1", "z"),
                                          "emitters.orientation1");
  pair.e2 = pair.e1;
  pair.e2.orientation = parse_orientation(cfg.get_or("emitters", "orientation2", "z"),
                                          "emitters.orientation2");
  pair.e1.validate();
  pair.e2.validate();
  return pair;
}

ScanGrid read_scan(const ConfigFile& cfg) {
  ScanGrid g;
  g.d_min = cfg.get_double("scan", "d_min_um") * 1e-6;
  g.d_max = cfg.get_double("scan", "d_max_um") * 1e-6;
  g.n = cfg.get_int_or("scan", "n", 201);
  if (g.n < 2) throw config_error("config: field \"scan.n\" must be >= 2");
  if (!(g.d_max > g.d_min)) {
    throw config_error("config: scan.d_max_um must exceed scan.d_min_um");
  }
  return g;
}

RateSet read_rates(const ConfigFile& cfg) {
  RateSet r;
  r.gamma11 = cfg.get_double("rates", "gamma11");
  r.gamma22 = cfg.get_double("rates", "gamma22");
  r.gamma12 = cfg.get_double("rates", "gamma12");
  r.omega12 = cfg.get_double_or("rates", "omega12", 0.0);
  r.gamma0 = cfg.get_double_or("rates", "gamma0", 1.0);
  const std::string units = cfg.get_or("rates", "units", "gamma0");
  if (units != "gamma0" && units != "si") {
    throw config_error("config: field \"rates.units\" must be 'gamma0' or 'si'");
  }
  r.validate();
  return r;
}

SimulationGrid read_grid(const ConfigFile& cfg) {
  SimulationGrid g;
  g.t_end = cfg.get_double("grid", "t_end_gamma0");
  g.n_steps = cfg.get_int_or("grid", "n_steps", 2001);
  const std::string m = cfg.get_or("grid", "method", "rk45");
  if (m == "rk45") {
    g.method = Method::rk45_adaptive;
  } else if (m == "rk4") {
    g.method = Method::rk4;
  } else if (m == "closed_form") {
    g.method = Method::closed_form;
  } else {
    throw config_error("config: field \"grid.method\" must be rk45, rk4 or closed_form");
  }
  g.rel_tol = cfg.get_double_or("grid", "rel_tol", 1e-10);
  g.abs_tol = cfg.get_double_or("grid", "abs_tol", 1e-10);
  g.validate();
  return g;
}

DickeState read_initial_state(const ConfigFile& cfg) {
  const std::string s = cfg.get_or("initial", "state", "e1g2");
  if (s == "e1g2") return excited_ground_state();
  if (s == "ee") {
    DickeState st;
    st.rho_ee = 1.0;
    st.rho_gg = 0.0;
    return st;
  }
  if (s == "symmetric") {
    DickeState st;
    st.rho_ss = 1.0;
    st.rho_gg = 0.0;
    return st;
  }
  if (s == "antisymmetric") {
    DickeState st;
    st.rho_aa = 1.0;
    st.rho_gg = 0.0;
    return st;
  }
  throw config_error("config: field \"initial.state\" must be one of "
                     "e1g2, ee, symmetric, antisymmetric");
}

}  // namespace bicpair::cli
