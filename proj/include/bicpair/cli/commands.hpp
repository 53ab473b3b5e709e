#pragma once

#include <string>

#include "bicpair/config.hpp"

namespace bicpair::cli {

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  unsigned seed = 1;
  std::string format = "csv";  // csv | json
};

// One function per subcommand; each loads what it needs from the config,
// writes its outputs under out_dir and returns 0. Failures propagate as
// exceptions and are mapped to exit codes by the entry point.
int cmd_rates(const Options& opt);
int cmd_lattice_coeffs(const Options& opt);
int cmd_cdos_model(const Options& opt);
int cmd_simulate(const Options& opt);
int cmd_sweep(const Options& opt);
int cmd_fit(const Options& opt);
int cmd_validity(const Options& opt);

/// Exception-to-exit-code mapping shared by main and the tests:
/// 0 ok, 2 config, 3 numerical, 4 I/O.
int run_command(const std::string& name, const Options& opt);

}  // namespace bicpair::cli
