#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicpair/bic_cdos.hpp"
#include "bicpair/config.hpp"
#include "bicpair/dynamics.hpp"
#include "bicpair/free_space.hpp"
#include "bicpair/lattice_model.hpp"

namespace bicpair::cli {

/// Typed views over the flat config file. Each reader validates what it
/// needs and reports missing fields by full path.
BicMode read_mode(const ConfigFile& cfg);

LatticeParams read_lattice(const ConfigFile& cfg);
std::string read_lattice_variant(const ConfigFile& cfg);  // "ed" | "md"

struct EmitterPair {
  EmitterConfig e1, e2;
};
/// Emitters for a free-space lateral scan: separation applied along x.
EmitterPair read_emitters(const ConfigFile& cfg);

struct ScanGrid {
  double d_min = 0.0, d_max = 0.0;  // meters
  int n = 0;
};
ScanGrid read_scan(const ConfigFile& cfg);

/// Rates in gamma0-normalized units unless rates.units = si.
RateSet read_rates(const ConfigFile& cfg);

SimulationGrid read_grid(const ConfigFile& cfg);

DickeState read_initial_state(const ConfigFile& cfg);

Vec3 parse_orientation(const std::string& text, const std::string& field);

}  // namespace bicpair::cli
