#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bicpair/config.hpp"

namespace bicpair::cli {

inline constexpr const char* kVersion = "bicpair 1.0.0";

/// Full-precision, locale-independent rendering ("%.17g", '.' separator).
std::string fmt(double v);

/// Header comment block embedded in every output file: version, command,
/// seed and the fully resolved configuration.
std::vector<std::string> meta_lines(const std::string& command, unsigned seed,
                                    const ConfigFile& cfg);

void write_csv(const std::string& path, const std::vector<std::string>& meta,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

nlohmann::ordered_json meta_json(const std::string& command, unsigned seed,
                                 const ConfigFile& cfg);

void write_json(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace bicpair::cli
