#include "bicpair/cli/output.hpp"

#include <cstdio>
#include <fstream>

#include "bicpair/errors.hpp"

namespace bicpair::cli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> meta_lines(const std::string& command, unsigned seed,
                                    const ConfigFile& cfg) {
  std::vector<std::string> lines;
  lines.push_back(std::string(kVersion));
  lines.push_back("command = " + command);
  lines.push_back("seed = " + std::to_string(seed));
  for (const std::string& l : cfg.render()) lines.push_back("config." + l);
  return lines;
}

void write_csv(const std::string& path, const std::vector<std::string>& meta,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  for (const std::string& m : meta) out << "# " << m << "\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    out << columns[i] << (i + 1 < columns.size() ? "," : "");
  }
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << fmt(row[i]) << (i + 1 < row.size() ? "," : "");
    }
    out << "\n";
  }
  if (!out) throw io_error("write failed: " + path);
}

nlohmann::ordered_json meta_json(const std::string& command, unsigned seed,
                                 const ConfigFile& cfg) {
  nlohmann::ordered_json meta;
  meta["version"] = kVersion;
  meta["command"] = command;
  meta["seed"] = seed;
  nlohmann::ordered_json c;
  for (const std::string& l : cfg.render()) {
    const size_t eq = l.find(" = ");
    c[l.substr(0, eq)] = l.substr(eq + 3);
  }
  meta["config"] = c;
  return meta;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace bicpair::cli
