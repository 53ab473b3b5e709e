#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bicpair/errors.hpp"
#include "bicpair/fitting.hpp"

namespace bicpair {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, e - b + 1);
}

// nm / um / µm / m -> meters
double unit_scale(const std::string& u, const std::string& context) {
  if (u == "nm") return 1e-9;
  if (u == "um" || u == "µm" || u == "micron") return 1e-6;
  if (u == "m") return 1.0;
  throw io_error("load_series: unknown unit '" + u + "' " + context);
}

bool parse_number(const std::string& tok, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(tok, &pos);
    return pos == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

SampleSeries load_json_series(const std::string& path) {
  std::ifstream in(path);
  nlohmann::json j;
  in >> j;
  SampleSeries s;
  s.label = j.value("label", "");
  const double scale = unit_scale(j.value("unit", "m"), "in " + path);
  for (double v : j.at("x")) s.x.push_back(v * scale);
  for (double v : j.at("y")) s.y.push_back(v);
  if (s.x.empty()) throw io_error("load_series: empty series in " + path);
  s.validate(1);
  return s;
}

}  // namespace

SampleSeries load_series(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    return load_json_series(path);
  }

  std::ifstream in(path);
  if (!in) throw io_error("load_series: cannot open " + path);

  SampleSeries s;
  double scale = 1.0;
  bool unit_seen = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#' || t[0] == ';') {
      // honor "# unit = um" style declarations
      std::string body = trim(t.substr(1));
      const size_t eq = body.find_first_of("=:");
      if (eq != std::string::npos && trim(body.substr(0, eq)) == "unit") {
        scale = unit_scale(trim(body.substr(eq + 1)),
                           "(line " + std::to_string(lineno) + ")");
        unit_seen = true;
      }
      continue;
    }
    std::replace(t.begin(), t.end(), ';', ',');
    std::replace(t.begin(), t.end(), '\t', ',');
    std::replace(t.begin(), t.end(), ' ', ',');
    std::vector<std::string> tok;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      if (!cell.empty()) tok.push_back(cell);
    }
    if (tok.empty()) continue;

    double xv, yv;
    if (!parse_number(tok[0], xv)) {
      // header row; a column name like "d_um" or "z_nm" declares the unit
      if (s.x.empty()) {
        const size_t us = tok[0].find_last_of('_');
        if (!unit_seen && us != std::string::npos) {
          scale = unit_scale(tok[0].substr(us + 1),
                             "(header, line " + std::to_string(lineno) + ")");
          unit_seen = true;
        }
        if (s.label.empty() && tok.size() >= 2) s.label = tok[1];
        continue;
      }
      throw io_error("load_series: malformed row at line " +
                               std::to_string(lineno) + " of " + path);
    }
    if (tok.size() < 2 || !parse_number(tok[1], yv)) {
      throw io_error("load_series: malformed row at line " +
                               std::to_string(lineno) + " of " + path);
    }
    xv *= scale;
    if (!s.x.empty()) {
      if (xv == s.x.back()) {
        throw io_error("load_series: duplicate abscissa at line " +
                                 std::to_string(lineno) + " of " + path);
      }
      if (xv < s.x.back()) {
        throw io_error("load_series: non-monotone abscissa at line " +
                                 std::to_string(lineno) + " of " + path);
      }
    }
    s.x.push_back(xv);
    s.y.push_back(yv);
  }
  if (s.x.empty()) throw io_error("load_series: no data rows in " + path);
  return s;
}

}  // namespace bicpair
