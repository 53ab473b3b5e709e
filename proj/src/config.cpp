#include "bicpair/config.hpp"

#include <fstream>
#include <sstream>

namespace bicpair {

namespace {

std::string trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  const size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw config_error(origin + ":" + std::to_string(lineno) + ": unterminated section header");
      }
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) {
        throw config_error(origin + ":" + std::to_string(lineno) + ": empty section name");
      }
      cfg.sections_[section];
      continue;
    }
    const size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
    }
    if (section.empty()) {
      throw config_error(origin + ":" + std::to_string(lineno) + ": key outside any [section]");
    }
    cfg.sections_[section][key] = val;
  }
  return cfg;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.count(key)) {
    throw config_error("config: missing field \"" + section + "." + key + "\"");
  }
  return s->second.at(key);
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
  const std::string v = get(section, key);
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw config_error("config: field \"" + section + "." + key +
                       "\" is not a number: '" + v + "'");
  }
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int ConfigFile::get_int_or(const std::string& section, const std::string& key,
                           int fallback) const {
  if (!has(section, key)) return fallback;
  const double d = get_double(section, key);
  const int i = int(d);
  if (double(i) != d) {
    throw config_error("config: field \"" + section + "." + key + "\" must be an integer");
  }
  return i;
}

std::vector<double> ConfigFile::get_list(const std::string& section,
                                         const std::string& key) const {
  const std::string v = get(section, key);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) continue;
    try {
      size_t pos = 0;
      out.push_back(std::stod(cell, &pos));
      if (pos != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw config_error("config: field \"" + section + "." + key +
                         "\" has a non-numeric entry: '" + cell + "'");
    }
  }
  if (out.empty()) {
    throw config_error("config: field \"" + section + "." + key + "\" is an empty list");
  }
  return out;
}

std::vector<std::string> ConfigFile::render() const {
  std::vector<std::string> lines;
  for (const auto& [sec, kv] : sections_) {
    for (const auto& [k, v] : kv) {
      lines.push_back(sec + "." + k + " = " + v);
    }
  }
  return lines;
}

}  // namespace bicpair
