#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicpair {

/// Raised for malformed or incomplete run configuration; the CLI maps it to
/// exit code 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat INI-style key-value file: [section] headers, key = value lines,
/// '#'/';' comments. Two levels only, by design: runs stay diff-able.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;

  /// Missing keys report the full path, e.g. "emitters.p_Cm".
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  int get_int_or(const std::string& section, const std::string& key, int fallback) const;
  std::vector<double> get_list(const std::string& section, const std::string& key) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

  /// Canonical "key = value" rendering of everything parsed, for embedding
  /// the resolved configuration into output headers.
  std::vector<std::string> render() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  std::string origin_;
};

}  // namespace bicpair
