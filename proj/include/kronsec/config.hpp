#pragma once

// key = value configuration; '#' starts a comment.

#include "kronsec/numeric.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace kronsec {

inline constexpr const char* kConfigEnv = "KRONSEC_CONFIG";

struct Config {
  int n_cap = 14;
  int precision_bits = 96;
  int sweep_cap = 10;
  std::uint64_t seed = 1;
  std::string output = "-";  // "-" is standard output

  void validate() const {
    if (n_cap < 1) throw DomainError("config: n_cap must be positive");
    if (sweep_cap < 1) throw DomainError("config: sweep_cap must be positive");
    if (precision_bits < 53) throw DomainError("config: precision_bits must be at least 53");
  }
};

namespace detail {
inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline long long parse_config_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw DomainError("config: " + key + " needs an integer, got '" + value + "'");
  return v;
}
}  // namespace detail

inline Config parse_config(std::istream& in, const std::string& origin = "config") {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq)), value = detail::trim(line.substr(eq + 1));
    if (key == "n_cap") c.n_cap = static_cast<int>(detail::parse_config_int(key, value));
    else if (key == "precision_bits") c.precision_bits = static_cast<int>(detail::parse_config_int(key, value));
    else if (key == "sweep_cap") c.sweep_cap = static_cast<int>(detail::parse_config_int(key, value));
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(detail::parse_config_int(key, value));
    else if (key == "output") c.output = value.empty() ? "-" : value;
    else throw DomainError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

// Explicit path, else $KRONSEC_CONFIG, else defaults.
inline Config load_config(const std::optional<std::string>& path) {
  std::string p;
  if (path) p = *path;
  else if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') p = env;
  if (p.empty()) return Config{};
  std::ifstream in(p);
  if (!in) throw DomainError("cannot open config file '" + p + "'");
  return parse_config(in, p);
}

}  // namespace kronsec
