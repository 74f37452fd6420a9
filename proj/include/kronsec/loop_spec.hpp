#pragma once

// JSON loop specifications for the monodromy tracker:
//   {"base": "deg=3; coeffs=1,0,0,-1",       (or an array a_0..a_n)
//    "segments": ["circle(0, 1)", "half_twist(1)"],
//    "tolerance": 1e-24, "max_step": 0.015625, "inverse": false}
// base follows the binary form convention, a_i on t^(n-i); circle indices
// count powers of t.

#include "kronsec/binary_form.hpp"
#include "kronsec/monodromy.hpp"

#include <nlohmann/json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace kronsec {

struct LoopSpec {
  BinaryForm base;
  std::vector<std::string> segments;
  TrackOptions options;
  bool inverse = false;
};

inline QPoly to_qpoly(const BinaryForm& f) {
  const int n = f.degree();
  QPoly p(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Rational& c = f[i];
    p[static_cast<std::size_t>(n - i)] = QComplex(QReal(numerator(c).str()) / QReal(denominator(c).str()));
  }
  return p;
}

inline LoopSpec parse_loop_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("loop spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("loop spec must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "base" && key != "segments" && key != "tolerance" && key != "max_step" && key != "inverse")
      throw DomainError("loop spec: unknown field '" + key + "'");
  LoopSpec spec;
  if (!j.contains("base")) throw DomainError("loop spec: missing 'base'");
  const auto& base = j["base"];
  if (base.is_string()) {
    spec.base = parse_binary_form(base.get<std::string>());
  } else if (base.is_array() && base.size() >= 2) {
    std::vector<Rational> c;
    for (const auto& x : base) {
      if (x.is_number_integer()) c.emplace_back(x.get<long long>());
      else if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
      else throw DomainError("loop spec: base coefficients must be integers or rational strings");
    }
    spec.base = BinaryForm(std::move(c));
  } else {
    throw DomainError("loop spec: 'base' must be a binary form string or an array of at least two coefficients");
  }
  if (spec.base[0] == 0) throw DomainError("loop spec: leading coefficient a_0 must be nonzero");
  if (!is_squarefree(spec.base)) throw DomainError("loop spec: base polynomial is not squarefree");
  if (!j.contains("segments") || !j["segments"].is_array()) throw DomainError("loop spec: 'segments' must be an array");
  for (const auto& s : j["segments"]) {
    if (!s.is_string()) throw DomainError("loop spec: segments are strings like \"half_twist(1)\"");
    spec.segments.push_back(s.get<std::string>());
  }
  auto positive = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number() || !(j[key].get<double>() > 0)) throw DomainError(std::string("loop spec: '") + key + "' must be a positive number");
    out = j[key].get<double>();
  };
  positive("tolerance", spec.options.tolerance);
  positive("max_step", spec.options.max_step);
  if (j.contains("inverse")) {
    if (!j["inverse"].is_boolean()) throw DomainError("loop spec: 'inverse' must be a boolean");
    spec.inverse = j["inverse"].get<bool>();
  }
  return spec;
}

inline std::vector<LoopSegment> build_path(const LoopSpec& spec) {
  const QPoly base = to_qpoly(spec.base);
  const auto roots = base_roots(base, spec.options);
  static const std::regex twist(R"(\s*half_twist\(\s*(\d+)\s*\)\s*)");
  static const std::regex circ(R"(\s*circle\(\s*(\d+)\s*,\s*([0-9]*\.?[0-9]+(?:[eE][-+]?\d+)?)\s*\)\s*)");
  std::vector<LoopSegment> path;
  for (const auto& s : spec.segments) {
    std::smatch m;
    if (std::regex_match(s, m, twist)) path.push_back(half_twist(base, roots, std::stoi(m[1])));
    else if (std::regex_match(s, m, circ)) path.push_back(circle(base, std::stoi(m[1]), std::stod(m[2])));
    else throw DomainError("loop spec: unknown segment '" + s + "': expected half_twist(i) or circle(index, radius)");
  }
  return spec.inverse ? inverse_path(path) : path;
}

inline MonodromyLoop run_loop_spec(const LoopSpec& spec) {
  return track_roots(to_qpoly(spec.base), build_path(spec), spec.options);
}

}  // namespace kronsec
