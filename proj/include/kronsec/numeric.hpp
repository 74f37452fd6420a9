#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace kronsec {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Rejected input or a violated precondition. Maps to CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound was exceeded. Maps to CLI exit code 1.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independent computations disagreed, or an exactness guarantee failed.
// Maps to CLI exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical continuation or root isolation could not meet its safety margins.
class ContinuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bounded resampling ran out of attempts.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Rational pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw DomainError("malformed rational '" + text + "'");
    return Rational(Integer(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + text + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  // mpq needs a positive denominator to stay canonical.
  Rational q(Integer(strip_plus(num)));
  return q / d;
}

}  // namespace kronsec
