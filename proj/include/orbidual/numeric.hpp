#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace orbidual {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when an input fails validation (bad lattice, non-subgroup, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Raised when a computation would exceed a configured size cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

// Raised when an exactness guard fails (e.g. a sum that must be divisible
// by a group order is not).
struct ArithmeticError : std::runtime_error {
  explicit ArithmeticError(const std::string& m) : std::runtime_error(m) {}
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor of a rational number as an integer.
inline Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Canonical representative in [0,1).
inline Rat mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace orbidual
