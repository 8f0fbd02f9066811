#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace chowlab {

using Integer = boost::multiprecision::cpp_int;

enum class Coefficients { F2, Z };

inline const char* to_string(Coefficients c) { return c == Coefficients::F2 ? "F2" : "Z"; }

/// Reduces an integer into the canonical representative of the coefficient ring.
inline Integer reduce(const Integer& x, Coefficients ring) {
  if (ring == Coefficients::Z) return x;
  return (x % 2) != 0 ? Integer(1) : Integer(0);
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace chowlab
