#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sflat {

// Arbitrary-precision signed integer and canonical rational (gcd-reduced,
// positive denominator). All geometry in this library is computed over
// these types; there is no floating point anywhere in the computation path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Floor/ceil division on integers, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& q) {
  return is_integer(q) ? numerator(q).str() : numerator(q).str() + "/" + denominator(q).str();
}

// Exact conversion to int64 for packing fast paths; returns false when the
// value does not fit.
inline bool fits_int64(const Int& v, long long& out) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    return false;
  out = static_cast<long long>(v);
  return true;
}

}  // namespace sflat
