#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace duality {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational makeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double toDouble(const Rational& r) { return r.convert_to<double>(); }

inline bool isInteger(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string toString(const Rational& r) { return r.str(); }

}  // namespace duality
