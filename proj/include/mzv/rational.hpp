#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mzv {

/// Exact arbitrary-precision rational coefficient. All algebra in this
/// library is exact; floating point appears only in the evaluation module.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical text form: "p" or "p/q" with q > 1, lowest terms, sign on p.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses the canonical text form back; throws ParseError on anything else.
Rational rational_from_string(const std::string& s);

}  // namespace mzv
