#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gmis {

using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q".
inline std::string rational_str(const Rational& r) { return r.str(); }
inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace gmis
