#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace folres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q", canonical: lowest terms, q > 0, no "/1".
std::string rational_to_string(const Rational& r);

// Accepts "p", "p/q", optional leading sign. Rejects anything with '.', 'e', 'E'.
Rational rational_from_string(const std::string& s);

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace folres
