#pragma once

#include <boost/rational.hpp>
#include <string>

namespace tdq {

// Exact rational arithmetic for quotients; boost::rational keeps values in
// lowest terms with a positive denominator.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tdq
