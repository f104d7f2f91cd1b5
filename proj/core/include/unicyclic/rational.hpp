#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "unicyclic/error.hpp"

namespace unicyclic {

using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Integer value of `r`; throws InternalError naming `what` otherwise.
inline std::int64_t to_integer(const Rational& r, std::string_view what) {
  if (!is_integer(r)) {
    throw InternalError(std::string(what) + " is not an integer: " +
                        std::to_string(r.numerator()) + "/" +
                        std::to_string(r.denominator()));
  }
  return r.numerator();
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace unicyclic
