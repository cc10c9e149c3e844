#pragma once

#include <compare>
#include <string>

#include "zagreb/numeric.hpp"

namespace zagreb {

/// Exact rational with reduced int64 numerator/denominator, den > 0.
/// Comparisons cross-multiply in 128 bits and never round.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(Wide num, Wide den);
  static Rational integer(long long value) { return Rational{value, 1}; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = static_cast<Wide>(a.num) * b.den;
    Wide rhs = static_cast<Wide>(b.num) * a.den;
    return lhs < rhs ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }
};

}  // namespace zagreb
