#include "zagreb/rational.hpp"

namespace zagreb {

Rational Rational::make(Wide num, Wide den) {
  if (den == 0) fail(errc::parameter_out_of_range, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{wide_to_int64(num, "rational numerator"), wide_to_int64(den, "rational denominator")};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace zagreb
