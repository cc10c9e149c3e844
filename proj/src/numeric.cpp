#include "zagreb/numeric.hpp"

#include <limits>

namespace zagreb {

std::string wide_to_string(Wide value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // -2^127 negates to itself; the values we print never reach it.
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

long long wide_to_int64(Wide value, const char* what) {
  if (value > std::numeric_limits<long long>::max() || value < std::numeric_limits<long long>::min())
    fail(errc::value_overflow, std::string(what) + " = " + wide_to_string(value) + " does not fit in 64 bits");
  return static_cast<long long>(value);
}

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace zagreb
