#pragma once

#include <cstdint>
#include <string>

#include "zagreb/error.hpp"

namespace zagreb {

/// Signed 128-bit integer used for all exact cross-multiplied comparisons.
/// A product of two int64 values always fits.
using Wide = __int128;

std::string wide_to_string(Wide value);

/// Narrows to int64, throwing ValueOverflow if the value does not fit.
long long wide_to_int64(Wide value, const char* what);

Wide wide_gcd(Wide a, Wide b);

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace zagreb
