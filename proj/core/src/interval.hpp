#pragma once

// Outward-rounded interval evaluation of Verlinde-type trigonometric sums
// on top of MPFR. Internal to the core library.

#include "spinverlinde/numeric.hpp"

namespace spinverlinde::detail {

struct RationalEnclosure {
  Rational lower;
  Rational upper;
};

/// Encloses  (n/2)^{g-1} * sum_{j=1}^{n-1} s_j * sin(pi j / n)^{2-2g}
/// where s_j = 1, or s_j = (-1)^{j+1} when `alternating` is set.
/// Every endpoint is rounded outward, so the true value lies in the result.
RationalEnclosure enclose_sine_power_sum(int genus, int n, bool alternating, int precision_bits);

}  // namespace spinverlinde::detail
