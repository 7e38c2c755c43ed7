#pragma once

#include "primew/hpreal.hpp"

namespace primew {

// Logarithmic integral li(x), principal value of the integral of dt/ln t
// from 0 to x. Defined for x >= 0, x != 1; li(0) = 0, li(2) ~ 1.04516.
HPReal li(const HPReal& x);

// Riemann zeta at integer arguments k >= 2, to `prec` significant digits.
// Values are cached per (k, precision); the cache is safe for concurrent use.
HPReal zeta_int(int k, int prec = HPReal::kDefaultDigits);

} // namespace primew
