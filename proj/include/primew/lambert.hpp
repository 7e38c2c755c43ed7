#pragma once

#include "primew/hpreal.hpp"

namespace primew {

// The two real branches of the Lambert W function (inverse of w*e^w):
// W0 on [-1/e, inf) with W0 >= -1, and W-1 on [-1/e, 0) with W-1 <= -1.
enum class WBranch { principal, minus_one };

// Evaluates W on the requested branch to `prec` significant digits.
// The result w satisfies |w*e^w - x| <= 10^(2-prec) * max(|x|, 10^-prec).
// Throws std::domain_error outside the branch domain (x < -1/e beyond one
// ulp at prec, or x >= 0 on the -1 branch).
HPReal lambert_w(WBranch branch, const HPReal& x, int prec = HPReal::kDefaultDigits);

// Truncated asymptotic expansion of W0 for large arguments,
//   L1 - L2 + L2/L1 + L2(L2-2)/(2 L1^2) + ...   L1 = ln x, L2 = ln ln x.
// num_terms in [1, 6]; requires x > e so that L2 > 0.
HPReal lambert_w_series(const HPReal& x, int num_terms);

} // namespace primew
