#pragma once

#include <string>

#include "primew/bigint.hpp"
#include "primew/hpreal.hpp"

namespace primew {

// The comparison columns of the gap tables: classical pi(n) and p_n
// estimators plus the two corrected families.
enum class EstimatorId {
    dusart_pi,
    li_pi,
    n_over_w,
    gram_pi,
    gram_inverse_pn,
    cipolla_pn,
    base_w_pn,
    plouffe_g,
    plouffe_f,
};

EstimatorId estimator_from_string(const std::string& name);
std::string to_string(EstimatorId id);
// true when the estimator predicts p_n, false when it predicts pi(n)
bool predicts_nth_prime(EstimatorId id);
// estimators that consume pi(n) alongside n
bool needs_pi_input(EstimatorId id);

struct Estimate {
    BigInt input_n;
    HPReal value;
    EstimatorId estimator;
};

// pi(n) ~ n / (ln n - 1). The bound is proven for n > 5393; smaller n are
// accepted for desk-scale work but flagged by dusart_in_proven_range.
HPReal dusart_pi(const BigInt& n, int prec = HPReal::kDefaultDigits);
bool dusart_in_proven_range(const BigInt& n);

// p_n ~ -n W_{-1}(-e/n); the exact functional inverse of dusart_pi.
// Requires n >= 8 so that -e/n >= -1/e.
HPReal base_w_pn(const BigInt& n, int prec = HPReal::kDefaultDigits);

// pi(n) ~ n / W0(n).
HPReal n_over_w(const BigInt& n, int prec = HPReal::kDefaultDigits);

// The 1902 asymptotic expansion of p_n, up to the five classical terms
//   n (ln n + ln ln n - 1 + (ln ln n - 2)/ln n - (ln^2 ln n - 6 ln ln n + 11)/(2 ln^2 n)).
// num_terms in [1, 5] selects the leading terms in that order; n >= 4.
HPReal cipolla_pn(const BigInt& n, int num_terms, int prec = HPReal::kDefaultDigits);

// Gram series: 1 + sum_{k>=1} (ln x)^k / (k k! zeta(k+1)); the leading 1 can
// be dropped via include_unit=false. Truncates once terms decrease below
// 10^-prec of the partial sum.
HPReal gram_pi(const HPReal& x, bool include_unit = true);

// Functional inverse of the Gram series: x with gram_pi(x) = k, found by
// bisection over [k, 3k ln(k+2)] plus a secant polish.
HPReal gram_inverse(const BigInt& k, int prec = HPReal::kDefaultDigits);

} // namespace primew
