#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "primew/bigint.hpp"
#include "primew/estimators.hpp"
#include "primew/hpreal.hpp"
#include "primew/models.hpp"
#include "primew/primes.hpp"

namespace primew {

struct FitResult {
    HPReal a;
    HPReal b;
    HPReal r2; // squared sample correlation of y against ln n, in [0, 1]
    std::size_t point_count = 0;
};

struct GapStats {
    HPReal min_gap;
    HPReal max_gap;
    HPReal mean_gap;
    std::size_t count = 0;
};

enum class TuneMetric { mean_abs, max_abs };

struct SliceTuneEntry {
    std::size_t slice_index = 0; // 1-based lk
    int k = 0;
    HPReal mean_gap_before;
    HPReal mean_gap_after;
    bool empty = false; // no table rows fell into this slice
};

struct SliceTuneResult {
    SliceCorrection correction;
    std::vector<SliceTuneEntry> entries;
};

// Per-point correction factor x with A(n)*x = p_n - pi_n, where
// A(n) = |-n W_{-1}(-e/n)|. Solved by bisection on [0.8, 1.1] and
// cross-checked against the closed form; the two must agree to prec-5
// digits. Throws bracket_error when the root escapes [0.8, 1.1].
HPReal solve_correction_point(const BigInt& n, const BigInt& p_n, const BigInt& pi_n,
                              int prec = HPReal::kDefaultDigits);

// Ordinary least squares of y against ln n:
//   b = (N Σ y ln n − Σy Σln n) / (N Σ ln²n − (Σln n)²),  a = (Σy − b Σln n)/N,
// plus the squared correlation r².
FitResult lls_fit(const std::vector<std::pair<BigInt, HPReal>>& points);

// Per-slice integer exponent k in [-k_bound, k_bound] minimizing the chosen
// gap metric of |A(n)·c(n)·s^k − pi(n)| against p_n within each slice of
// width slice_width. Ties break toward smaller |k|, then toward negative k.
// Slices with no rows get exponent 0 and are flagged.
SliceTuneResult slice_tune(const PrimeTable& table, const LogCurve& curve, const HPReal& s,
                           const BigInt& slice_width, long k_bound,
                           TuneMetric metric = TuneMetric::mean_abs, int threads = 1);

// min/max/mean absolute gap of an estimator against the table's ground
// truth (p_n for p-type estimators, pi_n otherwise). `model` overrides the
// shipped model for plouffe_g.
GapStats evaluate_gaps(EstimatorId estimator, const CorrectionModel* model,
                       const PrimeTable& table, int prec = HPReal::kDefaultDigits,
                       int threads = 1);

} // namespace primew
