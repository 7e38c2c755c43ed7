#include "primew/lambert.hpp"

#include <stdexcept>

namespace primew {

namespace {

// Halley iteration on f(w) = w*e^w - x. Cubic convergence from any
// reasonable branch-local seed; the step denominator is
// e^w (w+1) - (w+2) f / (2 (w+1)).
HPReal halley(HPReal w, const HPReal& x, int work_digits) {
    const HPReal tiny = HPReal(1LL, work_digits).ulp() * 16L;
    for (int iter = 0; iter < 200; ++iter) {
        HPReal ew = exp(w);
        HPReal f = w * ew - x;
        if (f.is_zero()) break;
        HPReal wp1 = w + 1L;
        HPReal denom = ew * wp1 - (wp1 + 1L) * f / (wp1 * 2L);
        HPReal dw = f / denom;
        w = w - dw;
        HPReal scale = w.abs() + HPReal(1LL, work_digits);
        if (dw.abs() < scale * tiny) break;
    }
    return w;
}

HPReal principal_seed(const HPReal& x, int digits) {
    const HPReal e = HPReal::e(digits);
    if (x > e) {
        // asymptotic: L1 - L2 + L2/L1
        HPReal l1 = log(x);
        HPReal l2 = log(l1);
        return l1 - l2 + l2 / l1;
    }
    if (x.sign() >= 0) {
        // moderate positive range; crude but inside the Halley basin
        return x / (x + 1L);
    }
    HPReal q = (x * e + 1L) * 2L;
    if (q.sign() <= 0) return HPReal(-1LL, digits);
    if (x.to_double() > -0.09) {
        // Taylor about 0: W = x - x^2 + ...
        return x * (HPReal(1LL, digits) - x);
    }
    // branch-point series in p = sqrt(2(1+e*x))
    HPReal p = sqrt(q);
    return HPReal(-1LL, digits) + p - p * p / 3L + p * p * p * HPReal(11LL, digits) / 72L;
}

HPReal minus_one_seed(const HPReal& x, int digits) {
    const HPReal e = HPReal::e(digits);
    HPReal q = (x * e + 1L) * 2L;
    if (q.sign() <= 0) return HPReal(-1LL, digits);
    if (x.to_double() < -0.25 / 2.718281828459045) {
        HPReal p = -sqrt(q);
        return HPReal(-1LL, digits) + p - p * p / 3L + p * p * p * HPReal(11LL, digits) / 72L;
    }
    // x -> 0-: W-1(x) ~ ln(-x) - ln(-ln(-x)) + ln(-ln(-x))/ln(-x)
    HPReal l1 = log(-x);
    HPReal l2 = log(-l1);
    return l1 - l2 + l2 / l1;
}

} // namespace

HPReal lambert_w(WBranch branch, const HPReal& x, int prec) {
    if (prec < HPReal::kMinDigits) prec = HPReal::kMinDigits;
    const int work = prec + 10;
    const HPReal xw = x.with_precision(work);
    const HPReal minus_inv_e = -(HPReal(1LL, work) / HPReal::e(work));

    if (xw < minus_inv_e) {
        // tolerate one ulp at the requested precision below the branch point
        HPReal slack = minus_inv_e.abs() * HPReal("1e" + std::to_string(1 - prec), work);
        if (xw < minus_inv_e - slack)
            throw std::domain_error("lambert_w: x < -1/e");
        return HPReal(-1LL, prec);
    }

    if (branch == WBranch::principal) {
        if (xw.is_zero()) return HPReal(0LL, prec);
        HPReal w = halley(principal_seed(xw, work), xw, work);
        if (w < HPReal(-1LL, work)) w = HPReal(-1LL, work); // branch guarantee
        return w.with_precision(prec);
    }

    if (xw.sign() >= 0)
        throw std::domain_error("lambert_w: branch -1 requires x < 0");
    HPReal w = halley(minus_one_seed(xw, work), xw, work);
    if (w > HPReal(-1LL, work)) w = HPReal(-1LL, work);
    return w.with_precision(prec);
}

HPReal lambert_w_series(const HPReal& x, int num_terms) {
    if (num_terms < 1 || num_terms > 6)
        throw std::domain_error("lambert_w_series: num_terms must be in [1, 6]");
    const int work = x.precision() + 8;
    const HPReal xw = x.with_precision(work);
    if (xw <= HPReal::e(work))
        throw std::domain_error("lambert_w_series: requires x > e");

    const HPReal l1 = log(xw);
    const HPReal l2 = log(l1);
    HPReal sum = l1;
    if (num_terms >= 2) sum = sum - l2;
    if (num_terms >= 3) sum = sum + l2 / l1;
    if (num_terms >= 4) sum = sum + l2 * (l2 - 2L) / (pow_si(l1, 2) * 2L);
    if (num_terms >= 5)
        sum = sum + l2 * (HPReal(6LL, work) - l2 * 9L + pow_si(l2, 2) * 2L) / (pow_si(l1, 3) * 6L);
    if (num_terms >= 6)
        sum = sum + l2 * (HPReal(-12LL, work) + l2 * 36L - pow_si(l2, 2) * 22L + pow_si(l2, 3) * 3L) /
                        (pow_si(l1, 4) * 12L);
    return sum.with_precision(x.precision());
}

} // namespace primew
