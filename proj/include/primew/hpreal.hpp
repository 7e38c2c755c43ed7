#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "primew/bigint.hpp"

namespace primew {

// Arbitrary-precision real with an explicit significant-decimal-digit
// contract. Backed by MPFR with round-to-nearest at a few guard bits
// beyond the requested decimal precision, so every single operation is
// accurate well within one unit in the last stated digit.
//
// Precision propagates: the result of a binary operation carries the
// larger of the operand precisions.
class HPReal {
public:
    static constexpr int kDefaultDigits = 32;
    static constexpr int kMinDigits = 16;

    HPReal() : HPReal(kDefaultDigits) {}
    explicit HPReal(int digits);
    HPReal(long long v, int digits);
    HPReal(const BigInt& v, int digits = kDefaultDigits);
    // Parses a plain decimal string (no locale). The string is taken as an
    // exact decimal and rounded to the requested precision.
    explicit HPReal(const std::string& decimal, int digits = kDefaultDigits);

    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    int precision() const { return digits_; }
    HPReal with_precision(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Fixed-point rendering with `sig_digits` significant digits
    // (default: the value's own precision). Trailing fractional zeros
    // are stripped. Never uses exponent notation or locale grouping.
    std::string str(int sig_digits = -1) const;

    // Nearest integer, ties away from zero.
    BigInt round_half_away() const;
    BigInt floor_int() const;

    // One unit in the last binary place, as a positive HPReal.
    HPReal ulp() const;

    HPReal operator-() const;
    HPReal abs() const;

    friend HPReal operator+(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a, const HPReal& b);
    friend HPReal operator*(const HPReal& a, const HPReal& b);
    friend HPReal operator/(const HPReal& a, const HPReal& b);
    HPReal& operator+=(const HPReal& b) { return *this = *this + b; }
    HPReal& operator-=(const HPReal& b) { return *this = *this - b; }
    HPReal& operator*=(const HPReal& b) { return *this = *this * b; }
    HPReal& operator/=(const HPReal& b) { return *this = *this / b; }

    friend HPReal operator+(const HPReal& a, long b);
    friend HPReal operator-(const HPReal& a, long b);
    friend HPReal operator*(const HPReal& a, long b);
    friend HPReal operator/(const HPReal& a, long b);

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    static HPReal e(int digits);
    static HPReal pi(int digits);
    static HPReal euler_gamma(int digits);

    static mpfr_prec_t bits_for(int digits);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
    int digits_;
};

HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal log10(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal pow_si(const HPReal& x, long k);
// x^(1/n) for x > 0, n >= 1.
HPReal root_ui(const HPReal& x, unsigned long n);
HPReal abs(const HPReal& x);

} // namespace primew
