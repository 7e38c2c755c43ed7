#include "primew/hpreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace primew {

namespace {
constexpr double kLog2Of10 = 3.3219280948873623;

int clamp_digits(int digits) {
    return std::max(digits, HPReal::kMinDigits);
}
} // namespace

mpfr_prec_t HPReal::bits_for(int digits) {
    digits = clamp_digits(digits);
    return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

HPReal::HPReal(int digits) : digits_(clamp_digits(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long long v, int digits) : digits_(clamp_digits(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    static_assert(sizeof(long long) == sizeof(long));
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
}

HPReal::HPReal(const BigInt& v, int digits) : digits_(clamp_digits(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

HPReal::HPReal(const std::string& decimal, int digits) : digits_(clamp_digits(digits)) {
    mpfr_init2(v_, bits_for(digits_));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: '" + decimal + "'");
    }
}

HPReal::HPReal(const HPReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal::~HPReal() {
    mpfr_clear(v_);
}

HPReal HPReal::with_precision(int digits) const {
    HPReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string HPReal::str(int sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    const int nd = sig_digits > 0 ? sig_digits : digits_;
    mpfr_exp_t expo = 0;
    char* s = mpfr_get_str(nullptr, &expo, 10, static_cast<size_t>(nd), v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    // value = 0.digits * 10^expo
    std::string out;
    const long ex = static_cast<long>(expo);
    const long len = static_cast<long>(digits.size());
    if (ex <= 0) {
        out = "0." + std::string(static_cast<size_t>(-ex), '0') + digits;
    } else if (ex >= len) {
        out = digits + std::string(static_cast<size_t>(ex - len), '0');
    } else {
        out = digits.substr(0, static_cast<size_t>(ex)) + "." + digits.substr(static_cast<size_t>(ex));
    }
    if (out.find('.') != std::string::npos) {
        const auto last = out.find_last_not_of('0');
        out.erase(out[last] == '.' ? last : last + 1);
    }
    return sign + out;
}

BigInt HPReal::round_half_away() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_) + 4);
    mpfr_round(t, v_); // nearest, ties away from zero
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDZ);
    mpfr_clear(t);
    return r;
}

BigInt HPReal::floor_int() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_) + 4);
    mpfr_floor(t, v_);
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDZ);
    mpfr_clear(t);
    return r;
}

HPReal HPReal::ulp() const {
    HPReal r(digits_);
    if (mpfr_zero_p(v_)) {
        mpfr_set_ui(r.v_, 0, MPFR_RNDN);
        return r;
    }
    mpfr_set_ui_2exp(r.v_, 1, mpfr_get_exp(v_) - mpfr_get_prec(v_), MPFR_RNDN);
    return r;
}

HPReal HPReal::operator-() const {
    HPReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::abs() const {
    HPReal r(digits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

#define PRIMEW_BINOP(op, fn)                                              \
    HPReal operator op(const HPReal& a, const HPReal& b) {                \
        HPReal r(std::max(a.digits_, b.digits_));                         \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
        return r;                                                         \
    }                                                                     \
    HPReal operator op(const HPReal& a, long b) {                         \
        HPReal r(a.digits_);                                              \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                                \
        return r;                                                         \
    }

PRIMEW_BINOP(+, mpfr_add)
PRIMEW_BINOP(-, mpfr_sub)
PRIMEW_BINOP(*, mpfr_mul)
PRIMEW_BINOP(/, mpfr_div)
#undef PRIMEW_BINOP

HPReal HPReal::e(int digits) {
    HPReal one(1LL, digits);
    HPReal r(digits);
    mpfr_exp(r.raw(), one.raw(), MPFR_RNDN);
    return r;
}

HPReal HPReal::pi(int digits) {
    HPReal r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

HPReal HPReal::euler_gamma(int digits) {
    HPReal r(digits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

#define PRIMEW_UNFN(name, fn)                  \
    HPReal name(const HPReal& x) {             \
        HPReal r(x.precision());               \
        fn(r.raw(), x.raw(), MPFR_RNDN);       \
        return r;                              \
    }

PRIMEW_UNFN(exp, mpfr_exp)
PRIMEW_UNFN(log, mpfr_log)
PRIMEW_UNFN(log10, mpfr_log10)
PRIMEW_UNFN(sqrt, mpfr_sqrt)
#undef PRIMEW_UNFN

HPReal pow_si(const HPReal& x, long k) {
    HPReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

HPReal root_ui(const HPReal& x, unsigned long n) {
    HPReal r(x.precision());
    mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

HPReal abs(const HPReal& x) {
    return x.abs();
}

} // namespace primew
