#pragma once

#include <gmpxx.h>
#include <string>

namespace primew {

// Exact integer type for indices and prime values beyond 64 bits
// (p_n at n = 10^24 has 26 digits).
using BigInt = mpz_class;

inline BigInt parse_bigint(const std::string& s) {
    return BigInt(s, 10);
}

inline std::string to_string(const BigInt& v) {
    return v.get_str(10);
}

// Decimal digit count of |v| (0 -> 1).
inline int digit_count(const BigInt& v) {
    if (v == 0) return 1;
    return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

inline BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace primew
