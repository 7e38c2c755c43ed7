#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primew/bigint.hpp"
#include "primew/hpreal.hpp"

namespace primew {

// Multiplicative correction curve c(n) = a + b*ln(n).
struct LogCurve {
    HPReal a;
    HPReal b;

    HPReal eval_ln(const HPReal& ln_n) const { return a + b * ln_n; }
};

// Per-slice integer exponent table: slice lk = floor(n/slice_width) + 1
// selects exponents[lk-1], applied as a factor s^exponent.
struct SliceCorrection {
    HPReal s;
    std::vector<int> exponents;
    BigInt slice_width;
    BigInt range_max; // = exponents.size() * slice_width - 1

    // 1-based slice index; throws std::out_of_range outside [1, range_max].
    std::size_t index_for(const BigInt& n) const;
    int exponent_for(const BigInt& n) const { return exponents[index_for(n) - 1]; }
};

// Two degree-8 polynomials in z = log10(n) forming the correction
// cn(n) = pola(z) + polb(z) * ln(n).
struct PolyCorrection {
    std::vector<HPReal> pola; // coefficients, highest degree first
    std::vector<HPReal> polb;

    HPReal eval(const BigInt& n, int prec) const;
};

struct CorrectionModel {
    std::string name;
    LogCurve curve;
    std::optional<SliceCorrection> slices;
    BigInt valid_lo;
    BigInt valid_hi;
};

// Shipped models.
const CorrectionModel& builtin_g_large();    // p_n over [8, 1.335e16)
const CorrectionModel& builtin_g_small();    // p_n over [1, 1009999]
const CorrectionModel& builtin_pi_inverse(); // pi(k) over [100, 1.35e17)
const PolyCorrection& builtin_f_poly();      // p_n over [1e16, 1e24]

// FNV-1a over the decimal rendering of an exponent table; shipped tables
// carry their expected checksum (see tests).
std::uint64_t table_checksum(const std::vector<int>& exponents);

// Corrected n-th prime estimate: |−n W_{-1}(−e/n)| * c(n) * s^ll[lk] − pi_n.
// Throws std::out_of_range when n falls outside model.valid_range.
HPReal corrected_pn(const BigInt& n, const BigInt& pi_n, const CorrectionModel& model,
                    int prec = HPReal::kDefaultDigits);

// Polynomial-corrected estimate for 10^16 <= n <= 10^24:
// −cn(n)·n·W_{-1}(−e/n) − pi_n with the shipped pola/polb.
HPReal f_poly_pn(const BigInt& n, const BigInt& pi_n, int prec = HPReal::kDefaultDigits);

// Small-range estimate of p_n for 1 <= n <= 1009999 (no pi input needed):
// round(|−n W_{-1}(−e/n)| − ss·n/W0(n)).
BigInt g_small_pn(const BigInt& n);

// Approximates pi(k) by solving |−n W_{-1}(−e/n)| − ss(n)·n/W0(n) = k for n
// over the bracket [H/8, H], H = 2k/ln k.
HPReal invert_pi(const BigInt& k, int prec = HPReal::kDefaultDigits);

// Plain-text model files: header
//   model <name> s=<decimal> slice_width=<int> range_max=<int> a=<decimal> b=<decimal>
// followed by whitespace-separated integer exponents.
CorrectionModel load_model(const std::string& path);
void write_model(const std::string& path, const CorrectionModel& model);

} // namespace primew
