#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "primew/bigint.hpp"
#include "primew/hpreal.hpp"

namespace primew {

// A constant c whose nearest-integer powers {c^n} open with a run of primes.
struct GeoConstant {
    HPReal c;
    long start_n = 1;
    long streak_len = 0;
    // bounds on the set of constants sharing the same prime run
    std::optional<std::pair<HPReal, HPReal>> interval;
    std::vector<BigInt> values;
    // true when every value was certified by the deterministic witness set
    bool all_deterministic = true;
};

struct AnnealConfig {
    double initial_temperature = 1.0;
    double cooling_rate = 0.95; // in (0, 1)
    long steps_per_digit = 250; // budget = steps_per_digit * working digits
    std::uint64_t rng_seed = 1;
    int max_digits = 400; // cap on working precision
};

struct SearchResult {
    GeoConstant best;
    bool reached_target = false;
    long steps_used = 0;
};

enum class PrimalityKind { composite, prime, probable_prime };

// Nearest integer, ties away from zero. Throws precision_error when the
// value's precision cannot pin the result down.
BigInt nearest_int(const HPReal& x);

// Deterministic (12-witness Miller-Rabin) below 3.3e24, strong
// probable-prime beyond.
bool is_prime(const BigInt& m);
PrimalityKind classify_prime(const BigInt& m);

// Maximal run of consecutive n in [start_n, max_n] with {c^n} prime.
// Requires c > 1 carrying at least ceil(max_n*log10(c)) + 10 digits.
GeoConstant geo_streak(const HPReal& c, long start_n, long max_n);

// Stochastic interval-narrowing search for a constant in [lo, hi] whose
// streak from n=1 reaches target_len. The returned constant is re-verified
// through geo_streak before returning; reached_target=false signals an
// exhausted budget (the best candidate is still reported).
SearchResult geo_search(const HPReal& lo, const HPReal& hi, long target_len,
                        const AnnealConfig& cfg = {}, int chains = 1);

} // namespace primew
