#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace primew {

struct PrimeRow {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> pi_n;
    std::optional<std::uint64_t> p_n;
};

enum class TableSource { sieved, loaded };

// Ground-truth rows (n, pi(n), p_n), sieved or ingested. Immutable once
// built; validate() enforces the monotonicity invariants.
struct PrimeTable {
    std::vector<PrimeRow> rows;
    TableSource source = TableSource::sieved;
    std::string origin; // path or generation parameters

    void validate() const; // throws std::invalid_argument on violation
};

inline constexpr std::uint64_t kDefaultSieveCapacity = 10'000'000'000ULL;

// Streams primes <= limit in increasing order through `visit`; stop early
// by returning false. Segmented odd-bitmap sieve, memory-bounded.
void for_primes_up_to(std::uint64_t limit, const std::function<bool(std::uint64_t)>& visit);

// Exact prime count pi(n). Throws resource_error above `capacity`.
std::uint64_t sieve_pi(std::uint64_t n, std::uint64_t capacity = kDefaultSieveCapacity);

// Exact k-th prime. Throws resource_error when the sieve bound estimate
// for p_k exceeds `capacity`.
std::uint64_t nth_prime(std::uint64_t k, std::uint64_t capacity = kDefaultSieveCapacity);

// Rows at n = start + i*step, i = 0..count-1, with exact pi(n); when
// with_pn is set, also the exact p_n (n read as a rank).
PrimeTable build_sample_table(std::uint64_t start, std::uint64_t step, std::uint64_t count,
                              bool with_pn, std::uint64_t capacity = kDefaultSieveCapacity);

// Accepted grammar: '#' comments and blank lines ignored; data lines hold
// 2 integers (`k p_k`) or 3 fields (`n pi_n p_n`, either of the last two
// possibly '-'). Rejects the first malformed line with its number, then
// validates table invariants.
PrimeTable load_table(const std::string& path);

void write_table(const std::string& path, const PrimeTable& table);

} // namespace primew
