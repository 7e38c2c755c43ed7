#include "primew/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "primew/errors.hpp"

namespace primew {

namespace {

// Upper bound for p_k (Rosser-type; valid for k >= 6, padded below).
std::uint64_t nth_prime_upper_bound(std::uint64_t k) {
    if (k < 6) return 16;
    const double kd = static_cast<double>(k);
    const double b = kd * (std::log(kd) + std::log(std::log(kd)));
    return static_cast<std::uint64_t>(b * 1.02) + 64;
}

std::vector<std::uint32_t> small_odd_primes(std::uint32_t limit) {
    std::vector<bool> comp(limit / 2 + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (comp[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t j = (p * p - 1) / 2; j <= limit / 2; j += p)
            comp[j] = true;
    }
    return primes;
}

} // namespace

void for_primes_up_to(std::uint64_t limit, const std::function<bool(std::uint64_t)>& visit) {
    if (limit < 2) return;
    if (!visit(2)) return;
    if (limit < 3) return;

    const auto sqrt_limit =
        static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 2;
    const std::vector<std::uint32_t> base = small_odd_primes(sqrt_limit);

    constexpr std::uint64_t kSegmentOdds = 1u << 21; // 2M odds = 4M span per segment
    std::vector<std::uint64_t> bits(kSegmentOdds / 64);
    std::vector<std::uint64_t> next(base.size());

    // next[i]: odd-index (value 2j+1) of the first multiple of base[i]
    // inside the upcoming segment
    for (std::size_t i = 0; i < base.size(); ++i)
        next[i] = (static_cast<std::uint64_t>(base[i]) * base[i]) / 2;

    const std::uint64_t max_idx = (limit - 1) / 2; // largest j with 2j+1 <= limit
    for (std::uint64_t seg_lo = 1; seg_lo <= max_idx; seg_lo += kSegmentOdds) {
        const std::uint64_t seg_hi = std::min(seg_lo + kSegmentOdds, max_idx + 1);
        const std::uint64_t span = seg_hi - seg_lo;
        std::fill(bits.begin(), bits.end(), 0);

        for (std::size_t i = 0; i < base.size(); ++i) {
            const std::uint64_t p = base[i];
            std::uint64_t j = next[i];
            if (j >= seg_hi) continue;
            if (j < seg_lo) j += ((seg_lo - j) + p - 1) / p * p;
            for (; j < seg_hi; j += p) {
                const std::uint64_t off = j - seg_lo;
                bits[off >> 6] |= 1ULL << (off & 63);
            }
            next[i] = j;
        }

        for (std::uint64_t off = 0; off < span; ++off) {
            if (bits[off >> 6] & (1ULL << (off & 63))) continue;
            if (!visit(2 * (seg_lo + off) + 1)) return;
        }
    }
}

std::uint64_t sieve_pi(std::uint64_t n, std::uint64_t capacity) {
    if (n < 2) throw std::domain_error("sieve_pi: requires n >= 2");
    if (n > capacity)
        throw resource_error("sieve_pi: n=" + std::to_string(n) + " exceeds capacity " +
                             std::to_string(capacity));
    std::uint64_t count = 0;
    for_primes_up_to(n, [&](std::uint64_t) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t nth_prime(std::uint64_t k, std::uint64_t capacity) {
    if (k < 1) throw std::domain_error("nth_prime: requires k >= 1");
    const std::uint64_t bound = nth_prime_upper_bound(k);
    if (bound > capacity)
        throw resource_error("nth_prime: k=" + std::to_string(k) +
                             " needs sieving to ~" + std::to_string(bound) +
                             ", beyond capacity " + std::to_string(capacity));
    std::uint64_t count = 0, result = 0;
    for_primes_up_to(bound, [&](std::uint64_t p) {
        if (++count == k) {
            result = p;
            return false;
        }
        return true;
    });
    if (result == 0)
        throw resource_error("nth_prime: bound estimate fell short (internal)");
    return result;
}

PrimeTable build_sample_table(std::uint64_t start, std::uint64_t step, std::uint64_t count,
                              bool with_pn, std::uint64_t capacity) {
    if (start < 2 || step < 1 || count < 1)
        throw std::domain_error("build_sample_table: requires start >= 2, step >= 1, count >= 1");
    const std::uint64_t n_max = start + step * (count - 1);
    std::uint64_t limit = n_max;
    if (with_pn) limit = std::max(limit, nth_prime_upper_bound(n_max));
    if (limit > capacity)
        throw resource_error("build_sample_table: needs sieving to " + std::to_string(limit) +
                             ", beyond capacity " + std::to_string(capacity));

    std::vector<PrimeRow> rows(count);
    for (std::uint64_t i = 0; i < count; ++i) rows[i].n = start + i * step;

    std::size_t value_idx = 0; // next row whose pi(n) is pending
    std::size_t rank_idx = 0;  // next row whose p_n is pending
    std::uint64_t pi = 0;
    for_primes_up_to(limit, [&](std::uint64_t p) {
        while (value_idx < rows.size() && rows[value_idx].n < p)
            rows[value_idx++].pi_n = pi;
        ++pi;
        if (with_pn) {
            while (rank_idx < rows.size() && rows[rank_idx].n == pi)
                rows[rank_idx++].p_n = p;
        }
        const bool values_done = value_idx >= rows.size();
        const bool ranks_done = !with_pn || rank_idx >= rows.size();
        return !(values_done && ranks_done);
    });
    while (value_idx < rows.size() && rows[value_idx].n <= limit)
        rows[value_idx++].pi_n = pi;

    for (const auto& r : rows) {
        if (!r.pi_n)
            throw resource_error("build_sample_table: pi(n) not reached for n=" +
                                 std::to_string(r.n));
        if (with_pn && !r.p_n)
            throw resource_error("build_sample_table: p_n not reached for rank " +
                                 std::to_string(r.n));
    }

    PrimeTable t;
    t.rows = std::move(rows);
    t.source = TableSource::sieved;
    std::ostringstream os;
    os << "sieved start=" << start << " step=" << step << " count=" << count
       << " with_pn=" << (with_pn ? 1 : 0);
    t.origin = os.str();
    t.validate();
    return t;
}

void PrimeTable::validate() const {
    const PrimeRow* prev = nullptr;
    for (const auto& r : rows) {
        if (prev) {
            if (r.n <= prev->n)
                throw std::invalid_argument("prime table: n not strictly increasing at n=" +
                                            std::to_string(r.n));
            if (r.pi_n && prev->pi_n && *r.pi_n < *prev->pi_n)
                throw std::invalid_argument("prime table: pi_n decreasing at n=" +
                                            std::to_string(r.n));
            if (r.p_n && prev->p_n && *r.p_n <= *prev->p_n)
                throw std::invalid_argument("prime table: p_n not strictly increasing at n=" +
                                            std::to_string(r.n));
        }
        prev = &r;
    }
}

namespace {
std::uint64_t parse_u64_field(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + tok + "'", line_no);
    }
}
} // namespace

PrimeTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table file '" + path + "'", 0);

    PrimeTable t;
    t.source = TableSource::loaded;
    t.origin = path;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        PrimeRow row;
        if (toks.size() == 2) {
            row.n = parse_u64_field(toks[0], line_no);
            row.p_n = parse_u64_field(toks[1], line_no);
        } else if (toks.size() == 3) {
            row.n = parse_u64_field(toks[0], line_no);
            if (toks[1] != "-") row.pi_n = parse_u64_field(toks[1], line_no);
            if (toks[2] != "-") row.p_n = parse_u64_field(toks[2], line_no);
        } else {
            throw parse_error("expected 2 or 3 fields, got " + std::to_string(toks.size()),
                              line_no);
        }
        t.rows.push_back(row);
    }
    t.validate();
    return t;
}

void write_table(const std::string& path, const PrimeTable& table) {
    std::ofstream out(path);
    if (!out) throw resource_error("cannot write table file '" + path + "'");
    out << "# " << (table.source == TableSource::sieved ? "sieved" : "loaded");
    if (!table.origin.empty()) out << " | " << table.origin;
    out << "\n# columns: n pi_n p_n ('-' = absent); two columns mean 'k p_k'\n";
    for (const auto& r : table.rows) {
        if (!r.pi_n && r.p_n) {
            out << r.n << " " << *r.p_n << "\n";
        } else {
            out << r.n << " " << (r.pi_n ? std::to_string(*r.pi_n) : "-") << " "
                << (r.p_n ? std::to_string(*r.p_n) : "-") << "\n";
        }
    }
}

} // namespace primew
