#include "primew/geo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "primew/errors.hpp"

namespace primew {

namespace {

// Largest bound for which the first 12 prime witnesses decide primality.
const BigInt& deterministic_mr_bound() {
    static const BigInt b("3317044064679887385961981");
    return b;
}

constexpr int kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(const BigInt& n, const BigInt& n_minus_1, const BigInt& d,
                          unsigned long r, unsigned long a) {
    BigInt x;
    BigInt base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false; // a certifies n composite
}

} // namespace

PrimalityKind classify_prime(const BigInt& m) {
    if (m < 2) return PrimalityKind::composite;
    for (int p : kWitnesses) {
        if (m == p) return PrimalityKind::prime;
        if (m % p == 0) return PrimalityKind::composite;
    }
    if (m <= deterministic_mr_bound()) {
        BigInt n_minus_1 = m - 1;
        BigInt d = n_minus_1;
        unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
        for (int a : kWitnesses)
            if (!miller_rabin_witness(m, n_minus_1, d, r, a)) return PrimalityKind::composite;
        return PrimalityKind::prime;
    }
    // BPSW-class test plus Miller-Rabin rounds
    const int r = mpz_probab_prime_p(m.get_mpz_t(), 32);
    if (r == 0) return PrimalityKind::composite;
    if (r == 2) return PrimalityKind::prime;
    return PrimalityKind::probable_prime;
}

bool is_prime(const BigInt& m) {
    return classify_prime(m) != PrimalityKind::composite;
}

BigInt nearest_int(const HPReal& x) {
    const HPReal u = x.ulp();
    if (u >= HPReal("0.25", 16))
        throw precision_error("nearest_int: precision too low to resolve integers near " +
                              x.str(8));
    const BigInt r = x.round_half_away();
    const HPReal dist = (x - HPReal(r, x.precision() + 4)).abs();
    const HPReal half("0.5", x.precision() + 4);
    if (dist != half && (dist - half).abs() < u * 4L)
        throw precision_error("nearest_int: value within rounding ambiguity of a half-integer");
    return r;
}

GeoConstant geo_streak(const HPReal& c, long start_n, long max_n) {
    if (start_n < 1 || max_n < start_n)
        throw std::domain_error("geo_streak: requires 1 <= start_n <= max_n");
    if (c <= HPReal(1LL, 16))
        throw std::domain_error("geo_streak: requires c > 1");
    const double log10c = std::log10(c.to_double());
    const int needed = static_cast<int>(std::ceil(max_n * log10c)) + 10;
    if (c.precision() < needed)
        throw precision_error("geo_streak: c carries " + std::to_string(c.precision()) +
                              " digits but {c^n} up to n=" + std::to_string(max_n) + " needs " +
                              std::to_string(needed));

    const int work = needed + 10;
    const HPReal cw = c.with_precision(work);
    const HPReal half("0.5", work);

    GeoConstant out;
    out.c = c;
    out.start_n = start_n;
    HPReal ival_lo(0LL, work), ival_hi(0LL, work);

    for (long n = start_n; n <= max_n; ++n) {
        const HPReal p = pow_si(cw, n);
        const BigInt v = nearest_int(p);
        const PrimalityKind kind = classify_prime(v);
        if (kind == PrimalityKind::composite) break;
        out.values.push_back(v);
        if (kind == PrimalityKind::probable_prime) out.all_deterministic = false;
        const HPReal vr(v, work);
        const HPReal lo = root_ui(vr - half, static_cast<unsigned long>(n));
        const HPReal hi = root_ui(vr + half, static_cast<unsigned long>(n));
        if (out.streak_len == 0) {
            ival_lo = lo;
            ival_hi = hi;
        } else {
            if (lo > ival_lo) ival_lo = lo;
            if (hi < ival_hi) ival_hi = hi;
        }
        ++out.streak_len;
    }
    if (out.streak_len > 0) out.interval = std::make_pair(ival_lo, ival_hi);
    return out;
}

namespace {

struct Frame {
    HPReal lo, hi;         // interval before this level's choice
    std::vector<BigInt> tried; // integer candidates already rejected here
};

SearchResult search_chain(const HPReal& lo0, const HPReal& hi0, long target,
                          const AnnealConfig& cfg, std::uint64_t seed) {
    const double log10hi = std::log10(hi0.to_double());
    const int work = std::max(40, static_cast<int>(std::ceil(target * log10hi)) + 25);
    if (work > cfg.max_digits)
        throw precision_error("geo_search: target needs " + std::to_string(work) +
                              " working digits, above max_digits=" +
                              std::to_string(cfg.max_digits));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const long budget = cfg.steps_per_digit * work;
    const HPReal half("0.5", work);

    HPReal cur_lo = lo0.with_precision(work), cur_hi = hi0.with_precision(work);
    std::vector<Frame> stack;
    std::vector<BigInt> tried;
    double temp = cfg.initial_temperature;

    long best_len = 0;
    HPReal best_lo = cur_lo, best_hi = cur_hi;
    long steps = 0;

    while (steps < budget) {
        const long level = static_cast<long>(stack.size()) + 1;
        const HPReal img_lo = pow_si(cur_lo, level);
        const HPReal img_hi = pow_si(cur_hi, level);
        const BigInt q_lo = img_lo.round_half_away();
        const BigInt q_hi = img_hi.round_half_away();

        // enumerate nearby candidates; huge images are sampled around the
        // midpoint with a temperature-scaled jitter instead
        std::vector<BigInt> cands;
        const BigInt span = q_hi - q_lo;
        if (span <= 4096) {
            for (BigInt q = q_lo; q <= q_hi; ++q) cands.push_back(q);
        } else {
            const HPReal mid = (img_lo + img_hi) / 2L;
            const BigInt center = mid.round_half_away();
            for (int i = 0; i < 512; ++i) {
                const double u = unit(rng) * 2.0 - 1.0;
                BigInt offs(static_cast<long>(u * u * u * 2048 * (1.0 + temp)));
                cands.push_back(center + offs);
            }
        }
        // prefer candidates near the image midpoint, annealing the order
        const HPReal mid = (img_lo + img_hi) / 2L;
        std::vector<std::pair<double, std::size_t>> order(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const double d = ((HPReal(cands[i], work) - mid) / (img_hi - img_lo + 1L)).to_double();
            order[i] = {std::abs(d) + temp * unit(rng), i};
        }
        std::sort(order.begin(), order.end());

        bool advanced = false;
        for (const auto& [score, idx] : order) {
            const BigInt& q = cands[idx];
            if (q < 2) continue;
            if (std::find(tried.begin(), tried.end(), q) != tried.end()) continue;
            ++steps;
            if (!is_prime(q)) {
                tried.push_back(q);
                continue;
            }
            const HPReal qr(q, work);
            HPReal nlo = root_ui(qr - half, static_cast<unsigned long>(level));
            HPReal nhi = root_ui(qr + half, static_cast<unsigned long>(level));
            if (nlo < cur_lo) nlo = cur_lo;
            if (nhi > cur_hi) nhi = cur_hi;
            if (!(nlo < nhi)) {
                tried.push_back(q);
                continue;
            }
            tried.push_back(q);
            stack.push_back(Frame{cur_lo, cur_hi, std::move(tried)});
            tried.clear();
            cur_lo = nlo;
            cur_hi = nhi;
            advanced = true;
            temp *= cfg.cooling_rate;
            break;
        }

        if (advanced) {
            const long len = static_cast<long>(stack.size());
            if (len > best_len) {
                best_len = len;
                best_lo = cur_lo;
                best_hi = cur_hi;
            }
            if (len >= target) break;
            continue;
        }

        // dead end: backtrack one level, occasionally further while hot
        if (stack.empty()) break;
        do {
            Frame f = std::move(stack.back());
            stack.pop_back();
            cur_lo = f.lo;
            cur_hi = f.hi;
            tried = std::move(f.tried);
            temp = std::min(cfg.initial_temperature, temp / cfg.cooling_rate);
        } while (!stack.empty() && unit(rng) < temp * 0.2);
    }

    SearchResult res;
    res.steps_used = steps;
    res.reached_target = best_len >= target;
    if (best_len > 0) {
        const HPReal mid = (best_lo + best_hi) / 2L;
        // the heuristic never vouches for the answer: re-verify the run
        res.best = geo_streak(mid, 1, best_len);
        res.best.interval = std::make_pair(best_lo, best_hi);
    } else {
        res.best.c = (lo0 + hi0) / 2L;
        res.best.streak_len = 0;
    }
    return res;
}

} // namespace

SearchResult geo_search(const HPReal& lo, const HPReal& hi, long target_len,
                        const AnnealConfig& cfg, int chains) {
    if (!(HPReal(1LL, 16) < lo && lo < hi))
        throw std::domain_error("geo_search: requires 1 < lo < hi");
    if (target_len < 1)
        throw std::domain_error("geo_search: requires target_len >= 1");
    if (cfg.cooling_rate <= 0.0 || cfg.cooling_rate >= 1.0)
        throw std::domain_error("geo_search: cooling_rate must be in (0, 1)");
    if (cfg.steps_per_digit < 1)
        throw std::domain_error("geo_search: steps_per_digit must be >= 1");
    if (chains < 1) chains = 1;

    std::vector<std::future<SearchResult>> futs;
    futs.reserve(chains);
    for (int i = 0; i < chains; ++i)
        futs.push_back(std::async(std::launch::async, [&, i] {
            return search_chain(lo, hi, target_len, cfg, cfg.rng_seed + i);
        }));

    SearchResult best;
    bool first = true;
    for (auto& f : futs) {
        SearchResult r = f.get();
        if (first || r.best.streak_len > best.best.streak_len) {
            best = std::move(r);
            first = false;
        }
    }
    return best;
}

} // namespace primew
