#include "primew/fitting.hpp"

#include <algorithm>
#include <future>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "primew/errors.hpp"
#include "primew/lambert.hpp"
#include "primew/special.hpp"

namespace primew {

namespace {

HPReal base_w_abs(const BigInt& n, int work) {
    const HPReal nr(n, work);
    return (nr * lambert_w(WBranch::minus_one, -HPReal::e(work) / nr, work)).abs();
}

// fixed-size chunking so results do not depend on the thread count
template <typename Fn>
void parallel_chunks(std::size_t total, int threads, std::size_t chunk, Fn&& fn) {
    if (threads <= 1 || total <= chunk) {
        for (std::size_t lo = 0; lo < total; lo += chunk)
            fn(lo, std::min(lo + chunk, total));
        return;
    }
    std::vector<std::future<void>> futs;
    for (std::size_t lo = 0; lo < total; lo += chunk)
        futs.push_back(std::async(std::launch::async, [&fn, lo, hi = std::min(lo + chunk, total)] {
            fn(lo, hi);
        }));
    for (auto& f : futs) f.get();
}

} // namespace

HPReal solve_correction_point(const BigInt& n, const BigInt& p_n, const BigInt& pi_n, int prec) {
    if (n < 8)
        throw std::domain_error("solve_correction_point: requires n >= 8");
    if (!(p_n > pi_n && pi_n > 0))
        throw std::domain_error("solve_correction_point: requires p_n > pi_n > 0");
    const int work = prec + 10;
    const HPReal a = base_w_abs(n, work);
    const HPReal rhs = HPReal(p_n - pi_n, work);
    const HPReal closed = rhs / a;

    HPReal lo("0.8", work), hi("1.1", work);
    auto f = [&](const HPReal& x) { return a * x - rhs; };
    if (f(lo).sign() > 0 || f(hi).sign() < 0)
        throw bracket_error("solve_correction_point: root outside [0.8, 1.1] for n=" +
                            to_string(n));
    const HPReal tol = HPReal("1e" + std::to_string(-(prec + 6)), work);
    while (hi - lo > tol) {
        HPReal mid = (lo + hi) / 2L;
        if (f(mid).sign() < 0)
            lo = mid;
        else
            hi = mid;
    }
    const HPReal root = (lo + hi) / 2L;
    if ((root - closed).abs() > closed.abs() * HPReal("1e" + std::to_string(-(prec - 5)), work))
        throw std::logic_error("solve_correction_point: bisection and closed form disagree");
    return root.with_precision(prec);
}

FitResult lls_fit(const std::vector<std::pair<BigInt, HPReal>>& points) {
    if (points.size() < 2)
        throw std::domain_error("lls_fit: requires at least 2 points");
    int digits = HPReal::kDefaultDigits;
    for (const auto& [n, y] : points) {
        if (n < 2) throw std::domain_error("lls_fit: requires all n >= 2");
        digits = std::max(digits, y.precision());
    }
    const int work = digits + 10;

    // accumulate in a canonical order so the result is independent of the
    // caller's point ordering, bit for bit
    std::vector<const std::pair<BigInt, HPReal>*> ordered;
    ordered.reserve(points.size());
    for (const auto& pt : points) ordered.push_back(&pt);
    std::sort(ordered.begin(), ordered.end(), [](const auto* l, const auto* r) {
        if (l->first != r->first) return l->first < r->first;
        return l->second < r->second;
    });

    HPReal sx(0LL, work), sy(0LL, work), sxx(0LL, work), sxy(0LL, work), syy(0LL, work);
    bool all_equal = true;
    for (const auto* pt : ordered) {
        const auto& [n, y] = *pt;
        const HPReal x = log(HPReal(n, work));
        if (points[0].first != n) all_equal = false;
        const HPReal yw = y.with_precision(work);
        sx += x;
        sy += yw;
        sxx += x * x;
        sxy += x * yw;
        syy += yw * yw;
    }
    if (all_equal)
        throw std::domain_error("lls_fit: degenerate abscissa (all n equal)");

    const long N = static_cast<long>(points.size());
    const HPReal nn(static_cast<long long>(N), work);
    const HPReal den_x = nn * sxx - sx * sx;
    if (den_x.is_zero())
        throw std::domain_error("lls_fit: degenerate abscissa");
    const HPReal cov = nn * sxy - sx * sy;
    const HPReal b = cov / den_x;
    const HPReal a = (sy - b * sx) / nn;

    const HPReal den_y = nn * syy - sy * sy;
    HPReal r2(1LL, work);
    if (!den_y.is_zero()) {
        r2 = cov * cov / (den_x * den_y);
        if (r2 > HPReal(1LL, work)) r2 = HPReal(1LL, work);
        if (r2.is_negative()) r2 = HPReal(0LL, work);
    }

    FitResult out;
    out.a = a.with_precision(digits);
    out.b = b.with_precision(digits);
    out.r2 = r2.with_precision(digits);
    out.point_count = points.size();
    return out;
}

SliceTuneResult slice_tune(const PrimeTable& table, const LogCurve& curve, const HPReal& s,
                           const BigInt& slice_width, long k_bound, TuneMetric metric,
                           int threads) {
    if (table.rows.empty())
        throw std::domain_error("slice_tune: empty table");
    if (!(s > HPReal(0LL, 16)) || s >= HPReal(1LL, 16))
        throw std::domain_error("slice_tune: requires 0 < s < 1");
    if (slice_width < 1 || k_bound < 1)
        throw std::domain_error("slice_tune: requires slice_width >= 1, k_bound >= 1");

    const int work = 48;
    struct Item {
        HPReal a;      // A(n) * c(n)
        HPReal target; // p_n + pi_n
    };

    // bucket rows carrying both truths into slices
    std::vector<std::pair<std::size_t, const PrimeRow*>> usable;
    std::size_t max_lk = 0;
    for (const auto& r : table.rows) {
        if (!r.pi_n || !r.p_n) continue;
        const BigInt lk_big = BigInt(static_cast<unsigned long>(r.n)) / slice_width + 1;
        const std::size_t lk = static_cast<std::size_t>(lk_big.get_ui());
        usable.emplace_back(lk, &r);
        max_lk = std::max(max_lk, lk);
    }
    if (usable.empty())
        throw std::domain_error("slice_tune: no rows carry both pi_n and p_n");

    std::vector<std::vector<const PrimeRow*>> buckets(max_lk + 1);
    for (const auto& [lk, row] : usable) buckets[lk].push_back(row);

    SliceTuneResult res;
    res.correction.s = s.with_precision(40);
    res.correction.slice_width = slice_width;
    res.correction.exponents.assign(max_lk, 0);
    res.correction.range_max = BigInt(static_cast<long>(max_lk)) * slice_width - 1;
    res.entries.resize(max_lk);

    const HPReal ln_s = log(s.with_precision(work));

    auto tune_slice = [&](std::size_t lk) {
        SliceTuneEntry& e = res.entries[lk - 1];
        e.slice_index = lk;
        const auto& rows = buckets[lk];
        if (rows.empty()) {
            e.empty = true;
            e.k = 0;
            e.mean_gap_before = HPReal(0LL, work);
            e.mean_gap_after = HPReal(0LL, work);
            return;
        }
        std::vector<Item> items;
        items.reserve(rows.size());
        for (const PrimeRow* r : rows) {
            const BigInt n(static_cast<unsigned long>(r->n));
            Item it{base_w_abs(n, work) * curve.eval_ln(log(HPReal(n, work))).with_precision(work),
                    HPReal(static_cast<long long>(*r->p_n + *r->pi_n), work)};
            items.push_back(std::move(it));
        }

        auto objective = [&](long k) {
            const HPReal u = pow_si(s.with_precision(work), k);
            HPReal acc(0LL, work);
            for (const auto& it : items) {
                const HPReal g = (it.a * u - it.target).abs();
                if (metric == TuneMetric::mean_abs)
                    acc += g;
                else if (g > acc)
                    acc = g;
            }
            if (metric == TuneMetric::mean_abs) acc = acc / static_cast<long>(items.size());
            return acc;
        };

        // continuous optimum of the (convex in u = s^k) objective, then a
        // local integer scan; 0 always competes so tuning never loses
        HPReal u_star(1LL, work);
        if (metric == TuneMetric::mean_abs) {
            // weighted median of target/a with weights a
            std::vector<std::pair<HPReal, HPReal>> ratios; // (t/a, a)
            for (const auto& it : items) ratios.emplace_back(it.target / it.a, it.a);
            std::sort(ratios.begin(), ratios.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            HPReal total(0LL, work);
            for (const auto& rw : ratios) total += rw.second;
            HPReal acc(0LL, work);
            for (const auto& rw : ratios) {
                acc += rw.second;
                if (acc * 2L >= total) {
                    u_star = rw.first;
                    break;
                }
            }
        } else {
            // minimax: ternary search over u on the ratio hull
            HPReal ulo = items[0].target / items[0].a, uhi = ulo;
            for (const auto& it : items) {
                const HPReal r = it.target / it.a;
                if (r < ulo) ulo = r;
                if (r > uhi) uhi = r;
            }
            auto cost = [&](const HPReal& u) {
                HPReal m(0LL, work);
                for (const auto& it : items) {
                    const HPReal g = (it.a * u - it.target).abs();
                    if (g > m) m = g;
                }
                return m;
            };
            for (int it = 0; it < 200 && uhi - ulo > ulo.ulp() * 4L; ++it) {
                const HPReal m1 = ulo + (uhi - ulo) / 3L;
                const HPReal m2 = uhi - (uhi - ulo) / 3L;
                if (cost(m1) <= cost(m2))
                    uhi = m2;
                else
                    ulo = m1;
            }
            u_star = (ulo + uhi) / 2L;
        }

        long k0 = 0;
        if (u_star > HPReal(0LL, work))
            k0 = std::lround((log(u_star) / ln_s).to_double());
        k0 = std::clamp(k0, -k_bound, k_bound);

        std::vector<long> cand{0, k0 - 2, k0 - 1, k0, k0 + 1, k0 + 2, -k_bound, k_bound};
        for (auto& k : cand) k = std::clamp(k, -k_bound, k_bound);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

        long best_k = 0;
        HPReal best_obj = objective(0);
        for (long k : cand) {
            if (k == 0) continue;
            const HPReal obj = objective(k);
            const bool better =
                obj < best_obj ||
                (obj == best_obj &&
                 (std::abs(k) < std::abs(best_k) || (std::abs(k) == std::abs(best_k) && k < best_k)));
            if (better) {
                best_k = k;
                best_obj = obj;
            }
        }

        auto mean_gap = [&](long k) {
            const HPReal u = pow_si(s.with_precision(work), k);
            HPReal acc(0LL, work);
            for (const auto& it : items) acc += (it.a * u - it.target).abs();
            return acc / static_cast<long>(items.size());
        };
        e.k = static_cast<int>(best_k);
        e.mean_gap_before = mean_gap(0);
        e.mean_gap_after = mean_gap(best_k);
        res.correction.exponents[lk - 1] = e.k;
    };

    std::vector<std::size_t> slice_ids(max_lk);
    std::iota(slice_ids.begin(), slice_ids.end(), 1);
    parallel_chunks(slice_ids.size(), threads, 1, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) tune_slice(slice_ids[i]);
    });
    return res;
}

GapStats evaluate_gaps(EstimatorId estimator, const CorrectionModel* model,
                       const PrimeTable& table, int prec, int threads) {
    if (table.rows.empty())
        throw std::domain_error("evaluate_gaps: empty table");
    const bool wants_pn = predicts_nth_prime(estimator);
    const CorrectionModel& g_model = model ? *model : builtin_g_large();

    auto estimate_row = [&](const PrimeRow& r) -> HPReal {
        const BigInt n(static_cast<unsigned long>(r.n));
        switch (estimator) {
            case EstimatorId::dusart_pi: return dusart_pi(n, prec);
            case EstimatorId::li_pi: return li(HPReal(n, prec));
            case EstimatorId::n_over_w: return n_over_w(n, prec);
            case EstimatorId::gram_pi: return gram_pi(HPReal(n, prec));
            case EstimatorId::gram_inverse_pn: return gram_inverse(n, prec);
            case EstimatorId::cipolla_pn: return cipolla_pn(n, 5, prec);
            case EstimatorId::base_w_pn: return base_w_pn(n, prec);
            case EstimatorId::plouffe_g: {
                if (!r.pi_n)
                    throw std::domain_error("plouffe_g needs pi_n in the table at n=" +
                                            std::to_string(r.n));
                return corrected_pn(n, BigInt(static_cast<unsigned long>(*r.pi_n)), g_model, prec);
            }
            case EstimatorId::plouffe_f: {
                if (!r.pi_n)
                    throw std::domain_error("plouffe_f needs pi_n in the table at n=" +
                                            std::to_string(r.n));
                return f_poly_pn(n, BigInt(static_cast<unsigned long>(*r.pi_n)), prec);
            }
        }
        throw std::logic_error("unreachable estimator id");
    };

    const std::size_t total = table.rows.size();
    std::vector<HPReal> gaps(total, HPReal(0LL, prec));
    std::vector<std::string> row_errors(total);
    parallel_chunks(total, threads, 64, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const PrimeRow& r = table.rows[i];
            try {
                const auto truth = wants_pn ? r.p_n : r.pi_n;
                if (!truth)
                    throw std::domain_error(std::string("row lacks ") +
                                            (wants_pn ? "p_n" : "pi_n"));
                gaps[i] = (estimate_row(r) - HPReal(static_cast<long long>(*truth), prec)).abs();
            } catch (const std::exception& e) {
                row_errors[i] = std::string(e.what()) + " [n=" + std::to_string(r.n) + "]";
            }
        }
    });
    for (const auto& err : row_errors)
        if (!err.empty()) throw std::domain_error("evaluate_gaps: " + err);

    GapStats st;
    st.count = total;
    st.min_gap = gaps[0];
    st.max_gap = gaps[0];
    HPReal sum(0LL, prec + 10);
    for (const auto& g : gaps) {
        if (g < st.min_gap) st.min_gap = g;
        if (g > st.max_gap) st.max_gap = g;
        sum += g;
    }
    st.mean_gap = (sum / static_cast<long>(total)).with_precision(prec);
    return st;
}

} // namespace primew
