#include <doctest.h>

#include <algorithm>
#include <random>

#include "primew/errors.hpp"
#include "primew/estimators.hpp"
#include "primew/fitting.hpp"
#include "primew/lambert.hpp"

using namespace primew;

TEST_CASE("solve_correction_point agrees with the closed form") {
    // value-table row 1: the factor sits between 0.9 and 1
    HPReal x = solve_correction_point(pow10(14), BigInt("3475385758524527"),
                                      BigInt("3204941750802"));
    CHECK(x > HPReal("0.9", 32));
    CHECK(x < HPReal(1LL, 32));

    // closed-form oracle at 10^6
    const BigInt n = pow10(6), p(15485863), pi(78498);
    HPReal solved = solve_correction_point(n, p, pi);
    HPReal closed = HPReal(p - pi, 42) / base_w_pn(n, 42);
    CHECK((solved - closed).abs() / closed < HPReal("1e-25", 42));
}

TEST_CASE("solve_correction_point brackets and domains") {
    // p - pi far above A(n): root escapes [0.8, 1.1]
    CHECK_THROWS_AS(solve_correction_point(pow10(6), BigInt(99999999), BigInt(10)),
                    bracket_error);
    CHECK_THROWS_AS(solve_correction_point(BigInt(7), BigInt(17), BigInt(4)), std::domain_error);
    CHECK_THROWS_AS(solve_correction_point(pow10(6), BigInt(78498), BigInt(15485863)),
                    std::domain_error);
}

TEST_CASE("lls_fit recovers an exact line") {
    std::vector<std::pair<BigInt, HPReal>> pts;
    const HPReal a0("0.97", 40), b0("1e-6", 40);
    for (int k = 1; k <= 12; ++k) {
        const BigInt n = pow10(k);
        pts.emplace_back(n, a0 + b0 * log(HPReal(n, 40)));
    }
    const FitResult r = lls_fit(pts);
    CHECK((r.a - a0).abs() < HPReal("1e-30", 40));
    CHECK((r.b - b0).abs() < HPReal("1e-34", 40));
    CHECK((r.r2 - HPReal(1LL, 40)).abs() < HPReal("1e-25", 40));
    CHECK(r.point_count == 12);
}

TEST_CASE("two points interpolate with r2 = 1") {
    std::vector<std::pair<BigInt, HPReal>> pts = {
        {BigInt(10), HPReal("1.25", 32)},
        {BigInt(1000), HPReal("0.75", 32)},
    };
    const FitResult r = lls_fit(pts);
    CHECK((r.r2 - HPReal(1LL, 32)).abs() < HPReal("1e-25", 32));
    // the line passes through both points
    for (const auto& [n, y] : pts)
        CHECK((r.a + r.b * log(HPReal(n, 42)) - y).abs() < HPReal("1e-28", 42));
}

TEST_CASE("lls_fit is invariant under point reordering") {
    std::mt19937_64 rng(7);
    std::vector<std::pair<BigInt, HPReal>> pts;
    for (int i = 0; i < 60; ++i) {
        const BigInt n = BigInt(10) + i * 97;
        const double noise = std::uniform_real_distribution<double>(-1e-9, 1e-9)(rng);
        pts.emplace_back(n, HPReal(1LL, 40) + HPReal(std::to_string(noise), 40));
    }
    const FitResult r1 = lls_fit(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    const FitResult r2 = lls_fit(pts);
    CHECK(r1.a == r2.a);
    CHECK(r1.b == r2.b);
    CHECK(r1.r2 == r2.r2);
}

TEST_CASE("noisy line recovery with fixed seed") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> noise(-1e-9, 1e-9);
    const HPReal a0(1LL, 40), b0("-1e-7", 40);
    std::vector<std::pair<BigInt, HPReal>> pts;
    for (int i = 0; i < 1000; ++i) {
        const BigInt n = pow10(3) + BigInt(i) * 1000000; // spread over [1e3, 1e9]
        HPReal y = a0 + b0 * log(HPReal(n, 40)) + HPReal(std::to_string(noise(rng)), 40);
        pts.emplace_back(n, y);
    }
    const FitResult r = lls_fit(pts);
    CHECK((r.a - a0).abs() < HPReal("1e-8", 40));
    CHECK((r.b - b0).abs() < HPReal("1e-8", 40));
    CHECK(r.r2 > HPReal("0.99", 40));

    // independent noise degrades r2
    std::vector<std::pair<BigInt, HPReal>> clean;
    for (const auto& [n, y] : pts) clean.emplace_back(n, a0 + b0 * log(HPReal(n, 40)));
    CHECK(lls_fit(clean).r2 >= r.r2);
}

TEST_CASE("lls_fit degenerate inputs") {
    std::vector<std::pair<BigInt, HPReal>> one = {{BigInt(10), HPReal(1LL, 32)}};
    CHECK_THROWS_AS(lls_fit(one), std::domain_error);
    std::vector<std::pair<BigInt, HPReal>> same = {{BigInt(10), HPReal(1LL, 32)},
                                                   {BigInt(10), HPReal(2LL, 32)}};
    CHECK_THROWS_AS(lls_fit(same), std::domain_error);
    std::vector<std::pair<BigInt, HPReal>> low = {{BigInt(1), HPReal(1LL, 32)},
                                                  {BigInt(10), HPReal(2LL, 32)}};
    CHECK_THROWS_AS(lls_fit(low), std::domain_error);
}

namespace {

// synthetic table rows n, pi_n arbitrary, p_n = round(A(n) c(n) s^k0 - pi_n)
PrimeTable synthetic_table(const LogCurve& curve, const HPReal& s, long k0) {
    PrimeTable t;
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t n = 100000 + static_cast<std::uint64_t>(i) * 7919;
        const BigInt nb(static_cast<unsigned long>(n));
        const std::uint64_t pi_n = n / 12 + 1;
        const HPReal est = base_w_pn(nb, 42) * curve.eval_ln(log(HPReal(nb, 42))) *
                           pow_si(s.with_precision(42), k0);
        const BigInt p = (est - HPReal(static_cast<long long>(pi_n), 42)).round_half_away();
        PrimeRow row;
        row.n = n;
        row.pi_n = pi_n;
        row.p_n = static_cast<std::uint64_t>(p.get_ui());
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

TEST_CASE("slice_tune: optimal curve keeps all exponents at zero") {
    const LogCurve curve{HPReal("0.98", 40), HPReal("1e-7", 40)};
    const HPReal s("0.9", 40); // one step of s is far beyond rounding noise
    const PrimeTable t = synthetic_table(curve, s, 0);
    const SliceTuneResult r = slice_tune(t, curve, s, BigInt(100000), 50);
    for (const auto& e : r.entries)
        if (!e.empty) CHECK(e.k == 0);
}

TEST_CASE("slice_tune recovers a uniform s^50 scaling") {
    const LogCurve curve{HPReal("0.98", 40), HPReal("1e-7", 40)};
    const HPReal s("0.999", 40);
    const PrimeTable t = synthetic_table(curve, s, 50);
    const SliceTuneResult r = slice_tune(t, curve, s, BigInt(100000), 200);
    for (const auto& e : r.entries)
        if (!e.empty) CHECK(e.k == 50);
}

TEST_CASE("slice_tune never worsens the per-slice objective") {
    const LogCurve curve{HPReal("0.99", 40), HPReal("1e-7", 40)};
    const HPReal s("0.9999999999", 40);
    PrimeTable t = synthetic_table(curve, s, 0);
    // perturb truths so tuning has something to chase
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        t.rows[i].p_n = *t.rows[i].p_n + (i % 3 == 0 ? 500 : 0);
    const SliceTuneResult r = slice_tune(t, curve, s, BigInt(100000), 1000000);
    for (const auto& e : r.entries) {
        if (e.empty) continue;
        CHECK(e.mean_gap_after <= e.mean_gap_before);
    }
    // deterministic across thread counts
    const SliceTuneResult r4 = slice_tune(t, curve, s, BigInt(100000), 1000000,
                                          TuneMetric::mean_abs, 4);
    REQUIRE(r4.entries.size() == r.entries.size());
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(r4.entries[i].k == r.entries[i].k);
        CHECK(r4.entries[i].mean_gap_after == r.entries[i].mean_gap_after);
    }
}

TEST_CASE("slice_tune flags empty slices with exponent zero") {
    const LogCurve curve{HPReal("0.98", 40), HPReal(0LL, 40)};
    const HPReal s("0.999", 40);
    const PrimeTable t = synthetic_table(curve, s, 0);
    // width so small that gaps appear between sampled n values
    const SliceTuneResult r = slice_tune(t, curve, s, BigInt(1000), 10);
    bool saw_empty = false;
    for (const auto& e : r.entries)
        if (e.empty) {
            saw_empty = true;
            CHECK(e.k == 0);
        }
    CHECK(saw_empty);
}

TEST_CASE("evaluate_gaps: estimator matching the truth closely") {
    const LogCurve unit{HPReal(1LL, 40), HPReal(0LL, 40)};
    PrimeTable t = synthetic_table(unit, HPReal("0.9", 40), 0);
    // rows were built as round(base_w_pn - pi), so gaps are pure rounding
    CorrectionModel flat;
    flat.name = "flat";
    flat.curve = unit;
    flat.valid_lo = 8;
    flat.valid_hi = pow10(12);
    const GapStats st = evaluate_gaps(EstimatorId::plouffe_g, &flat, t);
    CHECK(st.count == t.rows.size());
    CHECK(st.mean_gap < HPReal(1LL, 32));
    CHECK(st.min_gap <= st.mean_gap);
    CHECK(st.mean_gap <= st.max_gap);
}

TEST_CASE("evaluate_gaps propagates estimator domain errors with the offending n") {
    PrimeTable t;
    PrimeRow r;
    r.n = 100; // far below plouffe_f's domain
    r.pi_n = 25;
    r.p_n = 541;
    t.rows.push_back(r);
    CHECK_THROWS_WITH_AS(evaluate_gaps(EstimatorId::plouffe_f, nullptr, t),
                         doctest::Contains("n=100"), std::domain_error);
}

TEST_CASE("gram-inverted beats the bare W estimator at desk scale") {
    const PrimeTable t = build_sample_table(10000, 5000, 50, true);
    const GapStats gram = evaluate_gaps(EstimatorId::gram_inverse_pn, nullptr, t, 32, 4);
    const GapStats base = evaluate_gaps(EstimatorId::base_w_pn, nullptr, t, 32, 4);
    CHECK(gram.mean_gap < base.mean_gap);
}

TEST_CASE("evaluate_gaps is deterministic across thread counts") {
    const LogCurve curve{HPReal("0.98", 40), HPReal("1e-7", 40)};
    const PrimeTable t = synthetic_table(curve, HPReal("0.999", 40), 3);
    const GapStats a = evaluate_gaps(EstimatorId::base_w_pn, nullptr, t, 32, 1);
    const GapStats b = evaluate_gaps(EstimatorId::base_w_pn, nullptr, t, 32, 8);
    CHECK(a.mean_gap == b.mean_gap);
    CHECK(a.min_gap == b.min_gap);
    CHECK(a.max_gap == b.max_gap);
}
