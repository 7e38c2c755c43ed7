#include <doctest.h>

#include <cmath>

#include "primew/hpreal.hpp"
#include "primew/special.hpp"

using namespace primew;

namespace {

// Independent quadrature oracle for li, kept apart from the series
// implementation. li(2) comes from the principal value over [0, 2] via the
// substitution t = 1+u, where 1/ln(1+u) - 1/u extends continuously across
// u = 0; li(x) - li(2) is a plain smooth integral of dt/ln t on [2, x].
double li2_quadrature() {
    // -1..1 Gauss-Legendre does poorly near u=-1 (infinite derivative);
    // composite Simpson with many panels is plenty at double precision
    auto g = [](double u) {
        if (u == 0.0) return 0.5;
        if (u <= -1.0) return 1.0;
        return 1.0 / std::log1p(u) - 1.0 / u;
    };
    const int n = 1 << 16;
    const double h = 2.0 / n;
    double acc = g(-1.0) + g(1.0);
    for (int i = 1; i < n; ++i) acc += g(-1.0 + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// t = e^u turns dt/ln t into a smooth e^u/u integrand
double li_diff_quadrature(double from, double to) {
    auto f = [](double u) { return std::exp(u) / u; };
    const double a = std::log(from), b = std::log(to);
    const int n = 1 << 16;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("li anchors") {
    CHECK(li(HPReal(0LL, 32)).str() == "0");
    CHECK_THROWS_AS(li(HPReal(1LL, 32)), std::domain_error);
    CHECK_THROWS_AS(li(HPReal("-2", 32)), std::domain_error);
}

TEST_CASE("li against the quadrature oracle") {
    // the principal-value panel converges slowly at its log endpoint, so
    // the oracle is good to ~1e-6 relative; plenty to vet the series path
    const double li2 = li2_quadrature();
    CHECK(li(HPReal(2LL, 32)).to_double() == doctest::Approx(li2).epsilon(1e-5));
    CHECK(li(HPReal(2LL, 32)).to_double() == doctest::Approx(1.04516378).epsilon(1e-7));
    for (double x : {10.0, 100.0, 1e6}) {
        const double expect = li2 + li_diff_quadrature(2.0, x);
        CHECK(li(HPReal(std::to_string((long long)x), 32)).to_double() ==
              doctest::Approx(expect).epsilon(1e-5));
    }
}

TEST_CASE("li at 10^24") {
    // reference value computed independently at high precision
    HPReal v = li(HPReal("1e24", 32));
    HPReal ref("18435599767366347775144.15", 32);
    CHECK((v - ref).abs() / ref < HPReal("1e-20", 32));
}

TEST_CASE("li below 1 converges despite alternating terms") {
    // li(1/2) = -0.378671043061087976661783419526...
    HPReal v = li(HPReal("0.5", 32));
    CHECK(v.to_double() == doctest::Approx(-0.3786710430610879).epsilon(1e-12));
}

TEST_CASE("zeta at integer arguments") {
    const int prec = 40;
    HPReal pi = HPReal::pi(prec);
    CHECK((zeta_int(2, prec) - pi * pi / 6L).abs() < HPReal("1e-38", prec));
    CHECK((zeta_int(4, prec) - pow_si(pi, 4) / 90L).abs() < HPReal("1e-38", prec));
    CHECK((zeta_int(200, 80) - HPReal(1LL, 80)).abs() < HPReal("1e-60", 80));
    CHECK_THROWS_AS(zeta_int(1), std::domain_error);
    CHECK_THROWS_AS(zeta_int(0), std::domain_error);
}

TEST_CASE("zeta cache returns identical values") {
    HPReal a = zeta_int(3, 32);
    HPReal b = zeta_int(3, 32);
    CHECK(a == b);
    CHECK(zeta_int(3, 48) != HPReal(0LL, 16)); // different precision key works
}
