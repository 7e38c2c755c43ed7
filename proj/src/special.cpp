#include "primew/special.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace primew {

// li(x) = gamma + ln|ln x| + sum_{k>=1} (ln x)^k / (k * k!),
// the classical Ei(ln x) series. For x > 1 all terms are positive; for
// 0 < x < 1 the series alternates, so guard digits proportional to |ln x|
// absorb the cancellation.
HPReal li(const HPReal& x) {
    if (x.is_negative())
        throw std::domain_error("li: requires x >= 0");
    if (x.is_zero()) return HPReal(0LL, x.precision());

    const int prec = x.precision();
    const double xd = x.to_double();
    const double lxd = std::log(xd);
    int guard = 12;
    if (lxd < 0) guard += static_cast<int>(-lxd * 0.4342944819032518) + 4;
    const int work = prec + guard;

    const HPReal xw = x.with_precision(work);
    const HPReal u = log(xw);
    if (u.is_zero())
        throw std::domain_error("li: divergent at x = 1");

    HPReal sum = HPReal::euler_gamma(work) + log(u.abs());
    HPReal term(1LL, work); // u^k / k!
    const HPReal eps = HPReal("1e" + std::to_string(-work), work);
    for (long k = 1; k < 100000; ++k) {
        term = term * u / k;
        sum += term / k;
        if (term.abs() < eps * (sum.abs() + HPReal(1LL, work)) && k > 4) break;
    }
    return sum.with_precision(prec);
}

namespace {
std::shared_mutex g_zeta_mutex;
std::map<std::pair<int, int>, HPReal> g_zeta_cache;
} // namespace

HPReal zeta_int(int k, int prec) {
    if (k < 2)
        throw std::domain_error("zeta_int: requires k >= 2");
    if (prec < HPReal::kMinDigits) prec = HPReal::kMinDigits;
    const auto key = std::make_pair(k, prec);
    {
        std::shared_lock lock(g_zeta_mutex);
        auto it = g_zeta_cache.find(key);
        if (it != g_zeta_cache.end()) return it->second;
    }
    HPReal r(prec + 5);
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    HPReal rounded = r.with_precision(prec);
    {
        std::unique_lock lock(g_zeta_mutex);
        g_zeta_cache.emplace(key, rounded); // idempotent on races
    }
    return rounded;
}

} // namespace primew
