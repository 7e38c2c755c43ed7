#include "primew/estimators.hpp"

#include <stdexcept>
#include <utility>

#include "primew/errors.hpp"
#include "primew/lambert.hpp"
#include "primew/special.hpp"

namespace primew {

namespace {
constexpr std::pair<EstimatorId, const char*> kEstimatorNames[] = {
    {EstimatorId::dusart_pi, "dusart_pi"},
    {EstimatorId::li_pi, "li_pi"},
    {EstimatorId::n_over_w, "n_over_w"},
    {EstimatorId::gram_pi, "gram_pi"},
    {EstimatorId::gram_inverse_pn, "gram_inverse_pn"},
    {EstimatorId::cipolla_pn, "cipolla_pn"},
    {EstimatorId::base_w_pn, "base_w_pn"},
    {EstimatorId::plouffe_g, "plouffe_g"},
    {EstimatorId::plouffe_f, "plouffe_f"},
};
} // namespace

EstimatorId estimator_from_string(const std::string& name) {
    for (const auto& [id, s] : kEstimatorNames)
        if (name == s) return id;
    throw std::invalid_argument("unknown estimator '" + name + "'");
}

std::string to_string(EstimatorId id) {
    for (const auto& [eid, s] : kEstimatorNames)
        if (eid == id) return s;
    return "?";
}

bool predicts_nth_prime(EstimatorId id) {
    switch (id) {
        case EstimatorId::gram_inverse_pn:
        case EstimatorId::cipolla_pn:
        case EstimatorId::base_w_pn:
        case EstimatorId::plouffe_g:
        case EstimatorId::plouffe_f:
            return true;
        default:
            return false;
    }
}

bool needs_pi_input(EstimatorId id) {
    return id == EstimatorId::plouffe_g || id == EstimatorId::plouffe_f;
}

HPReal dusart_pi(const BigInt& n, int prec) {
    if (n < 2)
        throw std::domain_error("dusart_pi: requires n >= 2");
    const int work = prec + 8;
    const HPReal nr(n, work);
    return (nr / (log(nr) - 1L)).with_precision(prec);
}

bool dusart_in_proven_range(const BigInt& n) {
    return n > 5393;
}

HPReal base_w_pn(const BigInt& n, int prec) {
    if (n < 8)
        throw std::domain_error("base_w_pn: requires n >= 8 (so that -e/n >= -1/e)");
    const int work = prec + 8;
    const HPReal nr(n, work);
    const HPReal w = lambert_w(WBranch::minus_one, -HPReal::e(work) / nr, work);
    return (-(nr * w)).with_precision(prec);
}

HPReal n_over_w(const BigInt& n, int prec) {
    if (n < 2)
        throw std::domain_error("n_over_w: requires n >= 2");
    const int work = prec + 8;
    const HPReal nr(n, work);
    return (nr / lambert_w(WBranch::principal, nr, work)).with_precision(prec);
}

HPReal cipolla_pn(const BigInt& n, int num_terms, int prec) {
    if (n <= 3)
        throw std::domain_error("cipolla_pn: requires n >= 4 (ln ln n > 0)");
    if (num_terms < 1 || num_terms > 5)
        throw std::domain_error("cipolla_pn: num_terms must be in [1, 5]");
    const int work = prec + 8;
    const HPReal nr(n, work);
    const HPReal l = log(nr);
    const HPReal ll = log(l);
    HPReal sum = l;
    if (num_terms >= 2) sum += ll;
    if (num_terms >= 3) sum -= HPReal(1LL, work);
    if (num_terms >= 4) sum += (ll - 2L) / l;
    if (num_terms >= 5)
        sum -= (pow_si(ll, 2) - ll * 6L + 11L) / (pow_si(l, 2) * 2L);
    return (nr * sum).with_precision(prec);
}

HPReal gram_pi(const HPReal& x, bool include_unit) {
    const int prec = x.precision();
    const int work = prec + 10;
    const HPReal xw = x.with_precision(work);
    if (xw < HPReal(1LL, work))
        throw std::domain_error("gram_pi: requires x >= 1");

    const HPReal u = log(xw);
    HPReal sum(include_unit ? 1LL : 0LL, work);
    if (u.is_zero()) return sum.with_precision(prec);

    const HPReal eps = HPReal("1e" + std::to_string(-work), work);
    HPReal m(1LL, work); // u^k / k!
    HPReal prev_term(0LL, work);
    for (long k = 1; k < 100000; ++k) {
        m = m * u / k;
        HPReal term = m / (zeta_int(static_cast<int>(k + 1), work) * k);
        sum += term;
        // terms grow to a peak near k = ln x, then decay superexponentially
        if (k > 2 && term < prev_term && term < eps * sum.abs()) break;
        prev_term = term;
    }
    return sum.with_precision(prec);
}

HPReal gram_inverse(const BigInt& k, int prec) {
    if (k < 1)
        throw std::domain_error("gram_inverse: requires k >= 1");
    const int work = prec + 10;
    const HPReal kr(k, work);
    HPReal lo = kr;
    HPReal hi = kr * 3L * log(kr + 2L);
    auto f = [&](const HPReal& x) { return gram_pi(x.with_precision(work)) - kr; };
    HPReal flo = f(lo), fhi = f(hi);
    if (flo.sign() > 0 || fhi.sign() < 0)
        throw bracket_error("gram_inverse: no sign change in [k, 3k ln(k+2)] for k=" +
                            to_string(k));

    const HPReal tol = hi * HPReal("1e" + std::to_string(-(prec + 10)), work);
    while (hi - lo > tol) {
        HPReal mid = (lo + hi) / 2L;
        HPReal fm = f(mid);
        if (fm.sign() < 0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // one secant polish inside the final bracket
    HPReal denom = fhi - flo;
    HPReal x = denom.is_zero() ? (lo + hi) / 2L : lo - flo * (hi - lo) / denom;
    return x.with_precision(prec);
}

} // namespace primew
