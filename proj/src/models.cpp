#include "primew/models.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "primew/errors.hpp"
#include "primew/lambert.hpp"

namespace primew {

namespace detail {
const std::vector<int>& g_large_exponents();
extern const char* g_large_s;
extern const char* g_large_a;
extern const char* g_large_b;
const std::vector<int>& g_small_exponents();
extern const char* g_small_s;
extern const char* g_small_a;
extern const char* g_small_b;
const std::vector<int>& pi_inverse_exponents();
extern const char* pi_inverse_s;
extern const char* pi_inverse_a;
extern const char* pi_inverse_b;
extern const char* f_pola[9];
extern const char* f_polb[9];
} // namespace detail

namespace {
constexpr int kConstDigits = 40;

CorrectionModel make_builtin(const std::string& name, const char* a, const char* b, const char* s,
                             const std::vector<int>& tab, long slice_width, const BigInt& valid_lo) {
    CorrectionModel m;
    m.name = name;
    m.curve = LogCurve{HPReal(a, kConstDigits), HPReal(b, kConstDigits)};
    SliceCorrection sc;
    sc.s = HPReal(s, kConstDigits);
    sc.exponents = tab;
    sc.slice_width = BigInt(slice_width);
    sc.range_max = BigInt(static_cast<long>(tab.size())) * sc.slice_width - 1;
    m.slices = std::move(sc);
    m.valid_lo = valid_lo;
    m.valid_hi = m.slices->range_max;
    return m;
}
} // namespace

std::size_t SliceCorrection::index_for(const BigInt& n) const {
    if (n < 1 || n > range_max)
        throw std::out_of_range("slice index: n=" + to_string(n) + " outside [1, " +
                                to_string(range_max) + "]");
    BigInt lk = n / slice_width + 1;
    return lk.get_ui();
}

HPReal PolyCorrection::eval(const BigInt& n, int prec) const {
    const HPReal nr(n, prec);
    const HPReal z = log10(nr);
    auto horner = [&](const std::vector<HPReal>& cs) {
        HPReal r(0LL, prec);
        for (const auto& c : cs) r = r * z + c.with_precision(prec);
        return r;
    };
    return horner(pola) + horner(polb) * log(nr);
}

const CorrectionModel& builtin_g_large() {
    static const CorrectionModel m =
        make_builtin("g_large", detail::g_large_a, detail::g_large_b, detail::g_large_s,
                     detail::g_large_exponents(), 10000000000000L, BigInt(8));
    return m;
}

const CorrectionModel& builtin_g_small() {
    static const CorrectionModel m =
        make_builtin("g_small", detail::g_small_a, detail::g_small_b, detail::g_small_s,
                     detail::g_small_exponents(), 10000L, BigInt(1));
    return m;
}

const CorrectionModel& builtin_pi_inverse() {
    static const CorrectionModel m =
        make_builtin("pi_inverse", detail::pi_inverse_a, detail::pi_inverse_b,
                     detail::pi_inverse_s, detail::pi_inverse_exponents(), 1000000000000000L,
                     BigInt(100));
    return m;
}

const PolyCorrection& builtin_f_poly() {
    static const PolyCorrection p = [] {
        PolyCorrection q;
        for (const char* c : detail::f_pola) q.pola.emplace_back(c, kConstDigits);
        for (const char* c : detail::f_polb) q.polb.emplace_back(c, kConstDigits);
        return q;
    }();
    return p;
}

std::uint64_t table_checksum(const std::vector<int>& exponents) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : exponents) {
        std::string s = std::to_string(v);
        s.push_back(',');
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

HPReal corrected_pn(const BigInt& n, const BigInt& pi_n, const CorrectionModel& model, int prec) {
    if (n < model.valid_lo || n > model.valid_hi)
        throw std::out_of_range("corrected_pn: n=" + to_string(n) + " outside model '" +
                                model.name + "' range [" + to_string(model.valid_lo) + ", " +
                                to_string(model.valid_hi) + "]");
    const int work = prec + 10;
    const HPReal nr(n, work);
    const HPReal w = lambert_w(WBranch::minus_one, -HPReal::e(work) / nr, work);
    HPReal est = (nr * w).abs() * model.curve.eval_ln(log(nr)).with_precision(work);
    if (model.slices)
        est = est * pow_si(model.slices->s.with_precision(work), model.slices->exponent_for(n));
    return (est - HPReal(pi_n, work)).with_precision(prec);
}

HPReal f_poly_pn(const BigInt& n, const BigInt& pi_n, int prec) {
    static const BigInt lo = pow10(16), hi = pow10(24);
    if (n < lo || n > hi)
        throw std::out_of_range("f_poly_pn: n outside [10^16, 10^24]");
    const int work = prec + 10;
    const HPReal nr(n, work);
    const HPReal w = lambert_w(WBranch::minus_one, -HPReal::e(work) / nr, work);
    const HPReal cn = builtin_f_poly().eval(n, work);
    return (-(cn * nr * w) - HPReal(pi_n, work)).with_precision(prec);
}

BigInt g_small_pn(const BigInt& n) {
    const CorrectionModel& m = builtin_g_small();
    if (n < m.valid_lo || n > m.valid_hi)
        throw std::out_of_range("g_small_pn: n outside [1, " + to_string(m.valid_hi) + "]");
    if (n < 8)
        throw std::domain_error("g_small_pn: n < 8 is below the W_{-1} domain");
    const int work = 42;
    const HPReal nr(n, work);
    const HPReal a = (nr * lambert_w(WBranch::minus_one, -HPReal::e(work) / nr, work)).abs();
    const HPReal ss = m.curve.eval_ln(log(nr)).with_precision(work) *
                      pow_si(m.slices->s.with_precision(work), m.slices->exponent_for(n));
    const HPReal w0 = lambert_w(WBranch::principal, nr, work);
    return (a - ss * (nr / w0)).round_half_away();
}

HPReal invert_pi(const BigInt& k, int prec) {
    const CorrectionModel& m = builtin_pi_inverse();
    if (k < m.valid_lo || k > m.valid_hi)
        throw std::out_of_range("invert_pi: k outside [" + to_string(m.valid_lo) + ", " +
                                to_string(m.valid_hi) + "]");
    const int work = prec + 10;
    const int exponent = m.slices->exponent_for(k);
    const HPReal kr(k, work);
    const HPReal spow = pow_si(m.slices->s.with_precision(work), exponent);

    auto f = [&](const HPReal& n) {
        const HPReal a = (n * lambert_w(WBranch::minus_one, -HPReal::e(work) / n, work)).abs();
        const HPReal ss = m.curve.eval_ln(log(n)).with_precision(work) * spow;
        return a - ss * (n / lambert_w(WBranch::principal, n, work)) - kr;
    };

    HPReal hi = kr * 2L / log(kr);
    HPReal lo = hi / 8L;
    if (lo < HPReal(8LL, work)) lo = HPReal(8LL, work); // W_{-1} needs n >= e^2
    if (f(lo).sign() > 0 || f(hi).sign() < 0)
        throw bracket_error("invert_pi: no sign change in [H/8, H] for k=" + to_string(k));
    // plain bisection; f is monotone increasing in n
    const HPReal tol = hi * HPReal("1e" + std::to_string(-(prec + 5)), work);
    while (hi - lo > tol) {
        HPReal mid = (lo + hi) / 2L;
        if (f(mid).sign() < 0)
            lo = mid;
        else
            hi = mid;
    }
    return ((lo + hi) / 2L).with_precision(prec);
}

CorrectionModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open model file '" + path + "'", 0);
    std::string header;
    if (!std::getline(in, header))
        throw parse_error("empty model file", 1);

    std::istringstream hs(header);
    std::string tag, name;
    hs >> tag >> name;
    if (tag != "model" || name.empty())
        throw parse_error("model header must start with 'model <name>'", 1);

    std::string s_str, a_str, b_str, width_str, rmax_str;
    std::string field;
    while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw parse_error("malformed header field '" + field + "'", 1);
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "s") s_str = val;
        else if (key == "slice_width") width_str = val;
        else if (key == "range_max") rmax_str = val;
        else if (key == "a") a_str = val;
        else if (key == "b") b_str = val;
        else throw parse_error("unknown header field '" + key + "'", 1);
    }
    if (s_str.empty() || a_str.empty() || b_str.empty() || width_str.empty() || rmax_str.empty())
        throw parse_error("model header missing required fields", 1);

    CorrectionModel m;
    m.name = name;
    try {
        m.curve = LogCurve{HPReal(a_str, kConstDigits), HPReal(b_str, kConstDigits)};
        SliceCorrection sc;
        sc.s = HPReal(s_str, kConstDigits);
        sc.slice_width = parse_bigint(width_str);
        sc.range_max = parse_bigint(rmax_str);
        m.slices = std::move(sc);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 1);
    }

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                m.slices->exponents.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("bad exponent '" + tok + "'", line_no);
            }
        }
    }
    if (m.slices->exponents.empty())
        throw parse_error("model has no exponents", line_no);
    const BigInt implied =
        BigInt(static_cast<long>(m.slices->exponents.size())) * m.slices->slice_width - 1;
    if (implied < m.slices->range_max)
        throw parse_error("range_max " + to_string(m.slices->range_max) + " exceeds table span " +
                          to_string(implied), 1);
    m.valid_lo = 1;
    m.valid_hi = m.slices->range_max;
    return m;
}

void write_model(const std::string& path, const CorrectionModel& model) {
    std::ofstream out(path);
    if (!out)
        throw resource_error("cannot write model file '" + path + "'");
    const SliceCorrection* sc = model.slices ? &*model.slices : nullptr;
    // 50 significant digits: enough to reparse the 40-digit fields bit-exactly
    out << "model " << model.name;
    out << " s=" << (sc ? sc->s.str(50) : "1");
    out << " slice_width=" << (sc ? to_string(sc->slice_width) : "1");
    out << " range_max=" << (sc ? to_string(sc->range_max) : to_string(model.valid_hi));
    out << " a=" << model.curve.a.str(50) << " b=" << model.curve.b.str(50) << "\n";
    if (sc) {
        for (std::size_t i = 0; i < sc->exponents.size(); ++i)
            out << sc->exponents[i] << ((i + 1) % 20 == 0 ? "\n" : " ");
        if (sc->exponents.size() % 20 != 0) out << "\n";
    }
}

} // namespace primew
