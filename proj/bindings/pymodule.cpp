#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "primew/errors.hpp"
#include "primew/estimators.hpp"
#include "primew/fitting.hpp"
#include "primew/geo.hpp"
#include "primew/lambert.hpp"
#include "primew/models.hpp"
#include "primew/primes.hpp"
#include "primew/special.hpp"

namespace py = pybind11;
using namespace primew;

namespace {

// python ints are unbounded; route them through decimal strings
BigInt to_bigint(const py::object& o) {
    return parse_bigint(py::str(o).cast<std::string>());
}

py::int_ from_bigint(const BigInt& v) {
    const std::string s = to_string(v);
    PyObject* o = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(o);
}

py::dict geo_to_dict(const GeoConstant& g) {
    py::dict d;
    d["c"] = g.c.str();
    d["start_n"] = g.start_n;
    d["streak"] = g.streak_len;
    py::list vals;
    for (const auto& v : g.values) vals.append(from_bigint(v));
    d["values"] = vals;
    d["status"] = g.all_deterministic ? "verified" : "probable";
    if (g.interval) {
        d["interval_lo"] = g.interval->first.str();
        d["interval_hi"] = g.interval->second.str();
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lambert-W based estimators of p_n and pi(n): high-precision kernels, "
              "corrected models, sieve ground truth, and geometric prime progressions";

    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ValueError);
    py::register_exception<bracket_error>(m, "BracketError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "TableParseError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def(
        "lambert_w",
        [](const std::string& branch, const std::string& x, int prec) {
            const WBranch b = branch == "minus_one" ? WBranch::minus_one : WBranch::principal;
            return lambert_w(b, HPReal(x, prec), prec).str();
        },
        py::arg("branch"), py::arg("x"), py::arg("prec") = 32,
        "W on branch 'principal' or 'minus_one'; x and the result are decimal strings");

    m.def(
        "lambert_w_series",
        [](const std::string& x, int terms, int prec) {
            return lambert_w_series(HPReal(x, prec), terms).str();
        },
        py::arg("x"), py::arg("terms") = 6, py::arg("prec") = 32);

    m.def(
        "li", [](const std::string& x, int prec) { return li(HPReal(x, prec)).str(); },
        py::arg("x"), py::arg("prec") = 32, "logarithmic integral");

    m.def(
        "zeta", [](int k, int prec) { return zeta_int(k, prec).str(); }, py::arg("k"),
        py::arg("prec") = 32, "zeta at integer k >= 2");

    m.def(
        "dusart_pi",
        [](const py::object& n, int prec) { return dusart_pi(to_bigint(n), prec).str(); },
        py::arg("n"), py::arg("prec") = 32);
    m.def(
        "base_w_pn",
        [](const py::object& n, int prec) { return base_w_pn(to_bigint(n), prec).str(); },
        py::arg("n"), py::arg("prec") = 32);
    m.def(
        "n_over_w",
        [](const py::object& n, int prec) { return n_over_w(to_bigint(n), prec).str(); },
        py::arg("n"), py::arg("prec") = 32);
    m.def(
        "cipolla_pn",
        [](const py::object& n, int terms, int prec) {
            return cipolla_pn(to_bigint(n), terms, prec).str();
        },
        py::arg("n"), py::arg("terms") = 5, py::arg("prec") = 32);
    m.def(
        "gram_pi",
        [](const std::string& x, bool include_unit, int prec) {
            return gram_pi(HPReal(x, prec), include_unit).str();
        },
        py::arg("x"), py::arg("include_unit") = true, py::arg("prec") = 32);
    m.def(
        "gram_inverse",
        [](const py::object& k, int prec) { return gram_inverse(to_bigint(k), prec).str(); },
        py::arg("k"), py::arg("prec") = 32);

    m.def(
        "corrected_pn",
        [](const py::object& n, const py::object& pi_n, std::optional<std::string> model_path,
           int prec) {
            if (model_path) {
                const CorrectionModel mdl = load_model(*model_path);
                return corrected_pn(to_bigint(n), to_bigint(pi_n), mdl, prec).str();
            }
            return corrected_pn(to_bigint(n), to_bigint(pi_n), builtin_g_large(), prec).str();
        },
        py::arg("n"), py::arg("pi_n"), py::arg("model_path") = std::nullopt,
        py::arg("prec") = 32, "slice-corrected p_n estimate (shipped large model by default)");

    m.def(
        "f_poly_pn",
        [](const py::object& n, const py::object& pi_n, int prec) {
            return f_poly_pn(to_bigint(n), to_bigint(pi_n), prec).str();
        },
        py::arg("n"), py::arg("pi_n"), py::arg("prec") = 32,
        "polynomial-corrected p_n estimate for 10^16 <= n <= 10^24");

    m.def(
        "g_small_pn", [](const py::object& n) { return from_bigint(g_small_pn(to_bigint(n))); },
        py::arg("n"), "p_n estimate for n <= 1009999");

    m.def(
        "invert_pi",
        [](const py::object& k, int prec) { return invert_pi(to_bigint(k), prec).str(); },
        py::arg("k"), py::arg("prec") = 32, "pi(k) approximation by model inversion");

    m.def(
        "solve_correction_point",
        [](const py::object& n, const py::object& p_n, const py::object& pi_n, int prec) {
            return solve_correction_point(to_bigint(n), to_bigint(p_n), to_bigint(pi_n), prec)
                .str();
        },
        py::arg("n"), py::arg("p_n"), py::arg("pi_n"), py::arg("prec") = 32);

    m.def(
        "lls_fit",
        [](const std::vector<std::pair<py::object, std::string>>& points) {
            std::vector<std::pair<BigInt, HPReal>> pts;
            pts.reserve(points.size());
            for (const auto& [n, y] : points) pts.emplace_back(to_bigint(n), HPReal(y, 40));
            const FitResult r = lls_fit(pts);
            py::dict d;
            d["a"] = r.a.str();
            d["b"] = r.b.str();
            d["r2"] = r.r2.str();
            d["n_points"] = r.point_count;
            return d;
        },
        py::arg("points"), "least squares of y against ln n; points are (n, y-string) pairs");

    m.def(
        "sieve_pi",
        [](std::uint64_t n, std::uint64_t capacity) { return sieve_pi(n, capacity); },
        py::arg("n"), py::arg("capacity") = kDefaultSieveCapacity);
    m.def(
        "nth_prime",
        [](std::uint64_t k, std::uint64_t capacity) { return nth_prime(k, capacity); },
        py::arg("k"), py::arg("capacity") = kDefaultSieveCapacity);

    m.def(
        "is_prime", [](const py::object& n) { return is_prime(to_bigint(n)); }, py::arg("n"));

    m.def(
        "geo_streak",
        [](const std::string& c, long start_n, long max_n, std::optional<int> digits) {
            int d = digits.value_or(0);
            if (d <= 0) {
                const double lg = std::log10(std::stod(c));
                d = std::max(HPReal::kDefaultDigits,
                             static_cast<int>(std::ceil(max_n * lg)) + 20);
            }
            return geo_to_dict(geo_streak(HPReal(c, d), start_n, max_n));
        },
        py::arg("c"), py::arg("start_n") = 1, py::arg("max_n") = 100,
        py::arg("digits") = std::nullopt,
        "run of consecutive primes among nearest integers of c^n");

    m.def(
        "geo_search",
        [](const std::string& lo, const std::string& hi, long target, std::uint64_t seed,
           long steps_per_digit, double temperature, double cooling, int max_digits,
           int chains) {
            AnnealConfig cfg;
            cfg.rng_seed = seed;
            cfg.steps_per_digit = steps_per_digit;
            cfg.initial_temperature = temperature;
            cfg.cooling_rate = cooling;
            cfg.max_digits = max_digits;
            const SearchResult r = geo_search(HPReal(lo, 40), HPReal(hi, 40), target, cfg, chains);
            py::dict d = geo_to_dict(r.best);
            d["reached_target"] = r.reached_target;
            d["steps"] = r.steps_used;
            return d;
        },
        py::arg("lo"), py::arg("hi"), py::arg("target"), py::arg("seed") = 1,
        py::arg("steps_per_digit") = 250, py::arg("temperature") = 1.0,
        py::arg("cooling") = 0.95, py::arg("max_digits") = 400, py::arg("chains") = 1);

    m.attr("__version__") = "0.1.0";
}
