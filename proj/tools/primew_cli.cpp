#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "primew/errors.hpp"
#include "primew/estimators.hpp"
#include "primew/fitting.hpp"
#include "primew/geo.hpp"
#include "primew/lambert.hpp"
#include "primew/models.hpp"
#include "primew/primes.hpp"
#include "primew/special.hpp"

namespace {

using namespace primew;

struct RowPrinter {
    std::string format = "tsv";

    void print(const std::vector<std::pair<std::string, std::string>>& fields) const {
        if (format == "json-lines") {
            std::cout << "{";
            bool first = true;
            for (const auto& [k, v] : fields) {
                if (!first) std::cout << ",";
                first = false;
                const bool numeric = !v.empty() && v.find_first_not_of("-0123456789.e+") ==
                                                       std::string::npos;
                std::cout << "\"" << k << "\":";
                if (numeric)
                    std::cout << v;
                else
                    std::cout << "\"" << v << "\"";
            }
            std::cout << "}\n";
            return;
        }
        const char sep = format == "csv" ? ',' : '\t';
        bool first = true;
        for (const auto& [k, v] : fields) {
            (void)k;
            if (!first) std::cout << sep;
            first = false;
            std::cout << v;
        }
        std::cout << "\n";
    }
};

BigInt resolve_pi_flag(const std::string& pi_arg, const BigInt& n) {
    const std::string prefix = "@table:";
    if (pi_arg.rfind(prefix, 0) == 0) {
        const PrimeTable t = load_table(pi_arg.substr(prefix.size()));
        for (const auto& r : t.rows)
            if (BigInt(static_cast<unsigned long>(r.n)) == n && r.pi_n)
                return BigInt(static_cast<unsigned long>(*r.pi_n));
        throw std::domain_error("no pi(n) row for n=" + to_string(n) + " in " +
                                pi_arg.substr(prefix.size()));
    }
    return parse_bigint(pi_arg);
}

std::string geo_status(const GeoConstant& g) {
    return g.all_deterministic ? "verified" : "probable";
}

void print_geo(const GeoConstant& g, bool with_values) {
    std::cout << "c=" << g.c.str() << " start_n=" << g.start_n << " streak=" << g.streak_len
              << " status=" << geo_status(g) << "\n";
    if (g.interval)
        std::cout << "interval=[" << g.interval->first.str() << ", " << g.interval->second.str()
                  << "]\n";
    if (with_values && !g.values.empty()) {
        std::cout << "values=";
        for (std::size_t i = 0; i < g.values.size(); ++i)
            std::cout << (i ? "," : "") << to_string(g.values[i]);
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Lambert-W based estimators of the n-th prime and the prime counting function"};
    app.require_subcommand(1);
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    app.add_option("--threads", threads, "worker threads for table-scale operations");

    RowPrinter printer;

    // ---- estimate ----
    auto* est_cmd = app.add_subcommand("estimate", "evaluate one estimator at n");
    std::string est_n, est_name = "base_w_pn", est_pi, est_model_path;
    int est_prec = HPReal::kDefaultDigits, est_terms = 5;
    est_cmd->add_option("n", est_n, "argument (rank for p_n estimators, value for pi ones)")
        ->required();
    est_cmd->add_option("--est", est_name, "estimator id")->required();
    est_cmd->add_option("--prec", est_prec, "significant digits (default 32)");
    est_cmd->add_option("--pi", est_pi, "pi(n) as integer or @table:<path>");
    est_cmd->add_option("--terms", est_terms, "term count for cipolla_pn");
    est_cmd->add_option("--model", est_model_path, "model file overriding the shipped model");
    est_cmd->add_option("--format", printer.format, "tsv|csv|json-lines");

    // ---- invert ----
    auto* inv_cmd = app.add_subcommand("invert", "approximate pi(k) by model inversion");
    std::string inv_k;
    int inv_prec = HPReal::kDefaultDigits;
    inv_cmd->add_option("k", inv_k, "value whose prime count is wanted")->required();
    inv_cmd->add_option("--prec", inv_prec, "significant digits");
    inv_cmd->add_option("--format", printer.format, "tsv|csv|json-lines");

    // ---- sieve ----
    auto* sieve_cmd = app.add_subcommand("sieve", "exact ground truth via segmented sieve");
    auto* sieve_pi_cmd = sieve_cmd->add_subcommand("pi", "count primes <= n");
    std::uint64_t sv_n = 0, sv_cap = kDefaultSieveCapacity;
    sieve_pi_cmd->add_option("n", sv_n)->required();
    sieve_pi_cmd->add_option("--limit", sv_cap, "sieve capacity bound");
    auto* sieve_nth_cmd = sieve_cmd->add_subcommand("nth", "k-th prime");
    std::uint64_t sv_k = 0;
    sieve_nth_cmd->add_option("k", sv_k)->required();
    sieve_nth_cmd->add_option("--limit", sv_cap, "sieve capacity bound");
    auto* sieve_sample_cmd = sieve_cmd->add_subcommand("sample", "build a sample table");
    std::uint64_t sm_start = 0, sm_step = 0, sm_count = 0;
    bool sm_pn = false;
    std::string sm_out;
    sieve_sample_cmd->add_option("start", sm_start)->required();
    sieve_sample_cmd->add_option("step", sm_step)->required();
    sieve_sample_cmd->add_option("count", sm_count)->required();
    sieve_sample_cmd->add_flag("--pn", sm_pn, "also record p_n (n read as a rank)");
    sieve_sample_cmd->add_option("--out", sm_out, "write the table to this path");
    sieve_sample_cmd->add_option("--limit", sv_cap, "sieve capacity bound");

    // ---- compare ----
    auto* cmp_cmd = app.add_subcommand("compare", "gap statistics of estimators vs a table");
    std::string cmp_table, cmp_model_path;
    std::vector<std::string> cmp_ests;
    int cmp_prec = HPReal::kDefaultDigits;
    cmp_cmd->add_option("table", cmp_table, "ground-truth table path")->required();
    cmp_cmd->add_option("--est", cmp_ests, "estimator ids")->required()->delimiter(',');
    cmp_cmd->add_option("--model", cmp_model_path, "model file for plouffe_g");
    cmp_cmd->add_option("--prec", cmp_prec, "significant digits");
    cmp_cmd->add_option("--format", printer.format, "tsv|csv|json-lines");

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "fit the correction curve and tune slices");
    std::string fit_table, fit_out, fit_name = "fitted", fit_s = "0.9999999999", fit_metric = "mean";
    std::string fit_width = "1000000";
    long fit_kbound = 1000000;
    fit_cmd->add_option("table", fit_table, "table with pi_n and p_n columns")->required();
    fit_cmd->add_option("--slice-width", fit_width, "slice width for exponent tuning");
    fit_cmd->add_option("--s", fit_s, "slice base s (0 < s < 1)");
    fit_cmd->add_option("--k-bound", fit_kbound, "exponent search bound");
    fit_cmd->add_option("--metric", fit_metric, "mean|max");
    fit_cmd->add_option("--out", fit_out, "write fitted model here");
    fit_cmd->add_option("--name", fit_name, "model name");

    // ---- tune ----
    auto* tune_cmd = app.add_subcommand("tune", "retune slice exponents for an existing model");
    std::string tn_table, tn_model, tn_out, tn_s, tn_metric = "mean", tn_width;
    long tn_kbound = 1000000;
    tune_cmd->add_option("table", tn_table)->required();
    tune_cmd->add_option("--model", tn_model, "model file providing the curve")->required();
    tune_cmd->add_option("--s", tn_s, "override slice base");
    tune_cmd->add_option("--slice-width", tn_width, "override slice width");
    tune_cmd->add_option("--k-bound", tn_kbound);
    tune_cmd->add_option("--metric", tn_metric, "mean|max");
    tune_cmd->add_option("--out", tn_out, "write retuned model here");

    // ---- geo ----
    auto* geo_cmd = app.add_subcommand("geo", "nearest-integer geometric prime progressions");
    auto* geo_verify = geo_cmd->add_subcommand("verify", "streak of {c^n} primes");
    std::string gv_c;
    long gv_start = 1, gv_max = 100;
    geo_verify->add_option("c", gv_c, "constant as a decimal string")->required();
    geo_verify->add_option("--max", gv_max, "largest exponent to test")->required();
    geo_verify->add_option("--start", gv_start, "first exponent (default 1)");
    auto* geo_search_cmd = geo_cmd->add_subcommand("search", "search [lo, hi] for a streak");
    std::string gs_lo, gs_hi;
    long gs_target = 1;
    AnnealConfig gs_cfg;
    int gs_chains = 1;
    geo_search_cmd->add_option("lo", gs_lo)->required();
    geo_search_cmd->add_option("hi", gs_hi)->required();
    geo_search_cmd->add_option("--target", gs_target)->required();
    geo_search_cmd->add_option("--seed", gs_cfg.rng_seed);
    geo_search_cmd->add_option("--steps-per-digit", gs_cfg.steps_per_digit);
    geo_search_cmd->add_option("--temp", gs_cfg.initial_temperature);
    geo_search_cmd->add_option("--cooling", gs_cfg.cooling_rate);
    geo_search_cmd->add_option("--max-digits", gs_cfg.max_digits);
    geo_search_cmd->add_option("--chains", gs_chains, "independent seeded chains");

    CLI11_PARSE(app, argc, argv);

    if (est_cmd->parsed()) {
        const BigInt n = parse_bigint(est_n);
        HPReal value(est_prec);
        if (est_name == "g_small") {
            value = HPReal(g_small_pn(n), est_prec);
        } else {
            const EstimatorId id = estimator_from_string(est_name);
            if (needs_pi_input(id) && est_pi.empty())
                throw std::domain_error("estimator " + est_name + " requires --pi");
            switch (id) {
                case EstimatorId::dusart_pi: value = dusart_pi(n, est_prec); break;
                case EstimatorId::li_pi: value = li(HPReal(n, est_prec)); break;
                case EstimatorId::n_over_w: value = n_over_w(n, est_prec); break;
                case EstimatorId::gram_pi: value = gram_pi(HPReal(n, est_prec)); break;
                case EstimatorId::gram_inverse_pn: value = gram_inverse(n, est_prec); break;
                case EstimatorId::cipolla_pn: value = cipolla_pn(n, est_terms, est_prec); break;
                case EstimatorId::base_w_pn: value = base_w_pn(n, est_prec); break;
                case EstimatorId::plouffe_g: {
                    const BigInt pi_n = resolve_pi_flag(est_pi, n);
                    if (!est_model_path.empty()) {
                        const CorrectionModel m = load_model(est_model_path);
                        value = corrected_pn(n, pi_n, m, est_prec);
                    } else {
                        value = corrected_pn(n, pi_n, builtin_g_large(), est_prec);
                    }
                    break;
                }
                case EstimatorId::plouffe_f:
                    value = f_poly_pn(n, resolve_pi_flag(est_pi, n), est_prec);
                    break;
            }
        }
        printer.print({{"n", est_n}, {"estimator", est_name}, {"value", value.str(est_prec)}});
        if (est_name == "dusart_pi" && !dusart_in_proven_range(n))
            std::cerr << "note: the n/(ln n - 1) bound is proven only for n > 5393\n";
        return 0;
    }

    if (inv_cmd->parsed()) {
        const BigInt k = parse_bigint(inv_k);
        const HPReal v = invert_pi(k, inv_prec);
        printer.print({{"k", inv_k}, {"pi_estimate", v.str(inv_prec)}});
        return 0;
    }

    if (sieve_pi_cmd->parsed()) {
        std::cout << sieve_pi(sv_n, sv_cap) << "\n";
        return 0;
    }
    if (sieve_nth_cmd->parsed()) {
        std::cout << nth_prime(sv_k, sv_cap) << "\n";
        return 0;
    }
    if (sieve_sample_cmd->parsed()) {
        const PrimeTable t = build_sample_table(sm_start, sm_step, sm_count, sm_pn, sv_cap);
        if (!sm_out.empty()) {
            write_table(sm_out, t);
            std::cout << "wrote " << t.rows.size() << " rows to " << sm_out << "\n";
        } else {
            for (const auto& r : t.rows)
                std::cout << r.n << " " << (r.pi_n ? std::to_string(*r.pi_n) : "-") << " "
                          << (r.p_n ? std::to_string(*r.p_n) : "-") << "\n";
        }
        return 0;
    }

    if (cmp_cmd->parsed()) {
        const PrimeTable t = load_table(cmp_table);
        std::optional<CorrectionModel> model;
        if (!cmp_model_path.empty()) model = load_model(cmp_model_path);
        for (const auto& name : cmp_ests) {
            const EstimatorId id = estimator_from_string(name);
            const GapStats st =
                evaluate_gaps(id, model ? &*model : nullptr, t, cmp_prec, threads);
            printer.print({{"estimator", name},
                           {"min_gap", st.min_gap.str(20)},
                           {"max_gap", st.max_gap.str(20)},
                           {"mean_gap", st.mean_gap.str(20)},
                           {"count", std::to_string(st.count)}});
        }
        return 0;
    }

    if (fit_cmd->parsed() || tune_cmd->parsed()) {
        const bool fitting_curve = fit_cmd->parsed();
        const PrimeTable t = load_table(fitting_curve ? fit_table : tn_table);

        LogCurve curve;
        HPReal s(40);
        BigInt width;
        std::string out_path, model_name;
        long k_bound;
        std::string metric_name;
        FitResult fr;

        if (fitting_curve) {
            // correction factors y = (p_n + pi_n) / A(n), the encoding the
            // corrected estimator consumes
            std::vector<std::pair<BigInt, HPReal>> pts;
            for (const auto& r : t.rows) {
                if (!r.pi_n || !r.p_n) continue;
                const BigInt n(static_cast<unsigned long>(r.n));
                const HPReal a = base_w_pn(n, 40);
                pts.emplace_back(n, HPReal(static_cast<long long>(*r.p_n + *r.pi_n), 40) / a);
            }
            if (pts.size() < 2)
                throw std::domain_error("fit: table needs at least 2 rows with pi_n and p_n");
            fr = lls_fit(pts);
            curve = LogCurve{fr.a.with_precision(40), fr.b.with_precision(40)};
            s = HPReal(fit_s, 40);
            width = parse_bigint(fit_width);
            out_path = fit_out;
            model_name = fit_name;
            k_bound = fit_kbound;
            metric_name = fit_metric;
        } else {
            const CorrectionModel m = load_model(tn_model);
            curve = m.curve;
            s = tn_s.empty() ? (m.slices ? m.slices->s : HPReal("0.9999999999", 40))
                             : HPReal(tn_s, 40);
            width = !tn_width.empty() ? parse_bigint(tn_width)
                                      : (m.slices ? m.slices->slice_width : BigInt(1000000));
            out_path = tn_out;
            model_name = m.name + "_retuned";
            k_bound = tn_kbound;
            metric_name = tn_metric;
        }

        const TuneMetric metric =
            metric_name == "max" ? TuneMetric::max_abs : TuneMetric::mean_abs;
        const SliceTuneResult tuned = slice_tune(t, curve, s, width, k_bound, metric, threads);

        if (fitting_curve)
            std::cout << fr.a.str() << " " << fr.b.str() << " " << fr.r2.str(10) << " "
                      << fr.point_count << "\n";
        for (const auto& e : tuned.entries) {
            if (e.empty) continue;
            std::cout << e.slice_index << " " << e.k << " " << e.mean_gap_before.str(12) << " "
                      << e.mean_gap_after.str(12) << "\n";
        }

        if (!out_path.empty()) {
            CorrectionModel out;
            out.name = model_name;
            out.curve = curve;
            out.slices = tuned.correction;
            out.valid_lo = 8;
            out.valid_hi = tuned.correction.range_max;
            write_model(out_path, out);
        }
        return 0;
    }

    if (geo_verify->parsed()) {
        const int digits =
            std::max(HPReal::kDefaultDigits,
                     static_cast<int>(std::ceil(gv_max * std::log10(std::stod(gv_c)))) + 20);
        const GeoConstant g = geo_streak(HPReal(gv_c, digits), gv_start, gv_max);
        print_geo(g, true);
        return 0;
    }

    if (geo_search_cmd->parsed()) {
        const SearchResult r =
            geo_search(HPReal(gs_lo, 40), HPReal(gs_hi, 40), gs_target, gs_cfg, gs_chains);
        print_geo(r.best, true);
        std::cout << "steps=" << r.steps_used
                  << " reached_target=" << (r.reached_target ? "yes" : "no") << "\n";
        if (!r.reached_target) return 3;
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const primew::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const primew::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
