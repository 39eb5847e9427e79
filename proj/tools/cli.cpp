#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "zetaforms/arith.hpp"
#include "zetaforms/contour.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/parallel.hpp"
#include "zetaforms/report.hpp"
#include "zetaforms/rfunc.hpp"
#include "zetaforms/saddle.hpp"

namespace zetaforms::cli {

namespace {

struct RunConfig {
    long n = 0;
    long A = 68;
    std::optional<long> m;
    std::optional<int> prec;
    std::string format = "json";
    std::string output;
    bool verify = false;
    bool integerize = false;
    bool check_routes = false;
    long nmax = 0;
    long table_nmax = 12;
    long quotient_nmax = -1;
    long N = 1000;
    std::string c = "3/4";
    std::string which = "both";
    double tol = 1e-30;
};

// A report plus whether every check inside it passed.
struct Outcome {
    Json report;
    bool passed = true;
};

PrecisionContext precision(const RunConfig& cfg)
{
    int bits = PrecisionContext::default_prec;
    if (const char* env = std::getenv("ZETAFORMS_PREC"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        require(end != nullptr && *end == '\0' && v > 0 && v < (1L << 20), "ZETAFORMS_PREC must be a positive integer");
        bits = static_cast<int>(v);
    }
    if (cfg.prec) {
        bits = *cfg.prec;
    }
    const PrecisionContext ctx{bits, PrecisionContext::default_guard};
    ctx.validate();
    return ctx;
}

const char* flag(bool b) { return b ? "true" : "false"; }

Outcome cmd_pfrac(const RunConfig& cfg)
{
    const Parameters params{cfg.n, cfg.A};
    params.validate();
    const FactoredRational fr = build_R(params);
    const PartialFractionTable table = partial_fractions(fr, params);
    Outcome out{to_json(table)};
    if (cfg.verify) {
        Json checks = Json::object();
        const auto pts = certifying_points(params);
        bool all = verify_reconstruction(table, fr, pts);
        checks["reconstruction"] = flag(all);
        checks["certifying_points"] = std::to_string(pts.size());
        const bool residue = residue_at_infinity_vanishes(table);
        checks["residue_at_infinity"] = flag(residue);
        all = all && residue;
        if (params.even_even()) {
            const bool even_rows = even_row_sums_vanish(table);
            const bool reflection = reflection_symmetric(table);
            checks["even_row_sums"] = flag(even_rows);
            checks["reflection_symmetry"] = flag(reflection);
            all = all && even_rows && reflection;
        }
        out.report["checks"] = std::move(checks);
        out.passed = all;
    }
    return out;
}

Outcome cmd_forms(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const Parameters params{cfg.n, cfg.A};
    params.validate_even();
    require(!cfg.integerize || cfg.m.has_value(), "--integerize needs an elimination target --m");
    const PartialFractionTable table = partial_fractions(params);
    const LinearForm form = q_coefficients(table);
    Outcome out;
    out.report = Json{{"prec_bits", std::to_string(ctx.prec_bits)}, {"linear_form", to_json(form)}};
    if (cfg.m) {
        const EliminationForm ef = eliminate(form, *cfg.m);
        out.report["elimination"] = to_json(ef);
        out.report["elimination_value"] = real_string(elimination_value(ef, ctx), ctx.prec_bits);
        if (cfg.integerize) {
            out.report["integer_form"] = to_json(integerize(ef, denominators(params.n)));
        }
    }
    if (cfg.check_routes) {
        Json routes = Json::object();
        for (Which w : {Which::plain, Which::hat}) {
            const Real direct = S_direct(params, ctx, w);
            const Real via = S_via_zeta(form, ctx, w);
            const double bits = std::min(agreement_bits(direct, via), static_cast<double>(ctx.prec_bits));
            const bool good = bits >= static_cast<double>(ctx.prec_bits - 16);
            routes[to_string(w)] = Json{{"direct", real_string(direct, ctx.prec_bits)},
                                        {"via_zeta", real_string(via, ctx.prec_bits)},
                                        {"agreement_bits", std::to_string(static_cast<long>(std::floor(bits)))},
                                        {"passed", flag(good)}};
            out.passed = out.passed && good;
        }
        out.report["routes"] = std::move(routes);
    }
    return out;
}

Outcome cmd_asympt(const RunConfig& cfg, const PrecisionContext& ctx)
{
    require(cfg.A >= 16, "asympt: A must be at least 16");
    const AsymptoticModel model = build_model(cfg.A, ctx);
    Outcome out{asymptotic_report(model, ctx)};
    if (cfg.nmax > 0) {
        require(cfg.nmax >= 2, "asympt: --nmax must be at least 2");
        Json pred = Json::array();
        for (long n = 2; n <= cfg.nmax; n += 2) {
            pred.push_back(Json{{"n", std::to_string(n)},
                                {"S", complex_json(predict_S(model, n, Which::plain), ctx.prec_bits)},
                                {"S_hat", complex_json(predict_S(model, n, Which::hat), ctx.prec_bits)}});
        }
        out.report["predictions"] = std::move(pred);
        Json sel = Json::array();
        for (long n : sigma_selector(model, cfg.nmax)) {
            sel.push_back(std::to_string(n));
        }
        out.report["sigma_selector"] = std::move(sel);
    }
    return out;
}

Outcome cmd_contour(const RunConfig& cfg, const PrecisionContext& ctx)
{
    const Parameters params{cfg.n, cfg.A};
    params.validate();
    ContourSpec spec;
    try {
        spec.c = Rational::parse(cfg.c);
    } catch (const std::exception&) {
        throw PreconditionError("--c must be a rational number such as 3/4");
    }
    spec.rel_tol = cfg.tol;
    std::vector<Which> which;
    if (cfg.which == "plain" || cfg.which == "both") {
        which.push_back(Which::plain);
    }
    if (cfg.which == "hat" || cfg.which == "both") {
        which.push_back(Which::hat);
    }
    Outcome out;
    out.report = Json::array();
    for (Which w : which) {
        const ContourReport r = contour_verify(params, spec, ctx, w);
        Json rec = to_json(r, ctx.prec_bits);
        // Allowed: requested tolerance, or the series' own precision if coarser.
        const double series_eps = std::ldexp(1.0, -(r.series_prec_bits - 8));
        const Real allowed = abs(r.series_value) * Real(std::max(spec.rel_tol * 8.0, series_eps), ctx.working_bits());
        const bool good = r.abs_diff <= allowed;
        rec["passed"] = flag(good);
        out.passed = out.passed && good;
        out.report.push_back(std::move(rec));
    }
    return out;
}

Outcome cmd_certify(const RunConfig& cfg)
{
    require(cfg.nmax >= 0, "certify: --nmax must be non-negative");
    Parameters{0, cfg.A}.validate_even();
    std::vector<long> ns;
    for (long n = 0; n <= cfg.nmax; n += 2) {
        ns.push_back(n);
    }
    std::vector<Json> rows(ns.size());
    std::vector<char> good(ns.size(), 1);
    parallel_for(ns.size(), [&](std::size_t i) {
        const long n = ns[i];
        const Parameters params{n, cfg.A};
        const PartialFractionTable table = partial_fractions(params);
        const LinearForm form = q_coefficients(table);
        const DenominatorData denoms = denominators(n);
        Json row{{"n", std::to_string(n)}};
        const bool lf = linear_form_integral(form, denoms);
        row["linear_form_integral"] = flag(lf);
        bool ok = lf;
        if (n <= cfg.table_nmax) {
            const bool tab = table_integral(table, denoms);
            row["table_integral"] = flag(tab);
            ok = ok && tab;
        }
        rows[i] = std::move(row);
        good[i] = ok ? 1 : 0;
    });
    Outcome out;
    out.report = Json{{"A", std::to_string(cfg.A)}, {"nmax", std::to_string(cfg.nmax)}, {"forms", Json::array()}};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        out.report["forms"].push_back(std::move(rows[i]));
        out.passed = out.passed && good[i] != 0;
    }
    const long qmax = cfg.quotient_nmax >= 0 ? cfg.quotient_nmax : cfg.nmax;
    std::vector<char> qgood(static_cast<std::size_t>(qmax), 1);
    parallel_for(qgood.size(), [&](std::size_t i) { qgood[i] = factorial_quotient_check(static_cast<long>(i) + 1) ? 1 : 0; });
    Json failures = Json::array();
    for (std::size_t i = 0; i < qgood.size(); ++i) {
        if (qgood[i] == 0) {
            failures.push_back(std::to_string(i + 1));
        }
    }
    out.report["factorial_quotient"] = Json{{"nmax", std::to_string(qmax)}, {"failures", failures}};
    out.passed = out.passed && failures.empty();
    return out;
}

Outcome cmd_delta(const RunConfig& cfg, const PrecisionContext& ctx)
{
    require(cfg.N >= 1, "delta: --N must be positive");
    const Real d = delta_integral(ctx);
    const auto emp = delta_empirical(cfg.N);
    Json samples = Json::array();
    for (const auto& [n, v] : emp) {
        if (n == cfg.N || (n % 100 == 0 && n >= 100)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", v);
            samples.push_back(Json{{"n", std::to_string(n)}, {"log_phi_over_n", buf}});
        }
    }
    return {Json{{"prec_bits", std::to_string(ctx.prec_bits)}, {"delta", real_string(d, ctx.prec_bits)}, {"empirical", samples}}};
}

Outcome cmd_phi(const RunConfig& cfg)
{
    require(cfg.n >= 1, "phi: --n must be positive");
    return {to_json(denominators(cfg.n))};
}

std::string render(const Json& j, const std::string& format)
{
    if (format == "csv") {
        return to_csv(j);
    }
    if (format == "text") {
        return to_text(j);
    }
    return j.dump(2) + "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Linear forms in odd zeta values: exact construction and numerical checks", "zetaforms"};
    app.require_subcommand(1, 1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
    };
    auto with_prec = [&](CLI::App* sub) {
        sub->add_option("--prec", cfg.prec, "Precision in bits (default 256, or $ZETAFORMS_PREC)");
    };

    CLI::App* pfrac = app.add_subcommand("pfrac", "Partial-fraction table of the rational function");
    pfrac->add_option("--n", cfg.n, "n")->required();
    pfrac->add_option("--A", cfg.A, "A (default 68)");
    pfrac->add_flag("--verify", cfg.verify, "Certify the decomposition exactly");
    common(pfrac);

    CLI::App* forms = app.add_subcommand("forms", "Linear form, elimination and integer form");
    forms->add_option("--n", cfg.n, "n")->required();
    forms->add_option("--A", cfg.A, "A (default 68)");
    forms->add_option("--m", cfg.m, "Odd zeta index to eliminate");
    forms->add_flag("--integerize", cfg.integerize, "Scale the elimination form to integers");
    forms->add_flag("--check-routes", cfg.check_routes, "Compare direct summation with the zeta combination");
    with_prec(forms);
    common(forms);

    CLI::App* asympt = app.add_subcommand("asympt", "Saddle points, kappa, delta and the final exponent");
    asympt->add_option("--A", cfg.A, "A (default 68)");
    asympt->add_option("--nmax", cfg.nmax, "Also predict S_n for even n up to this bound");
    with_prec(asympt);
    common(asympt);

    CLI::App* contour = app.add_subcommand("contour", "Contour-integral cross-check of the series");
    contour->add_option("--n", cfg.n, "n")->required();
    contour->add_option("--A", cfg.A, "A (default 68)");
    contour->add_option("--c", cfg.c, "Abscissa of the line (default 3/4)");
    contour->add_option("--which", cfg.which, "plain, hat or both")->check(CLI::IsMember({"plain", "hat", "both"}));
    contour->add_option("--tol", cfg.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-300, 0.5));
    with_prec(contour);
    common(contour);

    CLI::App* certify = app.add_subcommand("certify", "Batch integrality certificates for even n");
    certify->add_option("--nmax", cfg.nmax, "Largest n")->required();
    certify->add_option("--A", cfg.A, "A (default 68)");
    certify->add_option("--table-nmax", cfg.table_nmax, "Largest n for the per-coefficient table check (default 12)");
    certify->add_option("--quotient-nmax", cfg.quotient_nmax, "Largest n for the factorial-quotient check (default nmax)");
    common(certify);

    CLI::App* delta = app.add_subcommand("delta", "The constant delta and log(Phi_n)/n");
    delta->add_option("--N", cfg.N, "Largest n for the empirical values (default 1000)");
    with_prec(delta);
    common(delta);

    CLI::App* phi = app.add_subcommand("phi", "d_n and Phi_n with its factorization");
    phi->add_option("--n", cfg.n, "n")->required();
    common(phi);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        Outcome outcome;
        if (pfrac->parsed()) {
            outcome = cmd_pfrac(cfg);
        } else if (forms->parsed()) {
            outcome = cmd_forms(cfg, precision(cfg));
        } else if (asympt->parsed()) {
            outcome = cmd_asympt(cfg, precision(cfg));
        } else if (contour->parsed()) {
            outcome = cmd_contour(cfg, precision(cfg));
        } else if (certify->parsed()) {
            outcome = cmd_certify(cfg);
        } else if (delta->parsed()) {
            outcome = cmd_delta(cfg, precision(cfg));
        } else {
            outcome = cmd_phi(cfg);
        }
        const std::string text = render(outcome.report, cfg.format);
        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << cfg.output << " for writing\n";
                return usage;
            }
            file << text;
        }
        if (!outcome.passed) {
            err << "verification failed\n";
            return verification_failed;
        }
        return ok;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return usage;
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << "\n";
        return no_convergence;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_failed;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return verification_failed;
    }
}

} // namespace zetaforms::cli
