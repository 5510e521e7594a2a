#include "qcv/errors.hpp"
#include "qcv/group_element.hpp"
#include "qcv/parallel.hpp"
#include "qcv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace qcv;

namespace {

constexpr int kMaxN = 6;
constexpr int kMaxDim = 64;
constexpr int kMaxDegree = 32;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string target;
    std::optional<int> n;
    std::string rep;
    std::optional<int> degree;
    std::optional<int> guard;
    double tol = 1e-9;
    std::vector<double> xs;
    std::optional<int> max_n, max_k;
    std::string form = "fg";
    bool dump = false;
    std::string format = "text";
    std::string out;
    bool quick = false;
    bool experimental = false;
    bool no_timing = false;
};

int checked_n(const Config &c, int fallback) {
    const int n = c.n.value_or(fallback);
    if (n < 1 || n > kMaxN) throw UsageError("--n must be in 1.." + std::to_string(kMaxN));
    return n;
}

int checked_degree(const Config &c, int fallback) {
    const int d = c.degree.value_or(fallback);
    if (d < 1 || d > kMaxDegree) throw UsageError("--degree must be in 1.." + std::to_string(kMaxDegree));
    return d;
}

Generators parse_rep(const Config &c, const std::string &spec, int fund_size) {
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        const auto digits = spec.substr(colon + 1);
        if (digits.size() > 4) throw UsageError("--rep: size too large");
    }
    Generators g;
    try {
        g = rep_from_spec(spec, fund_size);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--rep: ") + e.what());
    }
    if (g.dim > kMaxDim) throw UsageError("--rep: dimension above " + std::to_string(kMaxDim));
    if (spec.rfind("trunc:", 0) == 0 && c.target == "mutation" && !c.experimental)
        throw UsageError("--rep trunc:<M> for mutation requires --experimental");
    return g;
}

MutationOptions mutation_options(const Config &c) {
    MutationOptions o;
    if (c.guard) o.guard = *c.guard;
    if (o.guard < 0) throw UsageError("--guard must be non-negative");
    return o;
}

void dump_rep(std::ostream &os, const Generators &g) {
    os << "# " << g.label << "\n";
    for (int r = 0; r < g.rank; ++r) {
        os << "H" << r + 1 << ":\n" << g.H[static_cast<std::size_t>(r)].pretty();
        os << "T+" << r + 1 << ":\n" << g.Tplus[static_cast<std::size_t>(r)].pretty();
        os << "T-" << r + 1 << ":\n" << g.Tminus[static_cast<std::size_t>(r)].pretty();
    }
}

std::vector<CheckFn> defining_checks(const Config &c) {
    std::vector<CheckFn> v;
    const int lo = c.n ? checked_n(c, 1) : 1, hi = c.n ? checked_n(c, 1) : (c.quick ? 2 : 3);
    for (int n = lo; n <= hi; ++n) v.push_back([n] { return verify_defining_equation(n, fundamental_rep(n + 1)); });
    return v;
}

std::vector<CheckFn> control_checks(const Config &c) {
    const int n = checked_n(c, 1);
    return {[n] { return verify_defining_controls(n); }};
}

std::vector<CheckFn> mvfg_checks(const Config &c) {
    std::vector<CheckFn> v;
    const int hi = c.n ? checked_n(c, 1) : (c.quick ? 2 : 3);
    for (int n = c.n ? hi : 1; n <= hi; ++n) {
        v.push_back([n] { return verify_mv_fg_equivalence(n, fundamental_rep(n + 1)); });
        v.push_back([n] { return verify_mvprime_fgprime_equivalence(n, fundamental_rep(n + 1)); });
        v.push_back([n] { return verify_symplectic_leaf(n, fundamental_rep(n + 1)); });
    }
    if (!c.n)
        for (int k = 1; k <= (c.quick ? 3 : 5); ++k)
            v.push_back([k] { return verify_mv_fg_equivalence(1, symmetric_rep_sl2(k)); });
    return v;
}

std::vector<CheckFn> mutation_checks(const Config &c) {
    std::vector<CheckFn> v;
    const auto opt = mutation_options(c);
    if (!c.rep.empty()) {
        if (c.rep.rfind("trunc:", 0) == 0) {
            const auto g = parse_rep(c, c.rep, 2);
            const int m = g.dim;
            v.push_back([m, opt] { return verify_mutation_truncated(m, opt); });
            return v;
        }
        const auto g = parse_rep(c, c.rep, 2);
        if (g.rank != 1) throw UsageError("mutation needs an sl_2 representation");
        v.push_back([g, opt] { return verify_mutation(g, 0, opt); });
        return v;
    }
    for (int k = 1; k <= (c.quick ? 6 : 20); ++k)
        v.push_back([k, opt] { return verify_mutation(symmetric_rep_sl2(k), 0, opt); });
    v.push_back([] { return verify_mutation_extraction(); });
    return v;
}

std::vector<CheckFn> mutation_sln_checks(const Config &c) {
    std::vector<CheckFn> v;
    const int n = checked_n(c, 2);
    const auto opt = mutation_options(c);
    for (int i = 1; i <= num_blocks(n); ++i) v.push_back([n, i, opt] { return verify_mutation_slN(n, i, opt); });
    return v;
}

std::vector<CheckFn> appendix_a_checks(const Config &c) {
    const int d = checked_degree(c, 8);
    return {[d] { return compute_albega(d).report; },
            [d] { return verify_fourth_mv_equation(fundamental_rep(2), d); }};
}

std::vector<CheckFn> qexp_fact_checks(const Config &c) {
    const int d = checked_degree(c, 12);
    return {[d] { return check_qexp_factorization(d); }};
}

std::vector<CheckFn> apow_checks(const Config &c) {
    const int n = c.max_n.value_or(6);
    if (n < 1 || n > kMaxDegree) throw UsageError("--max-n must be in 1.." + std::to_string(kMaxDegree));
    return {[n] { return verify_apow(n); }};
}

std::vector<CheckFn> qexp_forms_checks(const Config &c) {
    int m = c.quick ? 12 : 30;
    if (!c.rep.empty()) {
        if (c.rep.rfind("trunc:", 0) != 0) throw UsageError("qexp-forms needs --rep trunc:<M>");
        m = parse_rep(c, c.rep, 2).dim;
    }
    if (m < 4) throw UsageError("qexp-forms needs M >= 4");
    const int guard = c.guard.value_or(2);
    return {[m, guard] { return verify_qexp_closed_forms(m, guard); }};
}

std::vector<CheckFn> hyper_checks(const Config &c) {
    const int n = c.max_n.value_or(c.quick ? 10 : 25), k = c.max_k.value_or(c.quick ? 5 : 10);
    if (n < 1 || k < 0) throw UsageError("--max-n must be positive and --max-k non-negative");
    auto xs = c.xs.empty() ? std::vector<double>{2.0, 10.0} : c.xs;
    for (double x : xs)
        if (!(std::abs(x) > 1)) throw UsageError("--x values need |x| > 1");
    if (!(c.tol > 0)) throw UsageError("--tol must be positive");
    const double tol = c.tol;
    return {[n, k, xs, tol] { return verify_hypergeometric_q1(n, k, xs, tol); }};
}

std::vector<CheckFn> relation_checks(const Config &c) {
    const bool q = c.quick;
    return {[q] { return verify_representation_relations(q ? 4 : 5, q ? 8 : 20, q ? 12 : 30); }};
}

std::vector<CheckFn> all_checks(const Config &c) {
    if (c.n || !c.rep.empty() || c.degree) throw UsageError("check all takes no --n, --rep or --degree");
    std::vector<CheckFn> v;
    for (auto f : {defining_checks, control_checks, mvfg_checks, mutation_checks, mutation_sln_checks,
                   appendix_a_checks, qexp_fact_checks, apow_checks, qexp_forms_checks, hyper_checks,
                   relation_checks}) {
        auto part = f(c);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

void write_output(const Config &c, const std::string &text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
}

int run_check(const Config &c) {
    std::vector<CheckFn> checks;
    if (c.target == "defining") checks = defining_checks(c);
    else if (c.target == "controls") checks = control_checks(c);
    else if (c.target == "mv-fg") checks = mvfg_checks(c);
    else if (c.target == "mutation") checks = mutation_checks(c);
    else if (c.target == "mutation-sln") checks = mutation_sln_checks(c);
    else if (c.target == "appendix-a") checks = appendix_a_checks(c);
    else if (c.target == "qexp-fact") checks = qexp_fact_checks(c);
    else if (c.target == "apow") checks = apow_checks(c);
    else if (c.target == "qexp-forms") checks = qexp_forms_checks(c);
    else if (c.target == "hyper") checks = hyper_checks(c);
    else if (c.target == "relations") checks = relation_checks(c);
    else checks = all_checks(c);

    if (c.dump && !c.rep.empty()) dump_rep(std::cerr, parse_rep(c, c.rep, checked_n(c, 1) + 1));
    const int threads = apply_thread_limit();
    const auto reports = run_checks(checks, threads);
    ReportFormat fmt;
    fmt.include_timing = !c.no_timing;
    if (c.format == "structured") {
        write_output(c, to_json(reports, fmt) + "\n");
    } else {
        std::ostringstream os;
        os << to_text(reports, fmt);
        std::size_t pass = 0;
        for (const auto &r : reports) pass += r.passed;
        os << pass << "/" << reports.size() << " checks passed\n";
        write_output(c, os.str());
    }
    return all_passed(reports) ? 0 : 1;
}

BlockForm parse_form(const std::string &s) {
    if (s == "mv") return BlockForm::MV;
    if (s == "fg") return BlockForm::FG;
    if (s == "mvprime") return BlockForm::MVprime;
    if (s == "fgprime") return BlockForm::FGprime;
    throw UsageError("--form must be mv, fg, mvprime or fgprime");
}

ContextPtr context_for(BlockForm f, int n) {
    switch (f) {
    case BlockForm::MV: return mv_context(n);
    case BlockForm::FG: return fg_context(n);
    case BlockForm::MVprime: return mvprime_context(n);
    case BlockForm::FGprime: return fgprime_context(n);
    }
    return nullptr;
}

std::string matrix_json(const std::string &kind, int n, const std::string &label, const ContextPtr &ctx,
                        const TorusMatrix &m, int indent) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["n"] = n;
    j["rep"] = label;
    j["variables"] = ctx->names();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j.dump(indent);
}

int run_emit(const Config &c) {
    const int n = checked_n(c, 1);
    if (c.target == "seed") {
        write_output(c, seed_to_json(cluster_seed(n)) + "\n");
        return 0;
    }
    const auto rep = parse_rep(c, c.rep.empty() ? "fund" : c.rep, n + 1);
    if (c.dump) dump_rep(std::cerr, rep);
    const bool structured = c.format == "structured";
    if (c.target == "leaf") {
        const auto ctx = leaf_context(n);
        const auto m = symplectic_leaf(n, rep, ctx);
        write_output(c, structured ? matrix_json("leaf", n, rep.label, ctx, m, 2) + "\n" : m.pretty());
        return 0;
    }
    const auto form = parse_form(c.form);
    const auto g = group_element(n, form, rep, context_for(form, n));
    write_output(c, structured ? matrix_json(block_form_name(form), n, rep.label, g.ctx, g.matrix, 2) + "\n"
                               : g.matrix.pretty());
    return 0;
}

void add_common(CLI::App *app, Config &c) {
    app->add_option("--n", c.n, "rank n of SL(n+1)");
    app->add_option("--rep", c.rep, "representation: fund | sym:<k> | trunc:<M>");
    app->add_option("--degree", c.degree, "series truncation degree");
    app->add_option("--guard", c.guard, "extra doubled degrees compared beyond the exact support");
    app->add_option("--tol", c.tol, "relative tolerance for floating-point checks");
    app->add_option("--x", c.xs, "evaluation points (|x| > 1)");
    app->add_option("--max-n", c.max_n, "largest n for apow / hyper");
    app->add_option("--max-k", c.max_k, "largest k for hyper");
    app->add_flag("--dump", c.dump, "print the representation matrices to stderr");
    app->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    app->add_option("--out", c.out, "write the report to this file");
    app->add_flag("--quick", c.quick, "reduced sizes");
    app->add_flag("--experimental", c.experimental, "allow exploratory checks");
    app->add_flag("--no-timing", c.no_timing, "omit elapsed times from reports");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact checks for the quantum group SL_q(N) as a quantum cluster variety"};
    app.require_subcommand(1);
    Config c;
    auto *check = app.add_subcommand("check", "run verification checks");
    check->add_option("what", c.target, "which check")
        ->required()
        ->check(CLI::IsMember({"defining", "controls", "mv-fg", "mutation", "mutation-sln", "appendix-a",
                               "qexp-fact", "apow", "qexp-forms", "hyper", "relations", "all"}));
    add_common(check, c);
    auto *emit = app.add_subcommand("emit", "print data");
    emit->add_option("what", c.target, "what to emit")->required()->check(CLI::IsMember({"seed", "group-element", "leaf"}));
    add_common(emit, c);
    emit->add_option("--form", c.form, "mv | fg | mvprime | fgprime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    try {
        return check->parsed() ? run_check(c) : run_emit(c);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
