#include "qcv/verify.hpp"

namespace qcv {

namespace {

const char *variant_name(MVVariant v) {
    switch (v) {
    case MVVariant::standard: return "standard";
    case MVVariant::commuting: return "commuting";
    case MVVariant::half: return "half";
    }
    return "?";
}

std::function<std::string(int, int)> tensor_index(int dim) {
    return [dim](int i, int j) {
        auto pair = [dim](int k) {
            return "(" + std::to_string(k / dim + 1) + "," + std::to_string(k % dim + 1) + ")";
        };
        return "entry (" + pair(i) + "," + pair(j) + ")";
    };
}

QMatrix classical(const QMatrix &m) {
    return m.map<QScalar>([](const QScalar &c) { return QScalar(c.evaluate(BigRational(1))); });
}

// sum_k A^k / k! for nilpotent A.
QMatrix classical_exp(const QMatrix &a) {
    QMatrix sum = QMatrix::identity(a.rows()), term = sum;
    for (int k = 1; k <= a.rows(); ++k) {
        term = term * a;
        if (term.vanishes()) break;
        term = term.scaled(QScalar(BigRational(1, k)));
        sum += term;
    }
    return sum;
}

ContextPtr commuting_copy(const ContextPtr &ctx) {
    return make_context(ctx->names(), std::vector<int>(static_cast<std::size_t>(ctx->size() * ctx->size()), 0));
}

} // namespace

VerificationReport verify_defining_equation(int n, const Generators &rep, const DefiningOptions &opt) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "defining-equation";
    r.eq_tag = "coproduct-equals-tensor-square";
    r.param("n", static_cast<long>(n)).param("rep", rep.label);
    r.param("relations", variant_name(opt.variant));
    r.param("twist", opt.twist == Twist::positive ? "positive" : "negative");
    r.param("route", opt.route == CoproductRoute::factorized ? "factorized" : "direct");
    const auto ctx = mv_context(n, opt.variant);
    const auto g = group_element(n, BlockForm::MV, rep, ctx);
    r.param("torus_variables", static_cast<long>(ctx->size()));
    const auto delta = coproduct_group_element(n, rep, ctx, opt.route, opt.twist);
    // g is rebuilt with the generators twisted like the comultiplication rule.
    const TorusMatrix gm = opt.twist == Twist::positive ? g.matrix : mv_group_element(n, rep, ctx, opt.twist);
    const TorusMatrix gg = kron(gm, gm);
    if (auto mm = first_matrix_mismatch(gg, delta, tensor_index(rep.dim))) {
        mm->expected = "g(x)g: " + mm->expected;
        mm->actual = "Delta(g): " + mm->actual;
        r.fail(*mm);
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_defining_controls(int n) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "defining-controls";
    r.eq_tag = "coproduct-needs-dual-relations";
    r.param("n", static_cast<long>(n));
    const auto rep = fundamental_rep(n + 1);
    const std::pair<const char *, DefiningOptions> controls[] = {
        {"commuting", {MVVariant::commuting, Twist::positive, CoproductRoute::factorized}},
        {"half", {MVVariant::half, Twist::positive, CoproductRoute::factorized}},
        {"negative twist", {MVVariant::standard, Twist::negative, CoproductRoute::direct}},
    };
    for (const auto &[name, opt] : controls) {
        const auto c = verify_defining_equation(n, rep, opt);
        if (c.passed || !c.mismatch) {
            r.fail(std::string("control ") + name, "FAIL with a mismatching entry", c.status());
            continue;
        }
        r.notes.push_back(std::string(name) + ": FAIL as required, first mismatch at " + c.mismatch->location + ": " +
                          c.mismatch->expected + " vs " + c.mismatch->actual);
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_representation_relations(int fund_max, int sym_max, int trunc_m) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "representation-relations";
    r.eq_tag = "chevalley-relations";
    r.param("fund_max", static_cast<long>(fund_max)).param("sym_max", static_cast<long>(sym_max));
    r.param("trunc", static_cast<long>(trunc_m));
    std::vector<Generators> reps;
    for (int N = 2; N <= fund_max; ++N) reps.push_back(fundamental_rep(N));
    for (int k = 1; k <= sym_max; ++k) reps.push_back(symmetric_rep_sl2(k));
    if (trunc_m >= 2) reps.push_back(truncated_lowest_weight_rep(trunc_m));
    for (const auto &g : reps) {
        const auto c = check_relations(g);
        if (!c.ok) r.fail(g.label, "relations hold", c.failure);
    }
    r.param("representations", static_cast<long>(reps.size()));
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_mv_fg_equivalence(int n, const Generators &rep) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "mv-fg-equivalence";
    r.eq_tag = "mv-to-fg-substitution";
    r.param("n", static_cast<long>(n)).param("rep", rep.label);
    const auto mv = mv_context(n), fg = fg_context(n);
    const auto map = mv_to_fg_map(n, mv, fg);
    for (int i = 1; i <= num_blocks(n) && r.passed; ++i) {
        auto lhs = substitute_matrix(mv, fg, map, building_block(n, i, BlockForm::MV, rep, mv));
        auto rhs = building_block(n, i, BlockForm::FG, rep, fg);
        if (auto mm = first_matrix_mismatch(rhs, lhs)) {
            mm->location = "block " + std::to_string(i) + " " + mm->location;
            r.fail(*mm);
        }
    }
    if (r.passed) {
        auto lhs = substitute_matrix(mv, fg, map, group_element(n, BlockForm::MV, rep, mv).matrix);
        auto rhs = group_element(n, BlockForm::FG, rep, fg).matrix;
        if (auto mm = first_matrix_mismatch(rhs, lhs)) {
            mm->location = "g " + mm->location;
            r.fail(*mm);
        }
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_mvprime_fgprime_equivalence(int n, const Generators &rep) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "mvprime-fgprime-equivalence";
    r.eq_tag = "alt-mv-to-alt-fg-substitution";
    r.param("n", static_cast<long>(n)).param("rep", rep.label);
    const auto mvp = mvprime_context(n), fgp = fgprime_context(n);
    auto lhs = substitute_matrix(mvp, fgp, mvprime_to_fgprime_map(n, mvp, fgp),
                                 group_element(n, BlockForm::MVprime, rep, mvp).matrix);
    auto rhs = group_element(n, BlockForm::FGprime, rep, fgp).matrix;
    if (auto mm = first_matrix_mismatch(rhs, lhs)) r.fail(*mm);
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_symplectic_leaf(int n, const Generators &rep) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "symplectic-leaf";
    r.eq_tag = "leaf-product-without-y";
    r.param("n", static_cast<long>(n)).param("rep", rep.label);
    const auto leaf = leaf_context(n);
    const auto fg = fg_context(n);
    // The leaf relations are the restriction of the FG ones.
    for (int a = 0; a < leaf->size() && r.passed; ++a)
        for (int b = 0; b < leaf->size(); ++b) {
            const int fa = fg->index(leaf->name(a)), fb = fg->index(leaf->name(b));
            if (leaf->omega(a, b) != fg->omega(fa, fb)) {
                r.fail("omega(" + leaf->name(a) + "," + leaf->name(b) + ")", std::to_string(fg->omega(fa, fb)),
                       std::to_string(leaf->omega(a, b)));
                break;
            }
        }
    const auto direct = symplectic_leaf(n, rep, leaf);
    if (auto mm = first_matrix_mismatch(symplectic_leaf_by_projection(n, rep, leaf), direct)) {
        mm->location = "projection " + mm->location;
        r.fail(*mm);
    }
    const auto flat = commuting_copy(leaf);
    TorusMatrix cl = TorusMatrix::identity(rep.dim);
    for (int i = 1; i <= n; ++i) {
        const int root = square_bracket(n, i) - 1;
        const auto &h2 = rep.h2[static_cast<std::size_t>(root)];
        cl = cl * diagonal_power(flat, flat->index("w" + std::to_string(i)), h2) *
             lift<TorusElement>(classical_exp(classical(rep.Tplus[static_cast<std::size_t>(root)]))) *
             diagonal_power(flat, flat->index("x" + std::to_string(i)), h2) *
             lift<TorusElement>(classical_exp(classical(rep.Tminus[static_cast<std::size_t>(root)])));
    }
    if (auto mm = first_matrix_mismatch(cl, evaluate_matrix(direct, BigRational(1), flat))) {
        mm->location = "v=1 " + mm->location;
        r.fail(*mm);
    }
    r.elapsed_ms = sw.ms();
    return r;
}

} // namespace qcv
