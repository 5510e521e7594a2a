#include "qcv/verify.hpp"

#include <algorithm>

namespace qcv {

namespace {

std::string series_location(const SkewSeries::Term &t) {
    return "coefficient of psi^" + std::to_string(t.a) + " Q^" + std::to_string(t.m) + " chi^" + std::to_string(t.b);
}

// Lowest-degree coefficient where the two series differ.
std::optional<Mismatch> first_series_mismatch(const SkewSeries &expected, const SkewSeries &actual) {
    const SkewSeries diff = expected - actual;
    if (diff.is_zero()) return std::nullopt;
    auto terms = diff.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const SkewSeries::Term &x, const SkewSeries::Term &y) {
        return x.a + x.b < y.a + y.b;
    });
    const auto &t = terms.front();
    return Mismatch{series_location(t), expected.coeff(t.a, t.m, t.b).to_string(),
                    actual.coeff(t.a, t.m, t.b).to_string()};
}

void compare_series(VerificationReport &r, const std::string &what, const SkewSeries &expected,
                    const SkewSeries &actual) {
    auto mm = first_series_mismatch(expected, actual);
    r.notes.push_back(what + ": " + (mm ? "FAIL" : "PASS"));
    if (mm) {
        mm->location = what + " " + mm->location;
        r.fail(*mm);
    }
}

const char *base_name(QBase b) { return b == QBase::q ? "q" : "1/q"; }

// sum_n s^n T^n / [n]! * base^{-n(n-1)/2} for a nilpotent scalar matrix T and a
// series s commuting with scalars.
RingMatrix<SkewSeries> series_qexp_matrix(const SkewSeries &s, const QMatrix &t, ExpBase base) {
    const auto st = lift<SkewSeries>(t).map<SkewSeries>([&s](const SkewSeries &e) { return s * e; });
    return q_exp_matrix(st, base);
}

// diag(z^{h2_k}) with z^{-1} from series_invert.
RingMatrix<SkewSeries> series_diagonal(const SkewSeries &z, const std::vector<int> &h2) {
    const SkewSeries zi = series_invert(z);
    RingMatrix<SkewSeries> d(static_cast<int>(h2.size()), static_cast<int>(h2.size()));
    for (std::size_t k = 0; k < h2.size(); ++k) {
        SkewSeries p(1);
        for (int j = 0; j < std::abs(h2[k]); ++j) p = p * (h2[k] > 0 ? z : zi);
        d(static_cast<int>(k), static_cast<int>(k)) = p;
    }
    return d;
}

RingMatrix<SkewSeries> conjugate(const QMatrix &s, const RingMatrix<SkewSeries> &m) {
    QMatrix si(s.rows(), s.cols());
    for (int k = 0; k < s.rows(); ++k) si(k, k) = s(k, k).inverse();
    return lift<SkewSeries>(s) * m * lift<SkewSeries>(si);
}

} // namespace

VerificationReport check_qexp_factorization(int degree, QBase base, int kappa) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "qexp-factorization";
    r.eq_tag = base == QBase::q ? "qexp-product-rule" : "qexp-product-rule-inverse-base";
    r.param("degree", static_cast<long>(degree)).param("base", base_name(base)).param("kappa", static_cast<long>(kappa));
    const auto ctx = make_series_context(degree, kappa);
    const auto x = SkewSeries::psi(ctx), y = SkewSeries::chi(ctx);
    const auto lhs = qexp_series(y, base) * qexp_series(x, base);
    const auto rhs = qexp_series(x + y, base);
    if (auto mm = first_series_mismatch(rhs, lhs)) {
        mm->expected = "e(x+y): " + mm->expected;
        mm->actual = "e(y)e(x): " + mm->actual;
        r.fail(*mm);
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport check_qexp_factorization(int degree) {
    Stopwatch sw;
    auto a = check_qexp_factorization(degree, QBase::q, 2);
    auto b = check_qexp_factorization(degree, QBase::q_inverse, -2);
    VerificationReport r;
    r.check = "qexp-factorization";
    r.eq_tag = "qexp-product-rule";
    r.param("degree", static_cast<long>(degree));
    r.notes.push_back(std::string("base q, xy = q^2 yx: ") + a.status());
    r.notes.push_back(std::string("base 1/q, xy = q^-2 yx: ") + b.status());
    if (a.mismatch) r.fail(*a.mismatch);
    if (b.mismatch) r.fail(*b.mismatch);
    r.elapsed_ms = sw.ms();
    return r;
}

AlbegaResult compute_albega(int degree, bool perturbed) {
    Stopwatch sw;
    AlbegaResult out;
    auto &r = out.report;
    r.check = "appendix-a";
    r.eq_tag = "alpha-beta-gamma-relations";
    r.param("degree", static_cast<long>(degree));
    if (perturbed) r.param("definition", "perturbed");
    // Q = q^{phi/2}: Q psi = q psi Q, Q chi = q chi Q, psi chi = chi psi.
    const auto ctx = make_series_context(degree, 0, 1, 1);
    const auto psi = SkewSeries::psi(ctx), chi = SkewSeries::chi(ctx);
    const auto Q = SkewSeries::Q(ctx), Qi = SkewSeries::Q(ctx, -1);

    out.qbetahalf = perturbed ? Q + psi * Q * chi : Q + psi * Qi * chi;
    const SkewSeries qbi = series_invert(out.qbetahalf);
    // From psi Q^{-1} = q^{beta/2} gamma and Q^{-1} chi = alpha q^{beta/2}.
    out.alpha = Qi * chi * qbi;
    out.gamma = qbi * psi * Qi;

    if (!perturbed) {
        const SkewSeries one(1);
        compare_series(r, "alpha closed form", Qi * chi * Qi * series_invert(one + psi * Qi * chi * Qi), out.alpha);
        compare_series(r, "gamma closed form", series_invert(one + Qi * psi * Qi * chi) * Qi * psi * Qi, out.gamma);
    }
    compare_series(r, "fourth equation", Qi, out.alpha * out.qbetahalf * out.gamma + qbi);
    const SkewSeries qb = out.qbetahalf * out.qbetahalf;
    compare_series(r, "q^beta alpha", (out.alpha * qb).scaled(QScalar::q_pow(2)), qb * out.alpha);
    compare_series(r, "q^beta gamma", (out.gamma * qb).scaled(QScalar::q_pow(2)), qb * out.gamma);
    compare_series(r, "alpha gamma", out.gamma * out.alpha, out.alpha * out.gamma);
    r.elapsed_ms = sw.ms();
    return out;
}

VerificationReport verify_fourth_mv_equation(const Generators &rep, int degree, bool perturb_gamma) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "fourth-mv-equation";
    r.eq_tag = "mv-equals-alt-mv";
    r.param("rep", rep.label).param("degree", static_cast<long>(degree));
    if (perturb_gamma) r.param("gamma", "perturbed");
    const auto ab = compute_albega(degree);
    const auto &ctx = ab.qbetahalf.context();
    const auto psi = SkewSeries::psi(ctx), chi = SkewSeries::chi(ctx);
    const auto Q = SkewSeries::Q(ctx), Qi = SkewSeries::Q(ctx, -1);
    // Dropping the inverse factor from gamma.
    const SkewSeries gamma = perturb_gamma ? Qi * psi * Qi : ab.gamma;

    const auto pos = twist(rep, Twist::positive), neg = twist(rep, Twist::negative);
    const auto &h2 = rep.h2[0];
    const auto mv = series_qexp_matrix(psi, pos.Tplus[0], ExpBase::q) * series_diagonal(Q, h2) *
                    series_qexp_matrix(chi, pos.Tminus[0], ExpBase::q_inverse);
    const auto mvp = series_qexp_matrix(ab.alpha, neg.Tminus[0], ExpBase::q_inverse) *
                     series_diagonal(ab.qbetahalf, h2) * series_qexp_matrix(gamma, neg.Tplus[0], ExpBase::q);
    // Both sides in the untwisted normalization.
    const auto lhs = conjugate(twist_normalizer(rep, Twist::positive), mv);
    const auto rhs = conjugate(twist_normalizer(rep, Twist::negative), mvp);
    for (int i = 0; i < lhs.rows() && r.passed; ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (auto mm = first_series_mismatch(lhs(i, j), rhs(i, j))) {
                mm->location = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + mm->location;
                mm->expected = "MV: " + mm->expected;
                mm->actual = "MV': " + mm->actual;
                r.fail(*mm);
                break;
            }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_apow(int n_max) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "apow";
    r.eq_tag = "mutated-variable-powers";
    r.param("n_max", static_cast<long>(n_max));
    // x w = q^2 w x, x y = q^2 y x
    const auto ctx = make_context({"w", "x", "y"}, {0, -2, 0, 2, 0, 2, 0, -2, 0});
    const auto w = TorusElement::variable(ctx, "w"), x = TorusElement::variable(ctx, "x"),
               y = TorusElement::variable(ctx, "y");
    const TorusElement one(1);
    const auto a = w * (one + x.scaled(QScalar::q_pow(1)));
    const auto c = y * (one + x.scaled(QScalar::q_pow(1)));
    TorusElement an = one, cn = one, wn = one, yn = one, pa = one, pc = one;
    for (int n = 1; n <= n_max && r.passed; ++n) {
        an = an * a;
        cn = cn * c;
        wn = wn * w;
        yn = yn * y;
        pa = pa * (one + x.scaled(QScalar::q_pow(2 * n - 1)));
        pc = pc * (one + x.scaled(QScalar::q_pow(-(2 * n - 1))));
        if (wn * pa != an) r.fail("a^" + std::to_string(n), (wn * pa).to_string(), an.to_string());
        else if (pc * yn != cn) r.fail("c^" + std::to_string(n), (pc * yn).to_string(), cn.to_string());
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_qexp_closed_forms(int m, int guard) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "qexp-closed-forms";
    r.eq_tag = "qexp-matrix-elements";
    const int block = std::max(0, m - guard);
    r.param("m", static_cast<long>(m)).param("block", static_cast<long>(block));
    for (auto kind : {QExpKind::eq_qH_Tplus, QExpKind::e1q_Tminus_qmH, QExpKind::e1q_qH_Tminus,
                      QExpKind::eq_Tplus_qmH}) {
        const auto closed = qexp_matrix_elements_closed_form(kind, m);
        const auto direct = qexp_matrix_elements_direct(kind, m);
        bool ok = true;
        for (int i = 0; i < block && ok; ++i)
            for (int j = 0; j < block; ++j)
                if (closed(i, j) != direct(i, j)) {
                    r.fail(std::string(qexp_kind_name(kind)) + " entry (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")",
                           closed(i, j).to_string(), direct(i, j).to_string());
                    ok = false;
                    break;
                }
        r.notes.push_back(std::string(qexp_kind_name(kind)) + ": " + (ok ? "PASS" : "FAIL"));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

} // namespace qcv
