#include "oracles.hpp"

#include "printers.hpp"

#include "qcv/skew_series.hpp"
#include "qcv/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace qcv;

namespace {

SkewSeries random_series(const SeriesContextPtr &ctx, std::mt19937 &rng, bool unit = false) {
    std::uniform_int_distribution<int> deg(0, 3), m(-2, 2), c(-3, 3);
    SkewSeries s = unit ? SkewSeries::monomial(ctx, 0, m(rng), 0, QScalar(1) + QScalar::v_pow(2)) : SkewSeries();
    for (int k = 0; k < 4; ++k) {
        const int a = deg(rng), b = deg(rng);
        if (unit && a + b == 0) continue;
        s += SkewSeries::monomial(ctx, a, m(rng), b, QScalar(c(rng)) + QScalar::v_pow(c(rng)));
    }
    return s;
}

} // namespace

TEST(SkewSeries, MonomialProductsMatchWordRewriting) {
    // Variables psi (0), Q (1), chi (2): Q psi = q^lp psi Q, Q chi = q^lc chi Q,
    // psi chi = q^kappa chi psi.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 3), m(-3, 3), rel(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int kappa = rel(rng), lp = rel(rng), lc = rel(rng);
        const auto ctx = make_series_context(20, kappa, lp, lc);
        const std::vector<int> omega = {0, -lp, kappa, lp, 0, lc, -kappa, -lc, 0};
        const int a1 = e(rng), m1 = m(rng), b1 = e(rng), a2 = e(rng), m2 = m(rng), b2 = e(rng);
        const auto nf = oracle::normal_order(omega, 3, {{0, a1}, {1, m1}, {2, b1}, {0, a2}, {1, m2}, {2, b2}});
        const auto lhs = SkewSeries::monomial(ctx, a1, m1, b1) * SkewSeries::monomial(ctx, a2, m2, b2);
        const auto rhs = SkewSeries::monomial(ctx, nf.exps[0], nf.exps[1], nf.exps[2],
                                              QScalar::q_pow(static_cast<int>(nf.phase)));
        EXPECT_EQ(lhs, rhs) << "trial " << trial;
    }
}

TEST(SkewSeries, AssociativityOnRandomTriples) {
    std::mt19937 rng(11);
    const auto ctx = make_series_context(6, 2, 1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(ctx, rng), b = random_series(ctx, rng), c = random_series(ctx, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(SkewSeries, InverseIsTwoSided) {
    std::mt19937 rng(17);
    for (int d : {1, 4, 6}) {
        const auto ctx = make_series_context(d, 0, 1, 1);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_series(ctx, rng, true);
            const auto ai = series_invert(a);
            EXPECT_EQ(a * ai, SkewSeries(1));
            EXPECT_EQ(ai * a, SkewSeries(1));
        }
    }
}

TEST(SkewSeries, InverseNeedsMonomialUnitPart) {
    const auto ctx = make_series_context(4);
    EXPECT_THROW(series_invert(SkewSeries::psi(ctx)), NotInvertible);
    EXPECT_THROW(series_invert(SkewSeries::Q(ctx) + SkewSeries::Q(ctx, 2)), NotInvertible);
}

TEST(SkewSeries, TruncationCoherence) {
    std::mt19937 rng(23);
    const auto hi = make_series_context(8, 0, 1, 1), lo = make_series_context(5, 0, 1, 1);
    for (int trial = 0; trial < 15; ++trial) {
        // Same coefficients in both contexts.
        const auto ah = random_series(hi, rng, true);
        const auto bh = random_series(hi, rng);
        SkewSeries al, bl;
        for (const auto &t : ah.terms()) al += SkewSeries::monomial(lo, t.a, t.m, t.b, t.coeff);
        for (const auto &t : bh.terms()) bl += SkewSeries::monomial(lo, t.a, t.m, t.b, t.coeff);
        auto relabel = [&](const SkewSeries &s) {
            SkewSeries r;
            const SkewSeries cut = s.truncated(5);
            for (const auto &t : cut.terms()) r += SkewSeries::monomial(lo, t.a, t.m, t.b, t.coeff);
            return r;
        };
        EXPECT_EQ(relabel(ah * bh), al * bl);
        EXPECT_EQ(relabel(series_invert(ah)), series_invert(al));
    }
}

TEST(SkewSeries, QExpTruncation) {
    const auto ctx = make_series_context(3);
    const auto e = qexp_series(SkewSeries::psi(ctx), QBase::q);
    // 1 + psi + psi^2 q^{-1}/[2] + psi^3 q^{-3}/[3]!
    EXPECT_EQ(e.coeff(0, 0, 0), QScalar(1));
    EXPECT_EQ(e.coeff(2, 0, 0), QScalar::q_pow(-1) * q_int_inverse(2));
    EXPECT_EQ(e.coeff(3, 0, 0), QScalar::q_pow(-3) / q_factorial(3));
    EXPECT_TRUE(e.coeff(4, 0, 0).is_zero());
    EXPECT_THROW(qexp_series(SkewSeries(1) + SkewSeries::psi(ctx), QBase::q), NonNilpotentArgument);
}

TEST(SkewSeries, QExpFactorization) {
    EXPECT_TRUE(check_qexp_factorization(12, QBase::q, 2).passed);
    EXPECT_TRUE(check_qexp_factorization(12, QBase::q_inverse, -2).passed);
    // Both bases at once.
    EXPECT_TRUE(check_qexp_factorization(8).passed);
    // Wrong relation: the first disagreement is at total degree 2.
    const auto bad = check_qexp_factorization(6, QBase::q, 1);
    ASSERT_FALSE(bad.passed);
    EXPECT_EQ(bad.mismatch->location, "coefficient of psi^1 Q^0 chi^1");
    // The inverse base with the q^2 relation is also wrong.
    EXPECT_FALSE(check_qexp_factorization(6, QBase::q_inverse, 2).passed);
}

TEST(SkewSeries, AlbegaRelations) {
    const auto r = compute_albega(8);
    EXPECT_TRUE(r.report.passed) << to_text(r.report);
    // Leading order: alpha = Q^{-1} chi Q^{-1}, gamma = Q^{-1} psi Q^{-1}.
    const auto d1 = compute_albega(1);
    EXPECT_TRUE(d1.report.passed);
    const auto &ctx = d1.alpha.context();
    EXPECT_EQ(d1.alpha, SkewSeries::Q(ctx, -1) * SkewSeries::chi(ctx) * SkewSeries::Q(ctx, -1));
    EXPECT_EQ(d1.gamma, SkewSeries::Q(ctx, -1) * SkewSeries::psi(ctx) * SkewSeries::Q(ctx, -1));
    // Perturbed q^{beta/2} breaks alpha gamma = gamma alpha.
    const auto p = compute_albega(8, true);
    EXPECT_FALSE(p.report.passed);
    EXPECT_NE(std::find(p.report.notes.begin(), p.report.notes.end(), "alpha gamma: FAIL"), p.report.notes.end());
}
