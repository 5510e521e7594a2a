#include "oracles.hpp"

#include "printers.hpp"

#include "qcv/errors.hpp"
#include "qcv/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qcv;

TEST(Defining, HoldsForSmallRanks) {
    for (int n = 1; n <= 2; ++n) {
        const auto r = verify_defining_equation(n, fundamental_rep(n + 1));
        EXPECT_TRUE(r.passed) << to_text(r);
        EXPECT_EQ(r.check, "defining-equation");
    }
    EXPECT_TRUE(verify_defining_equation(1, symmetric_rep_sl2(2)).passed);
    DefiningOptions direct;
    direct.route = CoproductRoute::direct;
    EXPECT_TRUE(verify_defining_equation(1, fundamental_rep(2), direct).passed);
}

TEST(Defining, WrongRelationsAreDetected) {
    DefiningOptions commuting;
    commuting.variant = MVVariant::commuting;
    const auto r = verify_defining_equation(1, fundamental_rep(2), commuting);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.mismatch.has_value());
    EXPECT_NE(r.mismatch->expected, r.mismatch->actual);
    DefiningOptions half;
    half.variant = MVVariant::half;
    EXPECT_FALSE(verify_defining_equation(1, fundamental_rep(2), half).passed);
    DefiningOptions negative;
    negative.twist = Twist::negative;
    EXPECT_THROW(verify_defining_equation(1, fundamental_rep(2), negative), std::invalid_argument);
    negative.route = CoproductRoute::direct;
    EXPECT_FALSE(verify_defining_equation(1, fundamental_rep(2), negative).passed);
    EXPECT_TRUE(verify_defining_controls(1).passed);
}

TEST(Mutation, FundamentalAndSymmetric) {
    EXPECT_TRUE(verify_mutation(fundamental_rep(2)).passed);
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(verify_mutation(symmetric_rep_sl2(k)).passed) << k;
}

TEST(Mutation, GenericProductRouteAgrees) {
    MutationOptions opt;
    opt.generic_route = true;
    for (int k = 1; k <= 3; ++k) {
        const auto r = verify_mutation(symmetric_rep_sl2(k), 0, opt);
        EXPECT_TRUE(r.passed) << to_text(r);
    }
}

TEST(Mutation, SlNRoots) {
    for (int i = 1; i <= 2; ++i) EXPECT_TRUE(verify_mutation_slN(2, i).passed) << i;
}

TEST(Mutation, ExtractedVariables) {
    MutationExtraction out;
    const auto r = verify_mutation_extraction(&out);
    ASSERT_TRUE(r.passed) << to_text(r);
    const auto fg = fg_context(1);
    // a = w + q w x, c = y + q y x = y + q^{-1} x y
    EXPECT_EQ(out.a, TorusElement::monomial(fg, {2, 0, 0}) + TorusElement::monomial(fg, {2, 2, 0}, QScalar::v_pow(2)));
    EXPECT_EQ(out.b, TorusElement::monomial(fg, {0, -2, 0}));
    EXPECT_EQ(out.c, TorusElement::monomial(fg, {0, 0, 2}) + TorusElement::monomial(fg, {0, 2, 2}, QScalar::v_pow(-2)));
}

TEST(Mutation, TruncatedModuleIsExploratory) {
    // Only the interior block is meaningful; the run must terminate either way.
    MutationOptions opt;
    opt.block = 2;
    EXPECT_NO_THROW(verify_mutation_truncated(6, opt));
}

TEST(SeriesIdentities, FourthEquationAndControls) {
    EXPECT_TRUE(verify_fourth_mv_equation(fundamental_rep(2), 6).passed);
    EXPECT_FALSE(verify_fourth_mv_equation(fundamental_rep(2), 6, true).passed);
}

TEST(SeriesIdentities, PowersOfMutatedVariables) {
    EXPECT_TRUE(verify_apow(5).passed);
}

TEST(SeriesIdentities, QExpClosedForms) {
    EXPECT_TRUE(verify_qexp_closed_forms(12).passed);
    EXPECT_TRUE(verify_qexp_closed_forms(6, 0).passed);
}

TEST(Hypergeometric, MatchesClosedForms) {
    for (int m = 1; m <= 6; ++m)
        for (double x : {2.0, -3.0, 10.0}) {
            const auto s = hypergeometric_sides(1, m, x);
            const double ref = oracle::hyper_rhs_n1(m, x);
            EXPECT_NEAR(s.rhs, ref, 1e-12 * std::abs(ref)) << m << " " << x;
            EXPECT_NEAR(s.lhs, ref, 1e-12 * std::abs(ref)) << m << " " << x;
        }
    for (double x : {3.0, 10.0, -4.0}) {
        const auto s = hypergeometric_sides(2, 2, x);
        const double ref = oracle::hyper_rhs_n2_m2(x);
        EXPECT_NEAR(s.lhs, ref, 1e-12 * std::abs(ref)) << x;
        EXPECT_NEAR(s.rhs, ref, 1e-12 * std::abs(ref)) << x;
    }
    // Exact zero of the right side at x = 2.
    EXPECT_EQ(oracle::hyper_rhs_n2_m2(2.0), 0.0);
    EXPECT_NEAR(hypergeometric_sides(2, 2, 2.0).lhs, 0.0, 1e-15);
}

TEST(Hypergeometric, GridAndArgumentChecks) {
    const auto r = verify_hypergeometric_q1(6, 4, {2.0, 10.0}, 1e-9);
    EXPECT_TRUE(r.passed) << to_text(r);
    EXPECT_THROW(verify_hypergeometric_q1(2, 2, {0.5}, 1e-9), std::invalid_argument);
    EXPECT_THROW(verify_hypergeometric_q1(2, 2, {2.0}, 0.0), std::invalid_argument);
    // |x| barely above 1 converges too slowly for the term budget.
    EXPECT_THROW(verify_hypergeometric_q1(3, 3, {1.0000001}, 1e-9), ConvergenceFailure);
}

TEST(Relations, AllRepresentations) {
    EXPECT_TRUE(verify_representation_relations(4, 8, 10).passed);
}
