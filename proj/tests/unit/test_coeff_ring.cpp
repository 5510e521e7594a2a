#include "oracles.hpp"

#include "printers.hpp"

#include "qcv/cyclotomic.hpp"
#include "qcv/errors.hpp"
#include "qcv/qcombinatorics.hpp"
#include "qcv/qscalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcv;

namespace {

LaurentPoly random_poly(std::mt19937 &rng, int span = 6) {
    std::uniform_int_distribution<int> c(-4, 4), lo(-span, span), len(1, 5);
    const int low = lo(rng), n = len(rng);
    std::vector<BigRational> cs;
    for (int i = 0; i < n; ++i) cs.emplace_back(c(rng), 1 + (i % 2));
    const auto p = LaurentPoly::from_dense(low, cs);
    return p.is_zero() ? LaurentPoly::monomial(1, low) : p;
}

// Random element with a mix of cyclotomic and generic denominators.
QScalar random_scalar(std::mt19937 &rng) {
    std::uniform_int_distribution<int> pick(0, 4), small(1, 6);
    QScalar s(random_poly(rng));
    switch (pick(rng)) {
    case 0: break;
    case 1: s *= q_int_inverse(small(rng)); break;
    case 2: s = s / QScalar(random_poly(rng, 3)).shifted(1); break;
    case 3: s *= q_binomial(small(rng) + 2, 2).inverse(); break;
    default: s = s / (QScalar(1) + QScalar::v_pow(small(rng)));
    }
    return s;
}

const BigRational kPoints[] = {BigRational(3, 2), BigRational(-5, 7), BigRational(11, 3)};

bool nonzero_at_points(const QScalar &s) {
    for (const auto &p : kPoints)
        if (s.evaluate(p) == 0) return false;
    return true;
}

} // namespace

TEST(LaurentPoly, ArithmeticAndDivision) {
    const LaurentPoly a = LaurentPoly::monomial(1, 2) + LaurentPoly(1);
    const LaurentPoly b = LaurentPoly::monomial(1, -1) - LaurentPoly(2);
    const LaurentPoly p = a * b;
    EXPECT_EQ(p.to_string(), "-2*v^2 + v - 2 + v^-1");
    ASSERT_TRUE(p.exact_div(a).has_value());
    EXPECT_EQ(*p.exact_div(a), b);
    EXPECT_FALSE(a.exact_div(LaurentPoly::monomial(1, 1) + LaurentPoly(3)).has_value());
    EXPECT_EQ(LaurentPoly::gcd(p, a * LaurentPoly::monomial(2, 5)), a.monic());
}

TEST(Cyclotomic, KnownPolynomials) {
    EXPECT_EQ(cyclotomic(1).to_string(), "v - 1");
    EXPECT_EQ(cyclotomic(4).to_string(), "v^2 + 1");
    EXPECT_EQ(cyclotomic(12).to_string(), "v^4 - v^2 + 1");
    for (int d : {1, 2, 3, 5, 8, 9, 12, 30}) EXPECT_EQ(cyclotomic(d).high(), euler_phi(d)) << d;
    // v^n - 1 is the product of Phi_d over d | n.
    for (int n : {6, 12, 20}) {
        LaurentPoly prod(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        EXPECT_EQ(prod, LaurentPoly::monomial(1, n) - LaurentPoly(1)) << n;
    }
    EXPECT_TRUE(divide_by_cyclotomic(cyclotomic(6) * cyclotomic(4), 6).has_value());
    EXPECT_FALSE(divide_by_cyclotomic(cyclotomic(6) * cyclotomic(4), 3).has_value());
}

TEST(QScalar, CanonicalForm) {
    const QScalar a = QScalar::fraction(LaurentPoly::monomial(1, 4) - LaurentPoly(1), LaurentPoly::monomial(1, 2) - LaurentPoly(1));
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.to_string(), "v^2 + 1");
    const QScalar b = QScalar(1) / QScalar(LaurentPoly::monomial(2, 2) + LaurentPoly(2));
    // Monic denominator: 1/(2v^2 + 2) = (1/2)/(v^2 + 1).
    EXPECT_EQ(b.denominator().to_string(), "v^2 + 1");
    EXPECT_EQ(b.numerator().to_string(), "1/2");
    EXPECT_EQ(b * QScalar(LaurentPoly::monomial(2, 2) + LaurentPoly(2)), QScalar(1));
}

TEST(QScalar, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), QScalar(1));
            EXPECT_EQ(b / a * a, b);
        }
        // Evaluation at rational points is a ring homomorphism; the points
        // avoid roots of unity so no cyclotomic denominator vanishes.
        if (nonzero_at_points(b.denominator()) && nonzero_at_points(a.denominator()))
            for (const auto &p : kPoints) {
                EXPECT_EQ((a * b).evaluate(p), a.evaluate(p) * b.evaluate(p));
                EXPECT_EQ((a + b).evaluate(p), a.evaluate(p) + b.evaluate(p));
            }
    }
}

TEST(QScalar, EqualityIsStructuralOnCanonicalForms) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const QScalar a = random_scalar(rng), b = random_scalar(rng);
        // Two routes to the same value produce identical representations.
        EXPECT_EQ((a * b) / b, a);
        EXPECT_EQ(a.hash(), ((a * b) / b).hash());
    }
}

TEST(QScalar, PoleAndDivisionErrors) {
    EXPECT_THROW(QScalar().inverse(), std::domain_error);
    EXPECT_THROW(QScalar(1) / QScalar(), std::domain_error);
    EXPECT_THROW(q_int(2).evaluate(BigRational(0)), PoleError);
    // 1/[2] = v^2/(v^4 + 1) has poles at the primitive 8th roots of unity only.
    EXPECT_EQ(q_int_inverse(2).evaluate(BigRational(0)), 0);
    EXPECT_EQ(q_int_inverse(2).evaluate(BigRational(1)), BigRational(1, 2));
}

TEST(QCombinatorics, QIntegers) {
    EXPECT_EQ(q_int(1), QScalar(1));
    EXPECT_EQ(q_int(2).to_string(), "v^2 + v^-2");
    EXPECT_EQ(q_int(3).to_string(), "v^4 + 1 + v^-4");
    EXPECT_EQ(q_int(-2), -q_int(2));
    EXPECT_TRUE(q_int(0).is_zero());
    EXPECT_EQ(q_int(5).evaluate(BigRational(1)), 5);
    EXPECT_EQ(q_int(4) * q_int_inverse(4), QScalar(1));
}

TEST(QCombinatorics, BinomialsAgainstFactorialOracle) {
    const BigRational pts[] = {BigRational(2), BigRational(-3, 5), BigRational(7, 4)};
    for (int n = 0; n <= 12; ++n)
        for (int k = -1; k <= n + 1; ++k)
            for (const auto &p : pts) EXPECT_EQ(q_binomial(n, k).evaluate(p), oracle::q_binomial_at(n, k, p)) << n << "," << k;
    // Frozen from the factorial oracle: all q-binomials are Laurent polynomials.
    EXPECT_EQ(q_binomial(4, 2).to_string(), "v^8 + v^4 + 2 + v^-4 + v^-8");
    EXPECT_TRUE(q_binomial(10, 4).is_polynomial());
    EXPECT_EQ(q_binomial(10, 4).evaluate(BigRational(1)), 210);
}

TEST(QCombinatorics, PascalRule) {
    // qbin(n, k) = q^{-k} qbin(n-1, k) + q^{n-k} qbin(n-1, k-1)
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(q_binomial(n, k),
                      QScalar::q_pow(-k) * q_binomial(n - 1, k) + QScalar::q_pow(n - k) * q_binomial(n - 1, k - 1));
}

TEST(QCombinatorics, FactorialMatchesProduct) {
    QScalar p(1);
    for (int n = 1; n <= 10; ++n) {
        p *= q_int(n);
        EXPECT_EQ(q_factorial(n), p);
    }
    EXPECT_EQ(q_minus_q_inverse().to_string(), "v^2 - v^-2");
}
