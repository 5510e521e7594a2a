#include "oracles.hpp"

#include "printers.hpp"

#include "qcv/errors.hpp"
#include "qcv/rep_matrices.hpp"

#include <gtest/gtest.h>

using namespace qcv;

namespace {

QMatrix diag(std::initializer_list<QScalar> d) {
    QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    int k = 0;
    for (const auto &x : d) m(k, k) = x, ++k;
    return m;
}

QMatrix unit(int n, int i, int j, const QScalar &c = QScalar(1)) {
    QMatrix m(n, n);
    m(i, j) = c;
    return m;
}

} // namespace

TEST(Representations, FundamentalSl2) {
    const auto g = fundamental_rep(2);
    EXPECT_EQ(g.H[0], diag({QScalar(BigRational(1, 2)), QScalar(BigRational(-1, 2))}));
    EXPECT_EQ(g.Tplus[0], unit(2, 0, 1));
    EXPECT_EQ(g.Tminus[0], unit(2, 1, 0));
    EXPECT_EQ(g.h2[0], (std::vector<int>{1, -1}));
    // [T+, T-] = diag([1], -[1])
    EXPECT_EQ(g.Tplus[0] * g.Tminus[0] - g.Tminus[0] * g.Tplus[0], diag({QScalar(1), QScalar(-1)}));
}

TEST(Representations, FundamentalSl3Conjugation) {
    const auto g = fundamental_rep(3);
    EXPECT_EQ(g.cartan, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
    // q^{H_1} T_{+2} q^{-H_1} = q^{-1/2} T_{+2}
    EXPECT_EQ(q_power_H(g, 0, 1) * g.Tplus[1] * q_power_H(g, 0, -1), g.Tplus[1].scaled(QScalar::v_pow(-1)));
    // [T_{+1}, T_{-2}] = 0
    EXPECT_TRUE((g.Tplus[0] * g.Tminus[1] - g.Tminus[1] * g.Tplus[0]).vanishes());
}

TEST(Representations, RelationChecksForAllSupportedSizes) {
    for (int N = 2; N <= 5; ++N) EXPECT_TRUE(check_relations(fundamental_rep(N)).ok) << N;
    for (int k = 1; k <= 20; ++k) EXPECT_TRUE(check_relations(symmetric_rep_sl2(k)).ok) << k;
    for (int m : {3, 5, 10}) EXPECT_TRUE(check_relations(truncated_lowest_weight_rep(m)).ok) << m;
}

TEST(Representations, SymmetricSpinOne) {
    const auto g = symmetric_rep_sl2(2);
    EXPECT_EQ(g.dim, 3);
    EXPECT_EQ(g.h2[0], (std::vector<int>{2, 0, -2}));
    EXPECT_EQ(g.Tplus[0](0, 1), QScalar(1));
    EXPECT_EQ(g.Tplus[0](1, 2), q_int(2));
    EXPECT_EQ(g.Tminus[0](1, 0), q_int(2));
    EXPECT_EQ(g.Tminus[0](2, 1), QScalar(1));
    // k = 1 coincides with the fundamental representation.
    const auto f = fundamental_rep(2), s = symmetric_rep_sl2(1);
    EXPECT_EQ(s.H[0], f.H[0]);
    EXPECT_EQ(s.Tplus[0], f.Tplus[0]);
    EXPECT_EQ(s.Tminus[0], f.Tminus[0]);
}

TEST(Representations, ClassicalLimitOfSpinMatrices) {
    // At v = 1: T+ e_j = j e_{j-1}, T- e_j = (k - j) e_{j+1}.
    for (int k = 1; k <= 8; ++k) {
        const auto g = symmetric_rep_sl2(k);
        for (int j = 1; j <= k; ++j) {
            EXPECT_EQ(g.Tplus[0](j - 1, j).evaluate(BigRational(1)), j);
            EXPECT_EQ(g.Tminus[0](j, j - 1).evaluate(BigRational(1)), k - j + 1);
        }
    }
}

TEST(Representations, TruncatedLowestWeight) {
    const auto g = truncated_lowest_weight_rep(3);
    EXPECT_EQ(g.H[0], diag({QScalar(-1), QScalar(-2), QScalar(-3)}));
    EXPECT_EQ(g.Tplus[0](0, 1), q_int(1));
    EXPECT_EQ(g.Tplus[0](1, 2), q_int(2));
    EXPECT_EQ(g.Tminus[0](1, 0), -q_int(2));
    EXPECT_EQ(g.Tminus[0](2, 1), -q_int(3));
    EXPECT_NO_THROW(truncated_lowest_weight_rep(2));
    // The relations fail in the last row.
    EXPECT_FALSE(check_relations(truncated_lowest_weight_rep(5), 5).ok);
}

TEST(Representations, Twists) {
    const auto g = fundamental_rep(2);
    const auto pos = twist(g, Twist::positive), neg = twist(g, Twist::negative);
    EXPECT_EQ(pos.Tplus[0], unit(2, 0, 1, QScalar::v_pow(1)));
    EXPECT_EQ(neg.Tplus[0], unit(2, 0, 1, QScalar::v_pow(1)));
    EXPECT_EQ(pos.Tminus[0], unit(2, 1, 0, QScalar::v_pow(-1)));
    EXPECT_EQ(neg.Tminus[0], unit(2, 1, 0, QScalar::v_pow(-1)));
    // Twisted generators keep the commutator.
    for (int N : {2, 3}) {
        const auto f = fundamental_rep(N);
        for (auto sign : {Twist::positive, Twist::negative}) {
            const auto t = twist(f, sign);
            for (int i = 0; i < f.rank; ++i)
                EXPECT_EQ(t.Tplus[i] * t.Tminus[i] - t.Tminus[i] * t.Tplus[i],
                          f.Tplus[i] * f.Tminus[i] - f.Tminus[i] * f.Tplus[i]);
        }
    }
}

TEST(Representations, TwistNormalizer) {
    for (const auto &g : {fundamental_rep(2), fundamental_rep(4), symmetric_rep_sl2(5)})
        for (auto sign : {Twist::positive, Twist::negative}) {
            const auto s = twist_normalizer(g, sign);
            QMatrix si(g.dim, g.dim);
            for (int k = 0; k < g.dim; ++k) si(k, k) = s(k, k).inverse();
            const auto t = twist(g, sign);
            for (int i = 0; i < g.rank; ++i) {
                EXPECT_EQ(s * t.Tplus[i] * si, g.Tplus[i]);
                EXPECT_EQ(s * t.Tminus[i] * si, g.Tminus[i]);
            }
        }
    EXPECT_EQ(twist_normalizer(fundamental_rep(2), Twist::positive), diag({QScalar(1), QScalar::v_pow(1)}));
}

TEST(Representations, QExpMatrix) {
    const auto g = fundamental_rep(2);
    const QMatrix I = QMatrix::identity(2);
    EXPECT_EQ(q_exp_matrix(g.Tplus[0], ExpBase::q), I + g.Tplus[0]);
    EXPECT_EQ(q_exp_matrix(QMatrix(2, 2), ExpBase::q), I);
    const auto s = symmetric_rep_sl2(2);
    const auto t = s.Tplus[0];
    EXPECT_EQ(q_exp_matrix(t, ExpBase::q), QMatrix::identity(3) + t + (t * t).scaled(QScalar::q_pow(-1) * q_int_inverse(2)));
    QMatrix jordan(2, 2);
    jordan(0, 0) = QScalar(1);
    EXPECT_THROW(q_exp_matrix(jordan, ExpBase::q, 16), NotNilpotent);
}

TEST(Representations, DiagonalPowers) {
    const auto ctx = make_context({"w", "x"}, {0, -2, 2, 0});
    const auto m = diagonal_power(ctx, 0, fundamental_rep(2).H[0]);
    EXPECT_EQ(m(0, 0), TorusElement::variable(ctx, 0, 1));
    EXPECT_EQ(m(1, 1), TorusElement::variable(ctx, 0, -1));
    const auto s = diagonal_power(ctx, 1, symmetric_rep_sl2(2).H[0]);
    EXPECT_EQ(s(0, 0), TorusElement::variable(ctx, 1, 2));
    EXPECT_EQ(s(1, 1), TorusElement(1));
    EXPECT_EQ(s(2, 2), TorusElement::variable(ctx, 1, -2));
    EXPECT_EQ(diagonal_power(ctx, 0, QMatrix(2, 2)), (RingMatrix<TorusElement>::identity(2)));
    EXPECT_THROW(diagonal_power(ctx, 0, diag({QScalar(BigRational(1, 3)), QScalar(0)})), NonHalfIntegerEntry);
}

TEST(Representations, Kronecker) {
    const auto g = fundamental_rep(2);
    const auto a = g.Tplus[0] + g.H[0], b = g.Tminus[0].scaled(q_int(2));
    const QMatrix I = QMatrix::identity(2);
    EXPECT_EQ(kron(I, I), QMatrix::identity(4));
    EXPECT_EQ(kron(a, I) * kron(I, b), kron(a, b));
    EXPECT_EQ(kron(a, b)(1, 2), a(0, 1) * b(1, 0));
    EXPECT_THROW(QMatrix(2, 3) * QMatrix(2, 3), RingMismatch);
}

TEST(Representations, ClosedFormEntries) {
    const auto c = qexp_matrix_elements_closed_form(QExpKind::eq_qH_Tplus, 10);
    EXPECT_EQ(c(0, 0), QScalar(1));
    EXPECT_EQ(c(0, 1), QScalar::q_pow(-1));
    // e_{1/q}(T- q^{-H}): qbin(i, j) (-1)^{i-j} q^{(i-j)(i-1)} at i = 3, j = 1 (1-based)
    const auto d = qexp_matrix_elements_closed_form(QExpKind::e1q_Tminus_qmH, 10);
    EXPECT_EQ(d(2, 0), q_binomial(3, 1) * QScalar::q_pow(4));
    for (auto kind : {QExpKind::eq_qH_Tplus, QExpKind::e1q_Tminus_qmH, QExpKind::e1q_qH_Tminus, QExpKind::eq_Tplus_qmH}) {
        const auto cf = qexp_matrix_elements_closed_form(kind, 10), dr = qexp_matrix_elements_direct(kind, 10);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) EXPECT_EQ(cf(i, j), dr(i, j)) << qexp_kind_name(kind) << " " << i << "," << j;
    }
}

TEST(Representations, SerialAndParallelProductsAgree) {
    const auto g = symmetric_rep_sl2(12);
    const auto a = q_exp_matrix(g.Tplus[0], ExpBase::q), b = q_exp_matrix(g.Tminus[0], ExpBase::q_inverse);
    EXPECT_EQ(multiply_serial(a, b), multiply(a, b));
}

TEST(Representations, ParseSpec) {
    EXPECT_EQ(rep_from_spec("fund", 3).dim, 3);
    EXPECT_EQ(rep_from_spec("sym:4", 2).dim, 5);
    EXPECT_EQ(rep_from_spec("trunc:7", 2).dim, 7);
    EXPECT_THROW(rep_from_spec("sym:x", 2), std::invalid_argument);
    EXPECT_THROW(rep_from_spec("spin:2", 2), std::invalid_argument);
}
