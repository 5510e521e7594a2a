#pragma once

#include "qcv/group_element.hpp"
#include "qcv/report.hpp"
#include "qcv/skew_series.hpp"
#include "qcv/xseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qcv {

// First differing entry in row-major order; `index` renders a 0-based
// (row, col) pair for the report.
template <class R>
std::optional<Mismatch> first_matrix_mismatch(
    const RingMatrix<R> &expected, const RingMatrix<R> &actual,
    const std::function<std::string(int, int)> &index = nullptr) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        return Mismatch{"shape", std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                        std::to_string(actual.rows()) + "x" + std::to_string(actual.cols())};
    for (int i = 0; i < expected.rows(); ++i)
        for (int j = 0; j < expected.cols(); ++j)
            if (expected(i, j) != actual(i, j)) {
                std::string where = index ? index(i, j)
                                          : "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return Mismatch{where, RingOps<R>::to_string(expected(i, j)), RingOps<R>::to_string(actual(i, j))};
            }
    return std::nullopt;
}

// ---- group element ----------------------------------------------------------

struct DefiningOptions {
    MVVariant variant = MVVariant::standard;
    Twist twist = Twist::positive;
    CoproductRoute route = CoproductRoute::factorized;
};

// Delta(g) == g (x) g entrywise for g in MV form.
VerificationReport verify_defining_equation(int n, const Generators &rep, const DefiningOptions &opt = {});

// Runs the defining equation with commuting dual variables, with the half
// relations and with the negative twist; passes iff every one of them fails
// with a concrete mismatch.
VerificationReport verify_defining_controls(int n);

// MV group element mapped by q^phi = w x y, psi = w, chi = y equals the FG one.
VerificationReport verify_mv_fg_equivalence(int n, const Generators &rep);

// MVprime mapped by q^beta = a b c, alpha = 1/a, gamma = 1/c equals FGprime.
VerificationReport verify_mvprime_fgprime_equivalence(int n, const Generators &rep);

// Leaf built directly equals the y -> 1 projection of the FG product, and
// its v = 1 limit equals the commutative product of classical factors.
VerificationReport verify_symplectic_leaf(int n, const Generators &rep);

// ---- mutation -----------------------------------------------------------------

struct MutationOptions {
    int guard = 8;
    // Cross-check with the plain RingMatrix<XSeries> product.
    bool generic_route = false;
    // Only compare rows/columns below this size (truncated representations).
    int block = -1;
};

// e_q(q^H T^_+) x^H e_{1/q}(T^_- q^{-H})
//   == e_q(q^{2H} x/(q - 1/q)) e_{1/q}(q^H T^_-) x^{-H} e_q(T^_+ q^{-H}) e_{1/q}(q^{-2H} x/(1/q - q))
// coefficientwise in x^{1/2} over the window of doubled degrees
// [min LHS - guard, max LHS + guard], for simple root `root` of rep.
VerificationReport verify_mutation(const Generators &rep, int root = 0, const MutationOptions &opt = {});

// The same identity for H_[i], T^_{+-[i]} inside the fundamental
// representation of sl_{n+1}.
VerificationReport verify_mutation_slN(int n, int i, const MutationOptions &opt = {});

struct MutationExtraction {
    TorusElement a, b, c;
    TorusElement a_classical, b_classical, c_classical;
};

// Solves the equality of the FG and FG' fundamental sl_2 blocks for a, b, c
// and checks a = w(1 + qx), b = 1/x, c = y(1 + qx) plus the v = 1 limit.
VerificationReport verify_mutation_extraction(MutationExtraction *out = nullptr);

// Truncated lowest-weight representation; exploratory, not part of the
// required checks.
VerificationReport verify_mutation_truncated(int m, const MutationOptions &opt = {});

// ---- series identities -----------------------------------------------------

// e_q(y) e_q(x) == e_q(x + y) for xy = q^kappa yx up to total degree D.
VerificationReport check_qexp_factorization(int degree, QBase base, int kappa);
// Both required cases (kappa = 2 with base q, kappa = -2 with base 1/q).
VerificationReport check_qexp_factorization(int degree);

struct AlbegaResult {
    SkewSeries alpha, qbetahalf, gamma;
    VerificationReport report;
};

// q^{beta/2} = Q + psi Q^{-1} chi, with alpha, gamma solved from
// psi Q^{-1} = q^{beta/2} gamma and Q^{-1} chi = alpha q^{beta/2}. Checks
// agreement with the closed forms, alpha q^{beta/2} gamma + q^{-beta/2} = Q^{-1},
// q^beta alpha = q^2 alpha q^beta, q^beta gamma = q^2 gamma q^beta and
// alpha gamma = gamma alpha. `perturbed` uses Q + psi Q chi instead.
AlbegaResult compute_albega(int degree, bool perturbed = false);

// B' in MVprime form with alpha, beta, gamma from compute_albega equals B in
// MV form, as matrices over the degree-truncated series ring (sl_2).
VerificationReport verify_fourth_mv_equation(const Generators &rep, int degree, bool perturb_gamma = false);

// (w(1 + qx))^n = w^n prod_i (1 + q^{2i-1} x) and
// (y(1 + qx))^n = prod_i (1 + q^{-(2i-1)} x) y^n for n = 1..n_max.
VerificationReport verify_apow(int n_max);

// The four q-binomial closed forms against the series on the leading
// (m - guard) block.
VerificationReport verify_qexp_closed_forms(int m, int guard = 2);

// check_relations for fundamental_rep(N), N = 2..fund_max, symmetric_rep_sl2(k),
// k = 1..sym_max, and the interior of truncated_lowest_weight_rep(trunc_m).
VerificationReport verify_representation_relations(int fund_max, int sym_max, int trunc_m);

// ---- q = 1 -------------------------------------------------------------------

VerificationReport verify_hypergeometric_q1(int n_max, int k_max, const std::vector<double> &xs, double tol);

struct HyperSides {
    double lhs, rhs;
};
// Both sides at one grid point, rounded to double after the multiprecision sum.
HyperSides hypergeometric_sides(int n, int m, double x);

} // namespace qcv
