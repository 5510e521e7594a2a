#pragma once

#include "qcv/ring_matrix.hpp"

#include <string>
#include <vector>

namespace qcv {

using QMatrix = RingMatrix<QScalar>;

// Chevalley generators of U_q(sl_N) (or sl_2) in a matrix representation.
// Tplus/Tminus are the untwisted hatted generators; H is diagonal and its
// doubled diagonal entries are kept in h2 for building q-powers.
struct Generators {
    std::string label;
    int dim = 0;
    int rank = 0;
    std::vector<QMatrix> H, Tplus, Tminus;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> h2;
    // The relations hold on the leading exact_size x exact_size block
    // (equal to dim except for truncated infinite-dimensional modules).
    int exact_size = 0;
};

struct RelationCheck {
    bool ok = true;
    std::string failure;
};

// Checks q^{H_i} T_{+-j} q^{-H_i} = q^{+-C_ij/2} T_{+-j} and
// [T_{+i}, T_{-j}] = delta_ij (q^{2H_i} - q^{-2H_i})/(q - q^{-1}) on the
// leading `block` rows and columns (defaults to exact_size).
RelationCheck check_relations(const Generators &g, int block = -1);

Generators fundamental_rep(int n);
Generators symmetric_rep_sl2(int k);
Generators truncated_lowest_weight_rep(int m);
// "fund:<N>" style labels are produced by the constructors; this parses the
// command-line form fund | sym:<k> | trunc:<M> (fund needs the size N).
Generators rep_from_spec(const std::string &spec, int fundamental_size);

enum class Twist { positive, negative };

struct TwistedGenerators {
    std::vector<QMatrix> Tplus, Tminus;
};

// positive: T_+ = q^H T^_+, T_- = T^_- q^{-H}
// negative: T_- = q^H T^_-, T_+ = T^_+ q^{-H}
TwistedGenerators twist(const Generators &g, Twist sign);

// Diagonal S with S T_{+-i} S^{-1} = T^_{+-i} for every root, where T_{+-}
// are the twisted generators; S(0,0) = 1. Throws RelationCheckFailed when no
// such S exists for the representation.
QMatrix twist_normalizer(const Generators &g, Twist sign);

// q^{m H_i} as a diagonal scalar matrix.
QMatrix q_power_H(const Generators &g, int root, int m);

// diag(z^{h_jj}) for a diagonal H with half-integer entries.
RingMatrix<TorusElement> diagonal_power(const ContextPtr &ctx, int var, const QMatrix &h);
RingMatrix<TorusElement> diagonal_power(const ContextPtr &ctx, int var, const std::vector<int> &h2);

enum class QExpKind {
    eq_qH_Tplus,      // e_q(q^H T^_+)
    e1q_Tminus_qmH,   // e_{1/q}(T^_- q^{-H})
    e1q_qH_Tminus,    // e_{1/q}(q^H T^_-)
    eq_Tplus_qmH,     // e_q(T^_+ q^{-H})
};

const char *qexp_kind_name(QExpKind k);

// Matrix elements from the q-binomial closed forms, m x m.
QMatrix qexp_matrix_elements_closed_form(QExpKind kind, int m);
// The same q-exponential computed as a series from truncated_lowest_weight_rep(m).
QMatrix qexp_matrix_elements_direct(QExpKind kind, int m);

} // namespace qcv
