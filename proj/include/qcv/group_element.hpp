#pragma once

#include "qcv/rep_matrices.hpp"

#include <string>
#include <vector>

namespace qcv {

using TorusMatrix = RingMatrix<TorusElement>;

// MV and FG use positively twisted generators, the primed forms negatively
// twisted ones.
enum class BlockForm { MV, FG, MVprime, FGprime };

const char *block_form_name(BlockForm f);

// Relations imposed on the MV coordinates. standard: q^phi psi = q^2 psi q^phi
// and q^phi chi = q^2 chi q^phi; commuting: everything commutes; half: q
// instead of q^2.
enum class MVVariant { standard, commuting, half };

// n(n+1)/2
int num_blocks(int n);

// Simple root (1-based) of block i (1-based): runs n, n-1, ..., 1 each
// counting up from 1.
int square_bracket(int n, int i);

// Signed letters: +r for the positive root, -r for the negative one.
std::vector<int> word_D(int n);
std::string word_D_string(int n);

struct Seed {
    int n = 0;
    std::vector<std::string> variables; // w_i, x_i, y_i per block
    std::vector<int> D;
    std::vector<std::vector<int>> epsilon;
    std::vector<int> d;
};

Seed cluster_seed(int n);
std::string seed_to_json(const Seed &s, int indent = 2);
Seed seed_from_json(const std::string &text);

// Torus contexts. Variables are named with the block index appended, e.g.
// w1, x1, y1, w2, ...; MV uses psi, qphi (= q^phi), chi; the primed forms
// use a, b, c and alpha, qbeta (= q^beta), gamma.
ContextPtr fg_context(int n);
ContextPtr mv_context(int n, MVVariant variant = MVVariant::standard);
ContextPtr fgprime_context(int n);
ContextPtr mvprime_context(int n);
// w_i, x_i for the first n blocks.
ContextPtr leaf_context(int n);

TorusMatrix building_block(int n, int i, BlockForm form, const Generators &rep, const ContextPtr &ctx);

struct GroupElement {
    int n = 0;
    BlockForm form = BlockForm::FG;
    std::string rep_label;
    ContextPtr ctx;
    TorusMatrix matrix;
};

// Ordered product of building_block(n, i, ...) for i = 1 .. n(n+1)/2.
GroupElement group_element(int n, BlockForm form, const Generators &rep, const ContextPtr &ctx);

// MV-ordered product with generators twisted by `sign`; sign = positive
// gives group_element(n, MV, ...).
TorusMatrix mv_group_element(int n, const Generators &rep, const ContextPtr &mv, Twist sign);

// q^phi_i -> w_i x_i y_i, psi_i -> w_i, chi_i -> y_i.
std::vector<MonomialImage> mv_to_fg_map(int n, const ContextPtr &mv, const ContextPtr &fg);
// q^beta_i -> a_i b_i c_i, alpha_i -> 1/a_i, gamma_i -> 1/c_i.
std::vector<MonomialImage> mvprime_to_fgprime_map(int n, const ContextPtr &mvp, const ContextPtr &fgp);

TorusMatrix substitute_matrix(const ContextPtr &src, const ContextPtr &dst, const std::vector<MonomialImage> &map,
                              const TorusMatrix &m);

enum class CoproductRoute {
    // Psi^L Psi^Rt Phi^L Phi^R X^Lt X^R per block
    factorized,
    // e_q(psi Delta T_+) Delta(q^{phi H}) e_{1/q}(chi Delta T_-) per block
    direct,
};

// Delta(g) for g in MV form, computed from the comultiplication rules of the
// given twist (the generators are twisted the same way). Only the positive
// twist has a factorized form.
TorusMatrix coproduct_group_element(int n, const Generators &rep, const ContextPtr &mv,
                                    CoproductRoute route = CoproductRoute::factorized,
                                    Twist sign = Twist::positive);

// prod_{i<=n} w_i^{H_i} e_q(T_{+i}) x_i^{H_i} e_{1/q}(T_{-i}) over leaf_context(n).
TorusMatrix symplectic_leaf(int n, const Generators &rep, const ContextPtr &leaf);
// The same product built in the FG torus, then projected by y_i -> 1.
TorusMatrix symplectic_leaf_by_projection(int n, const Generators &rep, const ContextPtr &leaf);

// Entrywise coefficient evaluation at v = v0, landing in ctx.
TorusMatrix evaluate_matrix(const TorusMatrix &m, const BigRational &v0, const ContextPtr &ctx);

} // namespace qcv
