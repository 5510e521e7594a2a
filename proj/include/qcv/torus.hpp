#pragma once

#include "qcv/qscalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qcv {

// Named generators z_1..z_n with z_a z_b = q^{omega_ab} z_b z_a.
class TorusContext {
public:
    TorusContext(std::vector<std::string> names, std::vector<int> omega);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string> &names() const { return names_; }
    const std::string &name(int a) const { return names_[static_cast<std::size_t>(a)]; }
    int omega(int a, int b) const { return omega_[static_cast<std::size_t>(a * size() + b)]; }
    const std::vector<int> &omega_matrix() const { return omega_; }
    // -1 if absent
    int index(const std::string &name) const;
    bool same_as(const TorusContext &o) const;

private:
    std::vector<std::string> names_;
    std::vector<int> omega_;
};

using ContextPtr = std::shared_ptr<const TorusContext>;

ContextPtr make_context(std::vector<std::string> names, std::vector<int> omega);

// Doubled exponents: entry e_a stands for z_a^{e_a/2}.
using Exponents = std::vector<int>;

// Finite sum of normal-ordered monomials c * z_1^{e_1/2} z_2^{e_2/2} ... z_n^{e_n/2}.
//
// An element without a context is a pure scalar; it adopts the context of
// whatever it is combined with.
class TorusElement {
public:
    struct Term {
        Exponents exps;
        QScalar coeff;
    };

    TorusElement() = default;
    TorusElement(long c) : TorusElement(QScalar(c)) {}
    TorusElement(const QScalar &c);

    static TorusElement monomial(ContextPtr ctx, Exponents exps, QScalar c = QScalar(1));
    // z_a^{doubled/2}
    static TorusElement variable(ContextPtr ctx, int a, int doubled = 2);
    static TorusElement variable(ContextPtr ctx, const std::string &name, int doubled = 2);

    const ContextPtr &context() const { return ctx_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // Coefficient of the given normal-ordered monomial.
    QScalar coeff(const Exponents &exps) const;
    // Scalar part (coefficient of the empty monomial) if the element is a scalar.
    bool is_scalar() const;

    TorusElement &operator+=(const TorusElement &o);
    TorusElement &operator-=(const TorusElement &o);
    friend TorusElement operator+(TorusElement a, const TorusElement &b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement &b) { return a -= b; }
    friend TorusElement operator*(const TorusElement &a, const TorusElement &b);
    TorusElement &operator*=(const TorusElement &o) { return *this = *this * o; }
    TorusElement operator-() const;
    TorusElement scaled(const QScalar &c) const;

    // Structural equality; a context-free scalar equals the same scalar in any context.
    bool operator==(const TorusElement &o) const;
    bool operator!=(const TorusElement &o) const { return !(*this == o); }

    // m^{-1} for a single monomial m.
    TorusElement monomial_inverse() const;

    // sum_k a_k * b_k with a single normal-ordering pass.
    static TorusElement sum_of_products(const std::vector<const TorusElement *> &a,
                                        const std::vector<const TorusElement *> &b);

    // Coefficients evaluated at v = v0; the result lives in ctx (or the same
    // context when ctx is null).
    TorusElement evaluate_coefficients(const BigRational &v0, ContextPtr ctx = nullptr) const;

    // Canonical text: terms in normal order, exponents as halves.
    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;

    friend class TorusAccumulator;
    void normalize();
    void adopt(const ContextPtr &ctx);
};

// v-exponent of the reordering phase for N(e) N(f) = v^{phase} N(e + f).
int torus_phase(const TorusContext &ctx, const Exponents &e, const Exponents &f);

// Image of a generator under a substitution: z_a -> v^{vshift} N(exps).
struct MonomialImage {
    Exponents exps;
    int vshift = 0;
};

// Checks that the images satisfy the source relations; throws SkewIncompatible
// naming the first offending pair.
void check_skew_compatible(const TorusContext &src, const TorusContext &dst,
                           const std::vector<MonomialImage> &map);

// Algebra homomorphism induced by the map; half powers z^{1/2} go to the
// Weyl-ordered square root of the image.
TorusElement torus_substitute(const ContextPtr &src, const ContextPtr &dst,
                              const std::vector<MonomialImage> &map, const TorusElement &a);

// Reindexes into dst by variable name, setting every variable that dst lacks
// to 1. This is a projection, not a homomorphism; it is only meaningful when
// the dropped variables sit rightmost in every monomial they occur in.
TorusElement drop_variables(const TorusElement &a, const ContextPtr &dst);

std::string format_exponent(int doubled);

} // namespace qcv
