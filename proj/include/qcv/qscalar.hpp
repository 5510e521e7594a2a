#pragma once

#include "qcv/laurent_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcv {

// Element of Q(v), v = q^{1/2}.
//
// Canonical form: num / den with den a monic polynomial, den(0) != 0 and
// gcd(num, den) = 1. The denominator is kept factored as
//     den = prod_d Phi_d(v)^{e_d} * R(v)
// where R has no cyclotomic factor. Denominators produced by q-integers and
// q-factorials are pure cyclotomic products, so sums and products of such
// values never need a polynomial gcd; only R (rare) goes through Euclid.
class QScalar {
public:
    using CycloExps = std::vector<std::pair<int, int>>; // (d, e_d > 0), d ascending

    QScalar() = default;
    QScalar(long c) : num_(c) {}
    QScalar(const BigRational &c) : num_(c) {}
    QScalar(const LaurentPoly &p) : num_(p) {}
    QScalar(LaurentPoly &&p) : num_(std::move(p)) {}

    // v^k
    static QScalar v_pow(int k);
    // q^k = v^{2k}
    static QScalar q_pow(int k) { return v_pow(2 * k); }
    static QScalar fraction(const LaurentPoly &num, const LaurentPoly &den);
    // c * v^shift * prod_d Phi_d^{e_d} with e_d of either sign.
    static QScalar from_cyclotomic(const BigRational &c, int shift,
                                   const std::vector<std::pair<int, int>> &exps);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return has_unit_den() && num_.is_one(); }
    bool is_polynomial() const { return has_unit_den(); }
    bool is_monomial() const { return has_unit_den() && num_.is_monomial(); }

    const LaurentPoly &numerator() const { return num_; }
    LaurentPoly denominator() const;
    const CycloExps &cyclotomic_part() const { return cyclo_; }

    QScalar &operator+=(const QScalar &o);
    QScalar &operator-=(const QScalar &o);
    QScalar &operator*=(const QScalar &o);
    QScalar &operator/=(const QScalar &o);
    friend QScalar operator+(QScalar a, const QScalar &b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar &b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar &b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar &b) { return a /= b; }
    QScalar operator-() const;
    QScalar inverse() const;
    // Multiplication by v^k.
    QScalar shifted(int k) const;

    bool operator==(const QScalar &o) const {
        return num_ == o.num_ && cyclo_ == o.cyclo_ && resid_ == o.resid_;
    }
    bool operator!=(const QScalar &o) const { return !(*this == o); }

    // Exact substitution v -> v0. Throws PoleError at a pole.
    BigRational evaluate(const BigRational &v0) const;
    double evaluate(double v0) const;

    std::string to_string() const;
    std::size_t hash() const;

private:
    LaurentPoly num_;
    CycloExps cyclo_;
    LaurentPoly resid_; // zero encodes R = 1

    bool has_unit_den() const { return cyclo_.empty() && resid_.is_zero(); }
    void cancel();
    LaurentPoly expand_cyclo(const CycloExps &exps) const;
};

inline QScalar operator*(const QScalar &a, long c) { return a * QScalar(c); }

} // namespace qcv
