#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcv {

// Arbitrary-precision rationals. mpq_class keeps numerator and denominator
// coprime with a positive denominator after every arithmetic operation.
using BigRational = mpq_class;
using BigInt = mpz_class;

// Finite sum of c_e v^e, e in Z, stored sparsely in ascending exponent order
// with no zero coefficients. The empty sum is 0.
class LaurentPoly {
public:
    struct Term {
        int exp;
        BigRational coeff;
        bool operator==(const Term &o) const { return exp == o.exp && coeff == o.coeff; }
    };

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const BigRational &c);

    static LaurentPoly monomial(const BigRational &c, int exp);
    // Builds from c[i] * v^(low + i); zeros are dropped.
    static LaurentPoly from_dense(int low, const std::vector<BigRational> &c);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    bool is_constant() const;
    int low() const { return terms_.front().exp; }
    int high() const { return terms_.back().exp; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term> &terms() const { return terms_; }
    BigRational coeff(int exp) const;
    const BigRational &leading() const { return terms_.back().coeff; }
    const BigRational &trailing() const { return terms_.front().coeff; }

    // Multiplication by v^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const BigRational &c) const;
    LaurentPoly monic() const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

    // Quotient a/d if d divides a in Q[v, 1/v], otherwise nullopt.
    std::optional<LaurentPoly> exact_div(const LaurentPoly &d) const;
    // Polynomial remainder of a mod d (both read as polynomials in v after
    // removing their lowest power of v).
    LaurentPoly rem(const LaurentPoly &d) const;
    // Monic gcd of the polynomial parts (powers of v ignored). gcd(0, 0) = 0.
    static LaurentPoly gcd(const LaurentPoly &a, const LaurentPoly &b);

    BigRational eval(const BigRational &x) const;
    double eval(double x) const;
    // Value at exp(2 pi i / d) together with the l1 norm of the coefficients
    // (both in double precision), used as a cheap divisibility prefilter.
    std::complex<double> eval_root_of_unity(int d, double *l1) const;

    std::string to_string(const char *var = "v") const;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
    void add_scaled(const LaurentPoly &o, int sign);
};

} // namespace qcv
