#pragma once

#include "qcv/qscalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qcv {

// Relations of the series algebra generated by psi, chi and an invertible Q:
//     Q psi = q^{lambda_psi} psi Q,  Q chi = q^{lambda_chi} chi Q,  psi chi = q^{kappa} chi psi.
// Terms with psi-degree + chi-degree > degree are discarded.
struct SeriesContext {
    int degree = 8;
    int kappa = 0;
    int lambda_psi = 1;
    int lambda_chi = 1;

    bool operator==(const SeriesContext &o) const {
        return degree == o.degree && kappa == o.kappa && lambda_psi == o.lambda_psi &&
               lambda_chi == o.lambda_chi;
    }
};

using SeriesContextPtr = std::shared_ptr<const SeriesContext>;

SeriesContextPtr make_series_context(int degree, int kappa = 0, int lambda_psi = 1, int lambda_chi = 1);

// Sum of c * psi^a Q^m chi^b (normal order: psi left, Q middle, chi right).
class SkewSeries {
public:
    struct Term {
        int a, m, b;
        QScalar coeff;
    };

    SkewSeries() = default;
    SkewSeries(long c) : SkewSeries(QScalar(c)) {}
    SkewSeries(const QScalar &c);

    static SkewSeries monomial(SeriesContextPtr ctx, int a, int m, int b, QScalar c = QScalar(1));
    static SkewSeries psi(SeriesContextPtr ctx) { return monomial(std::move(ctx), 1, 0, 0); }
    static SkewSeries chi(SeriesContextPtr ctx) { return monomial(std::move(ctx), 0, 0, 1); }
    static SkewSeries Q(SeriesContextPtr ctx, int m = 1) { return monomial(std::move(ctx), 0, m, 0); }

    const SeriesContextPtr &context() const { return ctx_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QScalar coeff(int a, int m, int b) const;
    // Terms of total psi,chi degree zero.
    SkewSeries degree_zero_part() const;
    // Drops terms of total degree above d.
    SkewSeries truncated(int d) const;

    SkewSeries &operator+=(const SkewSeries &o);
    SkewSeries &operator-=(const SkewSeries &o);
    friend SkewSeries operator+(SkewSeries x, const SkewSeries &y) { return x += y; }
    friend SkewSeries operator-(SkewSeries x, const SkewSeries &y) { return x -= y; }
    friend SkewSeries operator*(const SkewSeries &x, const SkewSeries &y);
    SkewSeries &operator*=(const SkewSeries &o) { return *this = *this * o; }
    SkewSeries operator-() const;
    SkewSeries scaled(const QScalar &c) const;
    bool operator==(const SkewSeries &o) const;
    bool operator!=(const SkewSeries &o) const { return !(*this == o); }

    std::string to_string() const;

private:
    SeriesContextPtr ctx_;
    std::vector<Term> terms_;

    void normalize();
    void adopt(const SeriesContextPtr &c);
    friend SkewSeries series_mul(const SkewSeries &, const SkewSeries &);
};

SkewSeries series_mul(const SkewSeries &x, const SkewSeries &y);

// Inverse of u (1 + N) with u a single monomial c Q^m and N of positive degree,
// as (1 + N)^{-1} u^{-1} summed to the truncation degree.
SkewSeries series_invert(const SkewSeries &x);

enum class QBase { q, q_inverse };

// sum_n arg^n / [n]! * base^{-n(n-1)/2}; arg must have no degree-zero part.
SkewSeries qexp_series(const SkewSeries &arg, QBase base);

} // namespace qcv
