#pragma once

#include "qcv/qscalar.hpp"

#include <climits>
#include <string>
#include <vector>

namespace qcv {

// Commutative Laurent series in x^{1/2} over Q(v), known exactly up to a
// doubled degree: the stored terms are the true coefficients of every
// x^{d/2} with d <= valid(); higher coefficients are unknown. Exact
// polynomials have valid() == XSeries::exact.
class XSeries {
public:
    struct Term {
        int deg; // doubled degree
        QScalar coeff;
    };

    static constexpr long exact = LONG_MAX / 4;

    XSeries() = default;
    XSeries(long c) : XSeries(QScalar(c)) {}
    XSeries(const QScalar &c);

    // c x^{deg/2}
    static XSeries monomial(int deg, QScalar c = QScalar(1), long valid = exact);

    long valid() const { return valid_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return valid_ >= exact; }
    QScalar coeff(int deg) const;
    // Lowest doubled degree that may carry a nonzero coefficient.
    long lowest() const;
    XSeries truncated(long valid) const;

    XSeries &operator+=(const XSeries &o);
    XSeries &operator-=(const XSeries &o);
    friend XSeries operator+(XSeries a, const XSeries &b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries &b) { return a -= b; }
    friend XSeries operator*(const XSeries &a, const XSeries &b);
    XSeries &operator*=(const XSeries &o) { return *this = *this * o; }
    XSeries operator-() const;
    XSeries scaled(const QScalar &c) const;

    bool operator==(const XSeries &o) const;
    bool operator!=(const XSeries &o) const { return !(*this == o); }

    // Each coefficient evaluated at v = v0.
    XSeries evaluate_coefficients(const BigRational &v0) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_; // ascending degree, nonzero coefficients
    long valid_ = exact;
};

} // namespace qcv
