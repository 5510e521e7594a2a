#pragma once

#include "qcv/errors.hpp"
#include "qcv/qcombinatorics.hpp"
#include "qcv/qscalar.hpp"
#include "qcv/torus.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

namespace qcv {

// Operations RingMatrix needs from an entry type. The defaults call members
// of the same name; QScalar and TorusElement get specialized versions.
template <class R>
struct RingOps {
    static bool is_zero(const R &r) { return r.is_zero(); }
    static R scale(const R &r, const QScalar &c) { return r.scaled(c); }
    static std::string to_string(const R &r) { return r.to_string(); }
    static R dot(const std::vector<const R *> &a, const std::vector<const R *> &b) {
        R acc(0);
        for (std::size_t k = 0; k < a.size(); ++k) acc += *a[k] * *b[k];
        return acc;
    }
};

template <>
struct RingOps<QScalar> {
    static bool is_zero(const QScalar &r) { return r.is_zero(); }
    static QScalar scale(const QScalar &r, const QScalar &c) { return r * c; }
    static std::string to_string(const QScalar &r) { return r.to_string(); }
    static QScalar dot(const std::vector<const QScalar *> &a, const std::vector<const QScalar *> &b) {
        QScalar acc;
        for (std::size_t k = 0; k < a.size(); ++k) acc += *a[k] * *b[k];
        return acc;
    }
};

template <>
struct RingOps<TorusElement> {
    static bool is_zero(const TorusElement &r) { return r.is_zero(); }
    static TorusElement scale(const TorusElement &r, const QScalar &c) { return r.scaled(c); }
    static std::string to_string(const TorusElement &r) { return r.to_string(); }
    static TorusElement dot(const std::vector<const TorusElement *> &a,
                            const std::vector<const TorusElement *> &b) {
        return TorusElement::sum_of_products(a, b);
    }
};

// Dense rows x cols matrix over R. Products keep the left factor's entries on
// the left, so noncommutative rings are handled faithfully.
template <class R>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), R(0)) {}

    static RingMatrix identity(int n) {
        RingMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }
    static RingMatrix zero(int n) { return RingMatrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_; }
    R &operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const R &operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool vanishes() const {
        return std::all_of(data_.begin(), data_.end(), [](const R &r) { return RingOps<R>::is_zero(r); });
    }

    RingMatrix &operator+=(const RingMatrix &o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    RingMatrix &operator-=(const RingMatrix &o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend RingMatrix operator+(RingMatrix a, const RingMatrix &b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix &b) { return a -= b; }

    RingMatrix scaled(const QScalar &c) const {
        RingMatrix r = *this;
        for (auto &x : r.data_) x = RingOps<R>::scale(x, c);
        return r;
    }

    // Entrywise R -> S.
    template <class S, class F>
    RingMatrix<S> map(F f) const {
        RingMatrix<S> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    bool operator==(const RingMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RingMatrix &o) const { return !(*this == o); }

    // Aligned text rendering of the entries.
    std::string pretty() const {
        std::vector<std::string> cells(data_.size());
        std::vector<std::size_t> width(static_cast<std::size_t>(cols_), 1);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                auto &c = cells[static_cast<std::size_t>(i * cols_ + j)];
                c = RingOps<R>::to_string((*this)(i, j));
                width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], c.size());
            }
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << "[ ";
            for (int j = 0; j < cols_; ++j) {
                const auto &c = cells[static_cast<std::size_t>(i * cols_ + j)];
                os << c << std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ');
                os << (j + 1 < cols_ ? " | " : " ]\n");
            }
        }
        return os.str();
    }

    void check_same_shape(const RingMatrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw RingMismatch("matrix shapes differ");
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

namespace detail {

template <class R>
R entry_product(const RingMatrix<R> &a, const RingMatrix<R> &b, int i, int j) {
    std::vector<const R *> left, right;
    for (int k = 0; k < a.cols(); ++k) {
        const R &x = a(i, k);
        if (RingOps<R>::is_zero(x)) continue;
        const R &y = b(k, j);
        if (RingOps<R>::is_zero(y)) continue;
        left.push_back(&x);
        right.push_back(&y);
    }
    if (left.empty()) return R(0);
    return RingOps<R>::dot(left, right);
}

} // namespace detail

// Reference product: plain triple loop on one thread.
template <class R>
RingMatrix<R> multiply_serial(const RingMatrix<R> &a, const RingMatrix<R> &b) {
    if (a.cols() != b.rows()) throw RingMismatch("matrix product: inner dimensions differ");
    RingMatrix<R> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c(i, j) = detail::entry_product(a, b, i, j);
    return c;
}

// Product with output entries distributed over OpenMP threads. Entries are
// independent, so the result is identical to multiply_serial.
template <class R>
RingMatrix<R> multiply(const RingMatrix<R> &a, const RingMatrix<R> &b) {
    if (a.cols() != b.rows()) throw RingMismatch("matrix product: inner dimensions differ");
    const int n = a.rows(), m = b.cols();
    if (n * m < 4 || omp_in_parallel()) return multiply_serial(a, b);
    RingMatrix<R> c(n, m);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < n * m; ++idx) {
        try {
            c(idx / m, idx % m) = detail::entry_product(a, b, idx / m, idx % m);
        } catch (...) {
#pragma omp critical(qcv_multiply_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return c;
}

template <class R>
RingMatrix<R> operator*(const RingMatrix<R> &a, const RingMatrix<R> &b) {
    return multiply(a, b);
}

// Ordered product m_0 m_1 ... m_{k-1}.
template <class R>
RingMatrix<R> product(const std::vector<RingMatrix<R>> &ms) {
    if (ms.empty()) throw std::invalid_argument("product of an empty list");
    RingMatrix<R> acc = ms.front();
    for (std::size_t k = 1; k < ms.size(); ++k) acc = acc * ms[k];
    return acc;
}

// (A (x) B)_{(i,k),(j,l)} = A_ij * B_kl, with the A entry on the left.
template <class R>
RingMatrix<R> kron(const RingMatrix<R> &a, const RingMatrix<R> &b) {
    const int ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    RingMatrix<R> k(ar * br, ac * bc);
    for (int i = 0; i < ar; ++i)
        for (int j = 0; j < ac; ++j) {
            const R &x = a(i, j);
            if (RingOps<R>::is_zero(x)) continue;
            for (int p = 0; p < br; ++p)
                for (int s = 0; s < bc; ++s) {
                    const R &y = b(p, s);
                    if (RingOps<R>::is_zero(y)) continue;
                    k(i * br + p, j * bc + s) = x * y;
                }
        }
    return k;
}

enum class ExpBase { q, q_inverse };

// sum_n A^n / [n]! * base^{-n(n-1)/2}, stopping at the first vanishing power.
// Degree-truncated rings make powers vanish once they leave the window.
template <class R>
RingMatrix<R> q_exp_matrix(const RingMatrix<R> &a, ExpBase base, int max_terms = 256) {
    if (a.rows() != a.cols()) throw RingMismatch("q_exp_matrix: matrix is not square");
    RingMatrix<R> sum = RingMatrix<R>::identity(a.rows());
    RingMatrix<R> term = sum;
    const int sign = base == ExpBase::q ? -1 : 1;
    for (int n = 1; n <= max_terms; ++n) {
        term = term * a;
        if (term.vanishes()) return sum;
        term = term.scaled(QScalar::q_pow(sign * (n - 1)) * q_int_inverse(n));
        sum += term;
    }
    throw NotNilpotent("q_exp_matrix: no power up to " + std::to_string(max_terms) + " vanishes");
}

// Lifts a scalar matrix into another ring entrywise.
template <class R>
RingMatrix<R> lift(const RingMatrix<QScalar> &m) {
    return m.template map<R>([](const QScalar &c) { return R(c); });
}

} // namespace qcv
