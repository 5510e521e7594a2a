#include "qcv/verify.hpp"

#include "qcv/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qcv {

namespace {

// The left-hand series alternates with terms up to ~1e24 around a sum of
// ~1e-13 on the required grid, so doubles are useless here.
using Real = boost::multiprecision::cpp_bin_float_100;

constexpr int kMaxTerms = 200000;

Real binomial(int n, int k) {
    Real r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// 2F1(a, b; c; z) for |z| < 1, summed until the terms decrease and fall below
// 1e-80 of the largest partial sum seen.
Real hyp2f1_series(int a, int b, int c, const Real &z) {
    Real term = 1, sum = 1, peak = 1;
    const Real eps("1e-80");
    for (int j = 0; j < kMaxTerms; ++j) {
        const Real next = term * (a + j) * (b + j) / ((c + j) * Real(j + 1)) * z;
        const bool shrinking = abs(next) <= abs(term);
        term = next;
        sum += term;
        peak = std::max(peak, abs(sum));
        if (term == 0 || (shrinking && abs(term) < eps * peak)) return sum;
    }
    throw ConvergenceFailure("2F1(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) +
                             "; z) did not settle within " + std::to_string(kMaxTerms) + " terms");
}

struct Sides {
    Real lhs, rhs, scale;
};

// RHS: (-1)^{n+1} n x (1+x)^{-(m+n)} 2F1(1-m, 1-n; 2; -x), a finite sum.
// scale is the prefactor times the sum of absolute terms, the natural size of
// rounding error when the sum cancels to zero.
Sides sides(int n, int m, double xd) {
    const Real x = xd;
    Sides s;
    s.lhs = pow(x, -m) * binomial(m - 1, n - 1) * hyp2f1_series(m, m + 1, m - n + 1, -1 / x);
    Real term = 1, sum = 1, abs_sum = 1;
    for (int j = 0; j < std::min(m, n) - 1; ++j) {
        term = term * (1 - m + j) * (1 - n + j) / ((2 + j) * Real(j + 1)) * (-x);
        sum += term;
        abs_sum += abs(term);
    }
    const Real pre = (n % 2 ? 1 : -1) * n * x / pow(1 + x, m + n);
    s.rhs = pre * sum;
    s.scale = abs(pre) * abs_sum;
    return s;
}

std::string fmt(const Real &r) {
    std::ostringstream os;
    os << std::setprecision(17) << r;
    return os.str();
}

} // namespace

HyperSides hypergeometric_sides(int n, int m, double x) {
    const auto s = sides(n, m, x);
    return {static_cast<double>(s.lhs), static_cast<double>(s.rhs)};
}

VerificationReport verify_hypergeometric_q1(int n_max, int k_max, const std::vector<double> &xs, double tol) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "hypergeometric";
    r.eq_tag = "classical-mutation-hypergeometric";
    std::string xl;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::ostringstream os;
        os << xs[i];
        xl += (i ? "," : "") + os.str();
    }
    r.param("n_max", static_cast<long>(n_max)).param("k_max", static_cast<long>(k_max)).param("x", xl).param("tol", tol);
    if (!(tol > 0)) throw std::invalid_argument("hypergeometric: tolerance must be positive");
    for (double x : xs)
        if (!(std::abs(x) > 1)) throw std::invalid_argument("hypergeometric: need |x| > 1");

    const int nk = (k_max + 1) * static_cast<int>(xs.size());
    const int total = n_max * nk;
    std::vector<double> rel(static_cast<std::size_t>(total));
    std::vector<std::string> lhs(rel.size()), rhs(rel.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < total; ++idx) {
        const int n = idx / nk + 1, k = idx % nk / static_cast<int>(xs.size());
        const double x = xs[static_cast<std::size_t>(idx % static_cast<int>(xs.size()))];
        try {
            const auto s = sides(n, n + k, x);
            const Real den = std::max({abs(s.lhs), abs(s.rhs), s.scale});
            rel[static_cast<std::size_t>(idx)] = static_cast<double>(abs(s.lhs - s.rhs) / den);
            lhs[static_cast<std::size_t>(idx)] = fmt(s.lhs);
            rhs[static_cast<std::size_t>(idx)] = fmt(s.rhs);
        } catch (...) {
#pragma omp critical(qcv_hyper_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    double worst = 0;
    for (int idx = 0; idx < total; ++idx) {
        const double d = rel[static_cast<std::size_t>(idx)];
        worst = std::max(worst, d);
        if (!(d < tol) && r.passed) {
            const int n = idx / nk + 1, k = idx % nk / static_cast<int>(xs.size());
            std::ostringstream where;
            where << "n=" << n << ", k=" << k << ", x=" << xs[static_cast<std::size_t>(idx % static_cast<int>(xs.size()))]
                  << " (relative difference " << d << ")";
            r.fail(where.str(), rhs[static_cast<std::size_t>(idx)], lhs[static_cast<std::size_t>(idx)]);
        }
    }
    std::ostringstream os;
    os << "max relative difference " << worst;
    r.notes.push_back(os.str());
    r.elapsed_ms = sw.ms();
    return r;
}

} // namespace qcv
