#include "qcv/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qcv {

QScalar q_int(int n) {
    if (n == 0) return QScalar{};
    if (n < 0) return -q_int(-n);
    std::vector<BigRational> c(static_cast<std::size_t>(4 * (n - 1) + 1));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(4 * j)] = 1;
    return QScalar(LaurentPoly::from_dense(-2 * (n - 1), c));
}

QScalar q_int_inverse(int n) {
    if (n == 0) throw std::domain_error("q_int_inverse: [0] = 0");
    if (n < 0) return -q_int_inverse(-n);
    // [n] = v^{2-2n} (v^{4n} - 1)/(v^4 - 1) = v^{2-2n} prod_{d | 4n, d does not divide 4} Phi_d
    std::vector<std::pair<int, int>> exps;
    for (int d = 1; d <= 4 * n; ++d)
        if ((4 * n) % d == 0 && 4 % d != 0) exps.emplace_back(d, -1);
    return QScalar::from_cyclotomic(1, 2 * n - 2, exps);
}

QScalar q_factorial(int n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    QScalar r(1);
    for (int j = 2; j <= n; ++j) r *= q_int(j);
    return r;
}

QScalar q_minus_q_inverse() {
    return QScalar(LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2));
}

namespace {
std::mutex binom_mutex;
std::vector<std::vector<QScalar>> binom_rows{{QScalar(1)}};
} // namespace

QScalar q_binomial(int n, int k) {
    if (n < 0) throw std::domain_error("q_binomial: negative n");
    if (k < 0 || k > n) return QScalar{};
    std::lock_guard<std::mutex> lock(binom_mutex);
    while (static_cast<int>(binom_rows.size()) <= n) {
        const int m = static_cast<int>(binom_rows.size());
        const auto &prev = binom_rows.back();
        std::vector<QScalar> row(static_cast<std::size_t>(m + 1));
        row[0] = QScalar(1);
        row[static_cast<std::size_t>(m)] = QScalar(1);
        // qbin(m, j) = q^j qbin(m-1, j) + q^{j-m} qbin(m-1, j-1)
        for (int j = 1; j < m; ++j)
            row[static_cast<std::size_t>(j)] =
                prev[static_cast<std::size_t>(j)].shifted(2 * j) +
                prev[static_cast<std::size_t>(j - 1)].shifted(2 * (j - m));
        binom_rows.push_back(std::move(row));
    }
    return binom_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace qcv
