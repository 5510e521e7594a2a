#include "oracles.hpp"

#include <cmath>
#include <utility>

namespace oracle {

namespace {

mpq_class power(const mpq_class &x, int e) {
    mpq_class r = 1;
    const mpq_class b = e >= 0 ? x : mpq_class(1) / x;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

} // namespace

mpq_class q_int_at(int n, const mpq_class &v0) {
    return (power(v0, 2 * n) - power(v0, -2 * n)) / (power(v0, 2) - power(v0, -2));
}

mpq_class q_binomial_at(int n, int k, const mpq_class &v0) {
    if (k < 0 || k > n) return 0;
    mpq_class num = 1, den = 1;
    for (int i = 1; i <= n; ++i) num *= q_int_at(i, v0);
    for (int i = 1; i <= k; ++i) den *= q_int_at(i, v0);
    for (int i = 1; i <= n - k; ++i) den *= q_int_at(i, v0);
    return num / den;
}

NormalForm normal_order(const std::vector<int> &omega, int nvars, std::vector<Letter> word) {
    NormalForm out;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const auto a = word[i], b = word[i + 1];
            if (a.var > b.var) {
                out.phase += static_cast<long>(omega[static_cast<std::size_t>(a.var * nvars + b.var)]) * a.exp * b.exp;
                std::swap(word[i], word[i + 1]);
                swapped = true;
            }
        }
    }
    out.exps.assign(static_cast<std::size_t>(nvars), 0);
    for (const auto &l : word) out.exps[static_cast<std::size_t>(l.var)] += l.exp;
    return out;
}

std::vector<int> random_even_omega(int nvars, std::mt19937 &rng) {
    std::uniform_int_distribution<int> d(-1, 1);
    std::vector<int> w(static_cast<std::size_t>(nvars * nvars), 0);
    for (int a = 0; a < nvars; ++a)
        for (int b = a + 1; b < nvars; ++b) {
            const int x = 2 * d(rng);
            w[static_cast<std::size_t>(a * nvars + b)] = x;
            w[static_cast<std::size_t>(b * nvars + a)] = -x;
        }
    return w;
}

double hyper_rhs_n1(int m, double x) { return x / std::pow(1 + x, m + 1); }

double hyper_rhs_n2_m2(double x) { return (x * x - 2 * x) / std::pow(1 + x, 4); }

} // namespace oracle
