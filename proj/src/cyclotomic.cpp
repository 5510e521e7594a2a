#include "qcv/cyclotomic.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qcv {

int euler_phi(int d) {
    if (d < 1) throw std::invalid_argument("euler_phi: d must be positive");
    int result = d, n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::mutex cache_mutex;
std::map<int, LaurentPoly> cache;

LaurentPoly compute(int d) {
    LaurentPoly p = LaurentPoly::monomial(1, d) - LaurentPoly(1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = p.exact_div(cyclotomic(e));
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        p = std::move(*q);
    }
    return p;
}

} // namespace

const LaurentPoly &cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly p = compute(d);
    std::lock_guard<std::mutex> lock(cache_mutex);
    // std::map never moves its nodes, so the reference stays valid.
    return cache.emplace(d, std::move(p)).first->second;
}

std::optional<LaurentPoly> divide_by_cyclotomic(const LaurentPoly &p, int d) {
    if (p.is_zero()) return LaurentPoly{};
    const LaurentPoly &phi = cyclotomic(d);
    const int span = p.high() - p.low();
    if (span < phi.high()) return std::nullopt;
    double l1 = 0;
    std::complex<double> val = p.eval_root_of_unity(d, &l1);
    if (std::isfinite(l1) && std::isfinite(val.real()) && std::isfinite(val.imag())) {
        const double bound = 8.0 * (span + d + 8) * DBL_EPSILON * l1;
        if (std::abs(val) > bound) return std::nullopt;
    }
    return p.exact_div(phi);
}

} // namespace qcv
