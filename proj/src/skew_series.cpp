#include "qcv/skew_series.hpp"

#include "qcv/errors.hpp"
#include "qcv/qcombinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace qcv {

SeriesContextPtr make_series_context(int degree, int kappa, int lambda_psi, int lambda_chi) {
    if (degree < 1) throw std::invalid_argument("series context: degree must be at least 1");
    return std::make_shared<const SeriesContext>(SeriesContext{degree, kappa, lambda_psi, lambda_chi});
}

SkewSeries::SkewSeries(const QScalar &c) {
    if (!c.is_zero()) terms_.push_back({0, 0, 0, c});
}

SkewSeries SkewSeries::monomial(SeriesContextPtr ctx, int a, int m, int b, QScalar c) {
    if (!ctx) throw std::invalid_argument("SkewSeries::monomial: null context");
    if (a < 0 || b < 0) throw std::invalid_argument("SkewSeries::monomial: negative psi/chi degree");
    SkewSeries s;
    s.ctx_ = std::move(ctx);
    if (!c.is_zero() && a + b <= s.ctx_->degree) s.terms_.push_back({a, m, b, std::move(c)});
    return s;
}

QScalar SkewSeries::coeff(int a, int m, int b) const {
    for (const auto &t : terms_)
        if (t.a == a && t.m == m && t.b == b) return t.coeff;
    return QScalar{};
}

SkewSeries SkewSeries::degree_zero_part() const {
    SkewSeries s;
    s.ctx_ = ctx_;
    for (const auto &t : terms_)
        if (t.a + t.b == 0) s.terms_.push_back(t);
    return s;
}

SkewSeries SkewSeries::truncated(int d) const {
    SkewSeries s;
    s.ctx_ = ctx_;
    for (const auto &t : terms_)
        if (t.a + t.b <= d) s.terms_.push_back(t);
    return s;
}

void SkewSeries::adopt(const SeriesContextPtr &c) {
    if (!c) return;
    if (ctx_ && ctx_ != c && !(*ctx_ == *c)) throw ContextMismatch("skew series over different contexts");
    if (!ctx_) ctx_ = c;
}

void SkewSeries::normalize() {
    const auto key = [](const Term &t) { return std::make_tuple(t.a + t.b, t.a, t.m, t.b); };
    std::sort(terms_.begin(), terms_.end(), [&](const Term &x, const Term &y) { return key(x) < key(y); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!out.empty() && key(out.back()) == key(t))
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

SkewSeries &SkewSeries::operator+=(const SkewSeries &o) {
    adopt(o.ctx_);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

SkewSeries &SkewSeries::operator-=(const SkewSeries &o) { return *this += -o; }

SkewSeries SkewSeries::operator-() const {
    SkewSeries s = *this;
    for (auto &t : s.terms_) t.coeff = -t.coeff;
    return s;
}

SkewSeries SkewSeries::scaled(const QScalar &c) const {
    SkewSeries s;
    s.ctx_ = ctx_;
    if (c.is_zero()) return s;
    s.terms_ = terms_;
    for (auto &t : s.terms_) t.coeff *= c;
    return s;
}

SkewSeries series_mul(const SkewSeries &x, const SkewSeries &y) {
    SkewSeries r;
    r.ctx_ = x.ctx_;
    r.adopt(y.ctx_);
    const SeriesContext *c = r.ctx_.get();
    for (const auto &s : x.terms_)
        for (const auto &t : y.terms_) {
            const int deg = s.a + s.b + t.a + t.b;
            if (c && deg > c->degree) continue;
            // (psi^a Q^m chi^b)(psi^c Q^n chi^d) = q^{lp m c - lc n b - kappa b c} psi^{a+c} Q^{m+n} chi^{b+d}
            int qexp = 0;
            if (c) qexp = c->lambda_psi * s.m * t.a - c->lambda_chi * t.m * s.b - c->kappa * s.b * t.a;
            QScalar coeff = s.coeff * t.coeff;
            if (qexp != 0) coeff = coeff.shifted(2 * qexp);
            r.terms_.push_back({s.a + t.a, s.m + t.m, s.b + t.b, std::move(coeff)});
        }
    r.normalize();
    return r;
}

SkewSeries operator*(const SkewSeries &x, const SkewSeries &y) { return series_mul(x, y); }

bool SkewSeries::operator==(const SkewSeries &o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto &s = terms_[k];
        const auto &t = o.terms_[k];
        if (s.a != t.a || s.m != t.m || s.b != t.b || s.coeff != t.coeff) return false;
    }
    return true;
}

std::string SkewSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto &t = terms_[k];
        if (k) os << " + ";
        os << "(" << t.coeff.to_string() << ")";
        if (t.a) os << "*psi" << (t.a != 1 ? "^" + std::to_string(t.a) : "");
        if (t.m) os << "*Q" << (t.m != 1 ? "^(" + std::to_string(t.m) + ")" : "");
        if (t.b) os << "*chi" << (t.b != 1 ? "^" + std::to_string(t.b) : "");
    }
    return os.str();
}

SkewSeries series_invert(const SkewSeries &x) {
    if (!x.context()) {
        if (x.terms().size() != 1) throw NotInvertible("series_invert: zero has no inverse");
        return SkewSeries(QScalar(1) / x.terms()[0].coeff);
    }
    SkewSeries u = x.degree_zero_part();
    if (u.terms().size() != 1)
        throw NotInvertible("series_invert: degree-zero part is not a single monomial unit");
    const auto &ut = u.terms()[0];
    SkewSeries u_inv = SkewSeries::monomial(x.context(), 0, -ut.m, 0, QScalar(1) / ut.coeff);
    SkewSeries n = u_inv * x - SkewSeries::monomial(x.context(), 0, 0, 0);
    SkewSeries minus_n = -n;
    SkewSeries sum = SkewSeries::monomial(x.context(), 0, 0, 0);
    SkewSeries power = sum;
    for (int k = 1; k <= x.context()->degree; ++k) {
        power = power * minus_n;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * u_inv;
}

SkewSeries qexp_series(const SkewSeries &arg, QBase base) {
    if (!arg.degree_zero_part().is_zero())
        throw NonNilpotentArgument("qexp_series: argument has a degree-zero part");
    SkewSeries one(QScalar(1));
    if (arg.is_zero()) return one;
    SkewSeries sum = SkewSeries::monomial(arg.context(), 0, 0, 0);
    SkewSeries term = sum;
    const int sign = base == QBase::q ? -1 : 1;
    for (int n = 1; n <= arg.context()->degree; ++n) {
        // term_n = term_{n-1} * arg * base^{-(n-1)} / [n]
        term = (term * arg).scaled(QScalar::q_pow(sign * (n - 1)) * q_int_inverse(n));
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

} // namespace qcv
