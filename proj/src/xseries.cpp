#include "qcv/xseries.hpp"

#include "qcv/torus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qcv {

namespace {
long sat_add(long a, long b) {
    long r = a + b;
    return std::min(r, XSeries::exact);
}
} // namespace

XSeries::XSeries(const QScalar &c) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

XSeries XSeries::monomial(int deg, QScalar c, long valid) {
    XSeries s;
    s.valid_ = valid;
    if (!c.is_zero() && deg <= valid) s.terms_.push_back({deg, std::move(c)});
    return s;
}

QScalar XSeries::coeff(int deg) const {
    for (const auto &t : terms_)
        if (t.deg == deg) return t.coeff;
    return QScalar{};
}

long XSeries::lowest() const {
    if (!terms_.empty()) return terms_.front().deg;
    return valid_ >= exact ? exact : valid_ + 1;
}

XSeries XSeries::truncated(long valid) const {
    XSeries s;
    s.valid_ = std::min(valid, valid_);
    for (const auto &t : terms_)
        if (t.deg <= s.valid_) s.terms_.push_back(t);
    return s;
}

XSeries &XSeries::operator+=(const XSeries &o) {
    valid_ = std::min(valid_, o.valid_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        Term t;
        if (j == o.terms_.end() || (i != terms_.end() && i->deg < j->deg))
            t = std::move(*i++);
        else if (i == terms_.end() || j->deg < i->deg)
            t = *j++;
        else {
            t = std::move(*i++);
            t.coeff += j->coeff;
            ++j;
        }
        if (t.deg <= valid_ && !t.coeff.is_zero()) out.push_back(std::move(t));
    }
    terms_ = std::move(out);
    return *this;
}

XSeries &XSeries::operator-=(const XSeries &o) { return *this += -o; }

XSeries XSeries::operator-() const {
    XSeries s = *this;
    for (auto &t : s.terms_) t.coeff = -t.coeff;
    return s;
}

XSeries XSeries::scaled(const QScalar &c) const {
    XSeries s;
    s.valid_ = valid_;
    if (c.is_zero()) return s;
    s.terms_ = terms_;
    for (auto &t : s.terms_) t.coeff *= c;
    return s;
}

XSeries operator*(const XSeries &a, const XSeries &b) {
    XSeries r;
    r.valid_ = std::min(sat_add(a.lowest(), b.valid_), sat_add(a.valid_, b.lowest()));
    std::map<int, QScalar> acc;
    for (const auto &s : a.terms_)
        for (const auto &t : b.terms_) {
            const long d = static_cast<long>(s.deg) + t.deg;
            if (d > r.valid_) break;
            acc[static_cast<int>(d)] += s.coeff * t.coeff;
        }
    for (auto &[d, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({d, std::move(c)});
    return r;
}

bool XSeries::operator==(const XSeries &o) const {
    if (valid_ != o.valid_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].deg != o.terms_[k].deg || terms_[k].coeff != o.terms_[k].coeff) return false;
    return true;
}

XSeries XSeries::evaluate_coefficients(const BigRational &v0) const {
    XSeries s;
    s.valid_ = valid_;
    for (const auto &t : terms_) {
        QScalar c(t.coeff.evaluate(v0));
        if (!c.is_zero()) s.terms_.push_back({t.deg, std::move(c)});
    }
    return s;
}

std::string XSeries::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) os << "0";
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << " + ";
        os << "(" << terms_[k].coeff.to_string() << ")";
        if (terms_[k].deg != 0) os << "*x^(" << format_exponent(terms_[k].deg) << ")";
    }
    if (!is_exact()) os << " + O(x^(" << format_exponent(static_cast<int>(valid_ + 1)) << "))";
    return os.str();
}

} // namespace qcv
