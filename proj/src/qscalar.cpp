#include "qcv/qscalar.hpp"

#include "qcv/cyclotomic.hpp"
#include "qcv/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcv {

QScalar QScalar::v_pow(int k) { return QScalar(LaurentPoly::monomial(1, k)); }

QScalar QScalar::fraction(const LaurentPoly &num, const LaurentPoly &den) {
    return QScalar(num) / QScalar(den);
}

QScalar QScalar::from_cyclotomic(const BigRational &c, int shift,
                                 const std::vector<std::pair<int, int>> &exps) {
    std::map<int, int> net;
    for (auto [d, e] : exps) net[d] += e;
    QScalar r;
    r.num_ = LaurentPoly::monomial(c, shift);
    for (auto [d, e] : net) {
        if (e > 0)
            for (int k = 0; k < e; ++k) r.num_ *= cyclotomic(d);
        else if (e < 0)
            r.cyclo_.emplace_back(d, -e);
    }
    r.cancel();
    return r;
}

LaurentPoly QScalar::expand_cyclo(const CycloExps &exps) const {
    LaurentPoly p(1);
    for (auto [d, e] : exps)
        for (int k = 0; k < e; ++k) p *= cyclotomic(d);
    return p;
}

LaurentPoly QScalar::denominator() const {
    LaurentPoly p = expand_cyclo(cyclo_);
    if (!resid_.is_zero()) p *= resid_;
    return p;
}

void QScalar::cancel() {
    if (num_.is_zero()) {
        cyclo_.clear();
        resid_ = LaurentPoly{};
        return;
    }
    if (!cyclo_.empty()) {
        CycloExps kept;
        for (auto [d, e] : cyclo_) {
            while (e > 0) {
                auto q = divide_by_cyclotomic(num_, d);
                if (!q) break;
                num_ = std::move(*q);
                --e;
            }
            if (e > 0) kept.emplace_back(d, e);
        }
        cyclo_ = std::move(kept);
    }
    if (!resid_.is_zero()) {
        LaurentPoly g = LaurentPoly::gcd(num_, resid_);
        if (g.high() > 0) {
            num_ = *num_.exact_div(g);
            resid_ = *resid_.exact_div(g);
        }
        if (resid_.is_one()) resid_ = LaurentPoly{};
    }
}

namespace {

QScalar::CycloExps merge_cyclo(const QScalar::CycloExps &a, const QScalar::CycloExps &b,
                               bool take_max) {
    QScalar::CycloExps out;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first))
            out.push_back(*i++);
        else if (i == a.end() || j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, take_max ? std::max(i->second, j->second)
                                                : i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

// prod Phi_d^{target_d - have_d}
LaurentPoly cyclo_complement(const QScalar::CycloExps &target, const QScalar::CycloExps &have) {
    LaurentPoly p(1);
    auto j = have.begin();
    for (auto [d, e] : target) {
        while (j != have.end() && j->first < d) ++j;
        int h = (j != have.end() && j->first == d) ? j->second : 0;
        for (int k = h; k < e; ++k) p *= cyclotomic(d);
    }
    return p;
}

// Divides num by as many of the factors in den as possible and returns
// the factors that remain.
QScalar::CycloExps strip_cyclo(LaurentPoly &num, const QScalar::CycloExps &den) {
    QScalar::CycloExps kept;
    for (auto [d, e] : den) {
        while (e > 0 && num.high() > num.low()) {
            auto q = divide_by_cyclotomic(num, d);
            if (!q) break;
            num = std::move(*q);
            --e;
        }
        if (e > 0) kept.emplace_back(d, e);
    }
    return kept;
}

void strip_resid(LaurentPoly &num, LaurentPoly &resid) {
    if (resid.is_zero()) return;
    LaurentPoly g = LaurentPoly::gcd(num, resid);
    if (g.high() > 0) {
        num = *num.exact_div(g);
        resid = *resid.exact_div(g);
    }
    if (resid.is_one()) resid = LaurentPoly{};
}

} // namespace

QScalar &QScalar::operator+=(const QScalar &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (cyclo_ == o.cyclo_ && resid_ == o.resid_) {
        num_ += o.num_;
        if (!has_unit_den() || num_.is_zero()) cancel();
        return *this;
    }
    CycloExps lcm = merge_cyclo(cyclo_, o.cyclo_, true);
    LaurentPoly ma = cyclo_complement(lcm, cyclo_);
    LaurentPoly mb = cyclo_complement(lcm, o.cyclo_);
    LaurentPoly rl;
    if (resid_.is_zero() && !o.resid_.is_zero()) {
        rl = o.resid_;
        ma *= o.resid_;
    } else if (!resid_.is_zero() && o.resid_.is_zero()) {
        rl = resid_;
        mb *= resid_;
    } else if (!resid_.is_zero()) {
        LaurentPoly g = LaurentPoly::gcd(resid_, o.resid_);
        LaurentPoly fa = *o.resid_.exact_div(g);
        LaurentPoly fb = *resid_.exact_div(g);
        rl = resid_ * fa;
        ma *= fa;
        mb *= fb;
    }
    num_ = num_ * ma + o.num_ * mb;
    cyclo_ = std::move(lcm);
    resid_ = std::move(rl);
    cancel();
    return *this;
}

QScalar &QScalar::operator-=(const QScalar &o) { return *this += -o; }

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar &QScalar::operator*=(const QScalar &o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QScalar{};
    if (has_unit_den() && o.has_unit_den()) {
        num_ *= o.num_;
        return *this;
    }
    // Both operands are reduced, so only cross terms can cancel.
    LaurentPoly n1 = num_, n2 = o.num_;
    CycloExps d1 = strip_cyclo(n1, o.cyclo_);
    CycloExps d2 = strip_cyclo(n2, cyclo_);
    LaurentPoly r1 = resid_, r2 = o.resid_;
    strip_resid(n1, r2);
    strip_resid(n2, r1);
    num_ = n1 * n2;
    cyclo_ = merge_cyclo(d2, d1, false);
    if (r1.is_zero())
        resid_ = std::move(r2);
    else if (!r2.is_zero())
        resid_ = r1 * r2;
    else
        resid_ = std::move(r1);
    return *this;
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
    QScalar r;
    const BigRational c = num_.leading();
    const int low = num_.low();
    LaurentPoly p = num_.shifted(-low).scaled(1 / c);
    r.num_ = denominator().scaled(1 / c).shifted(-low);
    // Split p into cyclotomic factors and a cyclotomic-free remainder.
    const int deg0 = p.high();
    for (int d = 1; p.high() > 0 && d <= 8 * deg0 + 16; ++d) {
        if (euler_phi(d) > p.high()) continue;
        int e = 0;
        while (p.high() > 0) {
            auto q = divide_by_cyclotomic(p, d);
            if (!q) break;
            p = std::move(*q);
            ++e;
        }
        if (e > 0) r.cyclo_.emplace_back(d, e);
    }
    if (p.high() > 0) r.resid_ = std::move(p);
    return r;
}

QScalar &QScalar::operator/=(const QScalar &o) {
    if (o.is_zero()) throw std::domain_error("QScalar: division by zero");
    if (o.is_monomial()) {
        const auto &t = o.num_.terms().front();
        num_ = num_.scaled(1 / t.coeff).shifted(-t.exp);
        return *this;
    }
    if (has_unit_den() && o.has_unit_den()) {
        if (auto q = num_.exact_div(o.num_)) {
            num_ = std::move(*q);
            return *this;
        }
    }
    return *this *= o.inverse();
}

QScalar QScalar::shifted(int k) const {
    QScalar r = *this;
    r.num_ = r.num_.shifted(k);
    return r;
}

BigRational QScalar::evaluate(const BigRational &v0) const {
    if (sgn(v0) == 0 && !num_.is_zero() && num_.low() < 0)
        throw PoleError("QScalar: pole at v = 0");
    BigRational den = 1;
    for (auto [d, e] : cyclo_) {
        BigRational f = cyclotomic(d).eval(v0);
        for (int k = 0; k < e; ++k) den *= f;
    }
    if (!resid_.is_zero()) den *= resid_.eval(v0);
    if (sgn(den) == 0) throw PoleError("QScalar: pole at v = " + v0.get_str());
    return num_.eval(v0) / den;
}

double QScalar::evaluate(double v0) const {
    if (v0 == 0 && !num_.is_zero() && num_.low() < 0) throw PoleError("QScalar: pole at v = 0");
    double den = 1;
    for (auto [d, e] : cyclo_) {
        double f = cyclotomic(d).eval(v0);
        for (int k = 0; k < e; ++k) den *= f;
    }
    if (!resid_.is_zero()) den *= resid_.eval(v0);
    if (den == 0) throw PoleError("QScalar: pole at v = " + std::to_string(v0));
    return num_.eval(v0) / den;
}

std::string QScalar::to_string() const {
    if (has_unit_den()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + denominator().to_string() + ")";
}

std::size_t QScalar::hash() const {
    std::size_t h = num_.hash();
    for (auto [d, e] : cyclo_) h = h * 31u + static_cast<std::size_t>(d * 131 + e);
    return h ^ (resid_.hash() << 1);
}

} // namespace qcv
