#include "qcv/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcv {

namespace {

// mpq_class(num, den) is not reduced; equality on coefficients needs it.
BigRational canonical(BigRational c) {
    c.canonicalize();
    return c;
}

} // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({0, BigRational(c)});
}

LaurentPoly::LaurentPoly(const BigRational &c) {
    if (sgn(c) != 0) terms_.push_back({0, canonical(c)});
}

LaurentPoly LaurentPoly::monomial(const BigRational &c, int exp) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({exp, canonical(c)});
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, const std::vector<BigRational> &c) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) p.terms_.push_back({low + static_cast<int>(i), canonical(c[i])});
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

BigRational LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term &t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto &t : p.terms_) t.exp += k;
    return p;
}

LaurentPoly LaurentPoly::scaled(const BigRational &c) const {
    if (sgn(c) == 0) return {};
    const BigRational k = canonical(c);
    LaurentPoly p = *this;
    for (auto &t : p.terms_) t.coeff *= k;
    return p;
}

LaurentPoly LaurentPoly::monic() const {
    if (is_zero()) return {};
    BigRational inv = 1 / leading();
    return scaled(inv);
}

void LaurentPoly::add_scaled(const LaurentPoly &o, int sign) {
    if (o.terms_.empty()) return;
    if (terms_.empty()) {
        terms_ = o.terms_;
        if (sign < 0)
            for (auto &t : terms_) t.coeff = -t.coeff;
        return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->exp < i->exp) {
            out.push_back(*j);
            if (sign < 0) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            if (sign > 0)
                i->coeff += j->coeff;
            else
                i->coeff -= j->coeff;
            if (sgn(i->coeff) != 0) out.push_back(std::move(*i));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    add_scaled(o, 1);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
    add_scaled(o, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);
    const int lo = a.low() + b.low();
    const std::size_t span = static_cast<std::size_t>(a.high() + b.high() - lo + 1);
    std::vector<BigRational> acc(span);
    std::vector<char> touched(span, 0);
    BigRational tmp;
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            const std::size_t k = static_cast<std::size_t>(s.exp + t.exp - lo);
            mpq_mul(tmp.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
            if (touched[k])
                mpq_add(acc[k].get_mpq_t(), acc[k].get_mpq_t(), tmp.get_mpq_t());
            else {
                acc[k] = tmp;
                touched[k] = 1;
            }
        }
    }
    LaurentPoly p;
    for (std::size_t k = 0; k < span; ++k)
        if (touched[k] && sgn(acc[k]) != 0)
            p.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
    return p;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto &t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

// Dense coefficient vector of the polynomial part: p = v^low * sum c[i] v^i.
std::vector<BigRational> dense(const LaurentPoly &p) {
    std::vector<BigRational> c(static_cast<std::size_t>(p.high() - p.low() + 1));
    for (const auto &t : p.terms()) c[static_cast<std::size_t>(t.exp - p.low())] = t.coeff;
    return c;
}

// Long division of dense polynomials, highest degree first. Only the nonzero
// coefficients of the divisor are visited, so sparse divisors such as
// v^m - 1 cost O(deg a) per quotient coefficient pass.
void dense_divrem(std::vector<BigRational> &a, const std::vector<BigRational> &d,
                  std::vector<BigRational> *quot) {
    const std::size_t n = a.size(), m = d.size();
    if (n < m) {
        if (quot) quot->clear();
        return;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j + 1 < m; ++j)
        if (sgn(d[j]) != 0) nz.push_back(j);
    const bool unit_lead = d[m - 1] == 1;
    BigRational inv_lead = unit_lead ? BigRational(1) : BigRational(1 / d[m - 1]);
    if (quot) quot->assign(n - m + 1, BigRational(0));
    BigRational c, tmp;
    for (std::size_t k = n; k-- >= m;) {
        if (sgn(a[k]) == 0) {
            if (k == 0) break;
            continue;
        }
        const std::size_t shift = k - (m - 1);
        if (unit_lead)
            c = a[k];
        else
            mpq_mul(c.get_mpq_t(), a[k].get_mpq_t(), inv_lead.get_mpq_t());
        if (quot) (*quot)[shift] = c;
        a[k] = 0;
        for (std::size_t j : nz) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), d[j].get_mpq_t());
            mpq_sub(a[shift + j].get_mpq_t(), a[shift + j].get_mpq_t(), tmp.get_mpq_t());
        }
        if (k == 0) break;
    }
    a.resize(m - 1);
}

} // namespace

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly &d) const {
    if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly{};
    if (d.is_monomial()) return scaled(1 / d.leading()).shifted(-d.low());
    if (high() - low() < d.high() - d.low()) return std::nullopt;
    auto a = dense(*this);
    auto dd = dense(d);
    std::vector<BigRational> q;
    dense_divrem(a, dd, &q);
    for (const auto &r : a)
        if (sgn(r) != 0) return std::nullopt;
    return from_dense(low() - d.low(), q);
}

LaurentPoly LaurentPoly::rem(const LaurentPoly &d) const {
    if (d.is_zero()) throw std::domain_error("LaurentPoly: remainder by zero");
    if (is_zero()) return {};
    auto a = dense(*this);
    auto dd = dense(d);
    if (a.size() < dd.size()) return shifted(-low());
    dense_divrem(a, dd, nullptr);
    return from_dense(0, a);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly &a0, const LaurentPoly &b0) {
    if (a0.is_zero()) return b0.is_zero() ? LaurentPoly{} : b0.shifted(-b0.low()).monic();
    if (b0.is_zero()) return a0.shifted(-a0.low()).monic();
    LaurentPoly a = a0.shifted(-a0.low()).monic();
    LaurentPoly b = b0.shifted(-b0.low()).monic();
    if (a.high() < b.high()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.high() == 0) return LaurentPoly(1);
        LaurentPoly r = a.rem(b);
        a = std::move(b);
        b = r.is_zero() ? r : r.shifted(-r.low()).monic();
    }
    return a;
}

BigRational LaurentPoly::eval(const BigRational &x) const {
    if (is_zero()) return 0;
    if (sgn(x) == 0) {
        if (low() < 0) throw std::domain_error("LaurentPoly: negative power at zero");
        return coeff(0);
    }
    // Horner over the exponent range, then the v^low factor.
    BigRational acc = 0;
    int prev = high();
    BigRational xp;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int gap = prev - it->exp;
        if (gap > 0) {
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(gap));
            mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(gap));
            xp = BigRational(num, den);
            xp.canonicalize();
            acc *= xp;
        }
        acc += it->coeff;
        prev = it->exp;
    }
    int e = low();
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ae);
    xp = e >= 0 ? BigRational(num, den) : BigRational(den, num);
    xp.canonicalize();
    return acc * xp;
}

double LaurentPoly::eval(double x) const {
    double acc = 0;
    for (const auto &t : terms_) acc += t.coeff.get_d() * std::pow(x, t.exp);
    return acc;
}

std::complex<double> LaurentPoly::eval_root_of_unity(int d, double *l1) const {
    std::vector<double> fold(static_cast<std::size_t>(d), 0.0);
    double norm = 0;
    for (const auto &t : terms_) {
        double c = t.coeff.get_d();
        int r = t.exp % d;
        if (r < 0) r += d;
        fold[static_cast<std::size_t>(r)] += c;
        norm += std::fabs(c);
    }
    std::complex<double> acc = 0;
    for (int r = 0; r < d; ++r) {
        if (fold[static_cast<std::size_t>(r)] == 0) continue;
        double ang = 2 * std::numbers::pi * r / d;
        acc += fold[static_cast<std::size_t>(r)] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    if (l1) *l1 = norm;
    return acc;
}

std::string LaurentPoly::to_string(const char *var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigRational c = it->coeff;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (it->exp == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << var;
        if (it->exp != 1) os << "^" << it->exp;
    }
    return os.str();
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto &t : terms_) {
        h = h * 1000003u ^ static_cast<std::size_t>(t.exp);
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(t.coeff.get_num_mpz_t()));
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_ui(t.coeff.get_den_mpz_t()));
    }
    return h;
}

} // namespace qcv
