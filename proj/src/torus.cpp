#include "qcv/torus.hpp"

#include "qcv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qcv {

TorusContext::TorusContext(std::vector<std::string> names, std::vector<int> omega)
    : names_(std::move(names)), omega_(std::move(omega)) {
    const std::size_t n = names_.size();
    if (omega_.size() != n * n) throw std::invalid_argument("TorusContext: omega has wrong size");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (omega_[a * n + b] != -omega_[b * n + a])
                throw std::invalid_argument("TorusContext: omega is not antisymmetric");
}

int TorusContext::index(const std::string &name) const {
    for (int a = 0; a < size(); ++a)
        if (names_[static_cast<std::size_t>(a)] == name) return a;
    return -1;
}

bool TorusContext::same_as(const TorusContext &o) const {
    return this == &o || (names_ == o.names_ && omega_ == o.omega_);
}

ContextPtr make_context(std::vector<std::string> names, std::vector<int> omega) {
    return std::make_shared<const TorusContext>(std::move(names), std::move(omega));
}

int torus_phase(const TorusContext &ctx, const Exponents &e, const Exponents &f) {
    long s = 0;
    const int n = ctx.size();
    for (int a = 1; a < n; ++a) {
        const int ea = e[static_cast<std::size_t>(a)];
        if (ea == 0) continue;
        long g = 0;
        for (int b = 0; b < a; ++b) g += static_cast<long>(ctx.omega(a, b)) * f[static_cast<std::size_t>(b)];
        s += ea * g;
    }
    if (s % 2 != 0)
        throw Error("torus product needs an odd power of q^{1/4}; the relation matrix is too coarse for "
                    "these half exponents");
    return static_cast<int>(s / 2);
}

TorusElement::TorusElement(const QScalar &c) {
    if (!c.is_zero()) terms_.push_back({Exponents{}, c});
}

TorusElement TorusElement::monomial(ContextPtr ctx, Exponents exps, QScalar c) {
    if (!ctx) throw std::invalid_argument("TorusElement::monomial: null context");
    if (static_cast<int>(exps.size()) != ctx->size())
        throw std::invalid_argument("TorusElement::monomial: exponent vector has wrong length");
    TorusElement t;
    t.ctx_ = std::move(ctx);
    if (!c.is_zero()) t.terms_.push_back({std::move(exps), std::move(c)});
    return t;
}

TorusElement TorusElement::variable(ContextPtr ctx, int a, int doubled) {
    if (!ctx || a < 0 || a >= ctx->size()) throw IndexOutOfRange("TorusElement::variable: bad index");
    Exponents e(static_cast<std::size_t>(ctx->size()), 0);
    e[static_cast<std::size_t>(a)] = doubled;
    return monomial(std::move(ctx), std::move(e));
}

TorusElement TorusElement::variable(ContextPtr ctx, const std::string &name, int doubled) {
    int a = ctx ? ctx->index(name) : -1;
    if (a < 0) throw IndexOutOfRange("TorusElement::variable: unknown variable " + name);
    return variable(std::move(ctx), a, doubled);
}

QScalar TorusElement::coeff(const Exponents &exps) const {
    for (const auto &t : terms_) {
        if (t.exps == exps) return t.coeff;
        if (t.exps.empty() && std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; }))
            return t.coeff;
    }
    return QScalar{};
}

bool TorusElement::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto &e = terms_[0].exps;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void TorusElement::adopt(const ContextPtr &ctx) {
    if (!ctx) return;
    if (ctx_) {
        if (ctx_ != ctx && !ctx_->same_as(*ctx))
            throw ContextMismatch("torus elements live over different contexts");
        return;
    }
    ctx_ = ctx;
    for (auto &t : terms_) t.exps.assign(static_cast<std::size_t>(ctx->size()), 0);
}

void TorusElement::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.exps < b.exps; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

TorusElement &TorusElement::operator+=(const TorusElement &o) {
    if (o.terms_.empty()) {
        adopt(o.ctx_);
        return *this;
    }
    if (o.ctx_ && !ctx_) adopt(o.ctx_);
    if (ctx_ && !o.ctx_) {
        TorusElement c = o;
        c.adopt(ctx_);
        return *this += c;
    }
    adopt(o.ctx_);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

TorusElement &TorusElement::operator-=(const TorusElement &o) { return *this += -o; }

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
}

TorusElement TorusElement::scaled(const QScalar &c) const {
    if (c.is_zero()) {
        TorusElement z;
        z.ctx_ = ctx_;
        return z;
    }
    TorusElement r = *this;
    for (auto &t : r.terms_) t.coeff *= c;
    return r;
}

namespace {

// Appends all products a_k * b_k (unsorted) to out.
void append_products(const TorusContext *ctx, const TorusElement &a, const TorusElement &b,
                     std::vector<TorusElement::Term> &out) {
    if (!ctx) {
        for (const auto &s : a.terms())
            for (const auto &t : b.terms()) out.push_back({Exponents{}, s.coeff * t.coeff});
        return;
    }
    const int n = ctx->size();
    const auto expand = [n](const Exponents &e) {
        return e.empty() ? Exponents(static_cast<std::size_t>(n), 0) : e;
    };
    std::vector<long> g(static_cast<std::size_t>(n));
    for (const auto &t : b.terms()) {
        const Exponents f = expand(t.exps);
        for (int x = 0; x < n; ++x) {
            long acc = 0;
            for (int y = 0; y < x; ++y) acc += static_cast<long>(ctx->omega(x, y)) * f[static_cast<std::size_t>(y)];
            g[static_cast<std::size_t>(x)] = acc;
        }
        for (const auto &s : a.terms()) {
            const Exponents e = expand(s.exps);
            long ph = 0;
            Exponents sum(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                ph += e[static_cast<std::size_t>(x)] * g[static_cast<std::size_t>(x)];
                sum[static_cast<std::size_t>(x)] = e[static_cast<std::size_t>(x)] + f[static_cast<std::size_t>(x)];
            }
            if (ph % 2 != 0)
                throw Error("torus product needs an odd power of q^{1/4}; the relation matrix is too "
                            "coarse for these half exponents");
            QScalar c = s.coeff * t.coeff;
            if (ph != 0) c = c.shifted(static_cast<int>(ph / 2));
            out.push_back({std::move(sum), std::move(c)});
        }
    }
}

ContextPtr common_context(const ContextPtr &a, const ContextPtr &b) {
    if (!a) return b;
    if (!b) return a;
    if (a != b && !a->same_as(*b)) throw ContextMismatch("torus elements live over different contexts");
    return a;
}

} // namespace

TorusElement operator*(const TorusElement &a, const TorusElement &b) {
    TorusElement r;
    r.ctx_ = common_context(a.ctx_, b.ctx_);
    append_products(r.ctx_.get(), a, b, r.terms_);
    r.normalize();
    return r;
}

TorusElement TorusElement::sum_of_products(const std::vector<const TorusElement *> &a,
                                           const std::vector<const TorusElement *> &b) {
    TorusElement r;
    for (std::size_t k = 0; k < a.size(); ++k) {
        r.ctx_ = common_context(r.ctx_, a[k]->ctx_);
        r.ctx_ = common_context(r.ctx_, b[k]->ctx_);
    }
    for (std::size_t k = 0; k < a.size(); ++k) append_products(r.ctx_.get(), *a[k], *b[k], r.terms_);
    r.normalize();
    return r;
}

bool TorusElement::operator==(const TorusElement &o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_)) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto &s = terms_[k];
        const auto &t = o.terms_[k];
        if (s.coeff != t.coeff) return false;
        if (s.exps == t.exps) continue;
        const auto zero = [](const Exponents &e) {
            return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        };
        if (!(zero(s.exps) && zero(t.exps))) return false;
    }
    return true;
}

TorusElement TorusElement::monomial_inverse() const {
    if (terms_.size() != 1) throw NotInvertible("only single monomials are invertible in the torus");
    const auto &t = terms_[0];
    if (!ctx_) return TorusElement(QScalar(1) / t.coeff);
    Exponents neg = t.exps;
    for (auto &x : neg) x = -x;
    // N(e) N(-e) = v^{phase(e,-e)} so N(e)^{-1} = v^{-phase(e,-e)} N(-e).
    const int ph = torus_phase(*ctx_, t.exps, neg);
    return monomial(ctx_, std::move(neg), (QScalar(1) / t.coeff).shifted(-ph));
}

TorusElement TorusElement::evaluate_coefficients(const BigRational &v0, ContextPtr ctx) const {
    TorusElement r;
    r.ctx_ = ctx ? ctx : ctx_;
    if (ctx && ctx_ && ctx->size() != ctx_->size())
        throw ContextMismatch("evaluate_coefficients: target context has a different size");
    for (const auto &t : terms_) r.terms_.push_back({t.exps, QScalar(t.coeff.evaluate(v0))});
    r.normalize();
    return r;
}

std::string format_exponent(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << " + ";
        const auto &t = terms_[k];
        os << "(" << t.coeff.to_string() << ")";
        for (std::size_t a = 0; a < t.exps.size(); ++a) {
            if (t.exps[a] == 0) continue;
            os << "*" << ctx_->name(static_cast<int>(a));
            if (t.exps[a] != 2) os << "^(" << format_exponent(t.exps[a]) << ")";
        }
    }
    return os.str();
}

namespace {

// (1/2) sum_{c,d} F_c omega_cd G_d: N(F) N(G) = v^{this} N(G) N(F).
long commutation_phase(const TorusContext &ctx, const Exponents &f, const Exponents &g) {
    long s = 0;
    for (int c = 0; c < ctx.size(); ++c)
        for (int d = 0; d < ctx.size(); ++d)
            s += static_cast<long>(f[static_cast<std::size_t>(c)]) * ctx.omega(c, d) * g[static_cast<std::size_t>(d)];
    return s / 2;
}

// v-exponent beta(F, F) of N(F) N(F) = v^{beta} N(2F).
long self_phase(const TorusContext &ctx, const Exponents &f) {
    long s = 0;
    for (int a = 1; a < ctx.size(); ++a)
        for (int b = 0; b < a; ++b)
            s += static_cast<long>(f[static_cast<std::size_t>(a)]) * ctx.omega(a, b) * f[static_cast<std::size_t>(b)];
    return s; // twice beta
}

} // namespace

void check_skew_compatible(const TorusContext &src, const TorusContext &dst,
                           const std::vector<MonomialImage> &map) {
    if (static_cast<int>(map.size()) != src.size())
        throw std::invalid_argument("substitution map must give an image for every source variable");
    for (const auto &m : map)
        if (static_cast<int>(m.exps.size()) != dst.size())
            throw std::invalid_argument("substitution image has wrong length");
    for (int a = 0; a < src.size(); ++a)
        for (int b = a + 1; b < src.size(); ++b) {
            const long got = commutation_phase(dst, map[static_cast<std::size_t>(a)].exps,
                                               map[static_cast<std::size_t>(b)].exps);
            const long want = 2L * src.omega(a, b);
            if (got != want) {
                std::ostringstream os;
                os << "images of " << src.name(a) << " and " << src.name(b) << " commute up to v^" << got
                   << " but the source relation requires v^" << want;
                throw SkewIncompatible(os.str());
            }
        }
}

TorusElement torus_substitute(const ContextPtr &src, const ContextPtr &dst,
                              const std::vector<MonomialImage> &map, const TorusElement &a) {
    check_skew_compatible(*src, *dst, map);
    if (a.context() && !a.context()->same_as(*src))
        throw ContextMismatch("torus_substitute: element is not over the source context");
    const int n = src->size();
    // Image of z_a^{e/2}: with t = e/2 and N(F)^t = v^{(t^2 - t) beta(F,F)/2} N(tF),
    // (v^k N(F))^t = v^{k t + (t^2 - t) beta(F,F)/2} N(tF).
    const auto power_image = [&](int var, int e) {
        const auto &img = map[static_cast<std::size_t>(var)];
        Exponents ex(static_cast<std::size_t>(dst->size()));
        for (std::size_t c = 0; c < ex.size(); ++c) {
            const long prod = static_cast<long>(img.exps[c]) * e;
            if (prod % 2 != 0)
                throw Error("torus_substitute: half power of " + src->name(var) + " has no half-integer image");
            ex[c] = static_cast<int>(prod / 2);
        }
        // beta(F,F) = self_phase/2; exponent = k e/2 + (e^2/4 - e/2) * self_phase/4
        const long sp = self_phase(*dst, img.exps);
        const long num = 8L * img.vshift * e + (static_cast<long>(e) * e - 2L * e) * sp;
        if (num % 16 != 0)
            throw Error("torus_substitute: half power of " + src->name(var) + " needs a fractional power of v");
        return TorusElement::monomial(dst, std::move(ex), QScalar::v_pow(static_cast<int>(num / 16)));
    };
    TorusElement result;
    for (const auto &t : a.terms()) {
        TorusElement m(t.coeff);
        if (!t.exps.empty())
            for (int v = 0; v < n; ++v)
                if (t.exps[static_cast<std::size_t>(v)] != 0) m = m * power_image(v, t.exps[static_cast<std::size_t>(v)]);
        result += m;
    }
    if (!result.context()) result = result * TorusElement::monomial(dst, Exponents(static_cast<std::size_t>(dst->size()), 0));
    return result;
}

TorusElement drop_variables(const TorusElement &a, const ContextPtr &dst) {
    std::vector<int> where;
    if (a.context())
        for (int v = 0; v < a.context()->size(); ++v) where.push_back(dst->index(a.context()->name(v)));
    TorusElement r = TorusElement::monomial(dst, Exponents(static_cast<std::size_t>(dst->size()), 0), QScalar{});
    for (const auto &t : a.terms()) {
        Exponents e(static_cast<std::size_t>(dst->size()), 0);
        for (std::size_t v = 0; v < t.exps.size(); ++v)
            if (where[v] >= 0) e[static_cast<std::size_t>(where[v])] = t.exps[v];
        r += TorusElement::monomial(dst, std::move(e), t.coeff);
    }
    return r;
}

} // namespace qcv
