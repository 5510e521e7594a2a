#include "qcv/group_element.hpp"

#include "qcv/errors.hpp"

#include <json.hpp>

#include <exception>
#include <sstream>

namespace qcv {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string var_name(const char *stem, int i) { return std::string(stem) + std::to_string(i); }

int require_var(const ContextPtr &ctx, const std::string &name) {
    const int k = ctx->index(name);
    if (k < 0) throw ContextMismatch("context has no variable '" + name + "'");
    return k;
}

// Three variables per block; omega(mid, first) = omega(mid, last) = s and
// the negatives, all other pairs commute.
ContextPtr triple_context(int blocks, const char *first, const char *mid, const char *last, int s_first,
                          int s_last) {
    std::vector<std::string> names;
    for (int i = 1; i <= blocks; ++i) {
        names.push_back(var_name(first, i));
        names.push_back(var_name(mid, i));
        names.push_back(var_name(last, i));
    }
    const int m = static_cast<int>(names.size());
    std::vector<int> omega(sz(m * m), 0);
    auto set = [&](int a, int b, int w) {
        omega[sz(a * m + b)] = w;
        omega[sz(b * m + a)] = -w;
    };
    for (int i = 0; i < blocks; ++i) {
        set(3 * i + 1, 3 * i, s_first);
        set(3 * i + 1, 3 * i + 2, s_last);
    }
    return make_context(std::move(names), std::move(omega));
}

TorusMatrix times(const TorusElement &z, const QMatrix &m) {
    return m.map<TorusElement>([&](const QScalar &c) { return c.is_zero() ? TorusElement() : z.scaled(c); });
}

TorusMatrix var_matrix(const ContextPtr &ctx, int var, const QMatrix &m) {
    return times(TorusElement::variable(ctx, var), m);
}

TorusMatrix scalar_exp(const QMatrix &a, ExpBase base) { return lift<TorusElement>(q_exp_matrix(a, base)); }

int root_of_block(int n, int i, const Generators &rep) {
    const int r = square_bracket(n, i) - 1;
    if (r >= rep.rank)
        throw IndexOutOfRange("representation " + rep.label + " has no simple root " + std::to_string(r + 1));
    return r;
}

const std::vector<int> &h2_of(const Generators &rep, int r) { return rep.h2[sz(r)]; }

// Product over blocks with the factors built in parallel.
template <class F>
TorusMatrix ordered_block_product(int count, F build) {
    std::vector<TorusMatrix> parts(sz(count));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            parts[sz(i)] = build(i + 1);
        } catch (...) {
#pragma omp critical(qcv_block_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return product(parts);
}

TorusMatrix mv_block(const ContextPtr &ctx, int i, const std::vector<int> &h2, const QMatrix &tp,
                     const QMatrix &tm) {
    const int psi = require_var(ctx, var_name("psi", i)), qphi = require_var(ctx, var_name("qphi", i)),
              chi = require_var(ctx, var_name("chi", i));
    return product<TorusElement>({q_exp_matrix(var_matrix(ctx, psi, tp), ExpBase::q), diagonal_power(ctx, qphi, h2),
                                  q_exp_matrix(var_matrix(ctx, chi, tm), ExpBase::q_inverse)});
}

} // namespace

const char *block_form_name(BlockForm f) {
    switch (f) {
    case BlockForm::MV: return "MV";
    case BlockForm::FG: return "FG";
    case BlockForm::MVprime: return "MVprime";
    case BlockForm::FGprime: return "FGprime";
    }
    return "?";
}

int num_blocks(int n) { return n * (n + 1) / 2; }

int square_bracket(int n, int i) {
    if (n < 1 || i < 1 || i > num_blocks(n))
        throw IndexOutOfRange("square_bracket: block " + std::to_string(i) + " out of range for n = " +
                              std::to_string(n));
    int p = i;
    for (int run = n; run >= 1; --run) {
        if (p <= run) return p;
        p -= run;
    }
    throw IndexOutOfRange("square_bracket: unreachable");
}

std::vector<int> word_D(int n) {
    std::vector<int> d;
    for (int i = 1; i <= num_blocks(n); ++i) {
        d.push_back(square_bracket(n, i));
        d.push_back(-square_bracket(n, i));
    }
    return d;
}

std::string word_D_string(int n) {
    std::ostringstream os;
    bool first = true;
    for (int l : word_D(n)) {
        if (!first) os << ' ';
        first = false;
        os << (l > 0 ? l : -l);
        if (l < 0) os << "\u0304";
    }
    return os.str();
}

Seed cluster_seed(int n) {
    if (n < 1) throw std::invalid_argument("cluster_seed: n must be positive");
    Seed s;
    s.n = n;
    s.D = word_D(n);
    auto ctx = fg_context(n);
    s.variables = ctx->names();
    const int m = ctx->size();
    s.epsilon.assign(sz(m), std::vector<int>(sz(m), 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s.epsilon[sz(a)][sz(b)] = ctx->omega(a, b) / 2;
    s.d.assign(sz(m), 1);
    return s;
}

std::string seed_to_json(const Seed &s, int indent) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["variables"] = s.variables;
    j["D"] = s.D;
    j["epsilon"] = s.epsilon;
    j["d"] = s.d;
    return j.dump(indent);
}

Seed seed_from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    Seed s;
    s.n = j.at("n").get<int>();
    if (j.contains("variables")) s.variables = j.at("variables").get<std::vector<std::string>>();
    s.D = j.at("D").get<std::vector<int>>();
    s.epsilon = j.at("epsilon").get<std::vector<std::vector<int>>>();
    s.d = j.at("d").get<std::vector<int>>();
    return s;
}

ContextPtr fg_context(int n) { return triple_context(num_blocks(n), "w", "x", "y", 2, 2); }

ContextPtr mv_context(int n, MVVariant variant) {
    const int s = variant == MVVariant::standard ? 2 : variant == MVVariant::half ? 1 : 0;
    return triple_context(num_blocks(n), "psi", "qphi", "chi", s, s);
}

ContextPtr fgprime_context(int n) { return triple_context(num_blocks(n), "a", "b", "c", -2, -2); }

ContextPtr mvprime_context(int n) { return triple_context(num_blocks(n), "alpha", "qbeta", "gamma", 2, 2); }

ContextPtr leaf_context(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        names.push_back(var_name("w", i));
        names.push_back(var_name("x", i));
    }
    const int m = 2 * n;
    std::vector<int> omega(sz(m * m), 0);
    for (int i = 0; i < n; ++i) {
        omega[sz((2 * i + 1) * m + 2 * i)] = 2;
        omega[sz((2 * i) * m + 2 * i + 1)] = -2;
    }
    return make_context(std::move(names), std::move(omega));
}

TorusMatrix building_block(int n, int i, BlockForm form, const Generators &rep, const ContextPtr &ctx) {
    const int r = root_of_block(n, i, rep);
    const auto &h2 = h2_of(rep, r);
    const bool primed = form == BlockForm::MVprime || form == BlockForm::FGprime;
    const auto t = twist(rep, primed ? Twist::negative : Twist::positive);
    const QMatrix &tp = t.Tplus[sz(r)], &tm = t.Tminus[sz(r)];
    switch (form) {
    case BlockForm::FG: {
        const int w = require_var(ctx, var_name("w", i)), x = require_var(ctx, var_name("x", i)),
                  y = require_var(ctx, var_name("y", i));
        return product<TorusElement>({diagonal_power(ctx, w, h2), scalar_exp(tp, ExpBase::q),
                                      diagonal_power(ctx, x, h2), scalar_exp(tm, ExpBase::q_inverse),
                                      diagonal_power(ctx, y, h2)});
    }
    case BlockForm::MV: return mv_block(ctx, i, h2, tp, tm);
    case BlockForm::FGprime: {
        const int a = require_var(ctx, var_name("a", i)), b = require_var(ctx, var_name("b", i)),
                  c = require_var(ctx, var_name("c", i));
        return product<TorusElement>({diagonal_power(ctx, a, h2), scalar_exp(tm, ExpBase::q_inverse),
                                      diagonal_power(ctx, b, h2), scalar_exp(tp, ExpBase::q),
                                      diagonal_power(ctx, c, h2)});
    }
    case BlockForm::MVprime: {
        const int al = require_var(ctx, var_name("alpha", i)), qb = require_var(ctx, var_name("qbeta", i)),
                  ga = require_var(ctx, var_name("gamma", i));
        return product<TorusElement>({q_exp_matrix(var_matrix(ctx, al, tm), ExpBase::q_inverse),
                                      diagonal_power(ctx, qb, h2),
                                      q_exp_matrix(var_matrix(ctx, ga, tp), ExpBase::q)});
    }
    }
    throw std::invalid_argument("building_block: unknown form");
}

GroupElement group_element(int n, BlockForm form, const Generators &rep, const ContextPtr &ctx) {
    GroupElement g;
    g.n = n;
    g.form = form;
    g.rep_label = rep.label;
    g.ctx = ctx;
    g.matrix = ordered_block_product(num_blocks(n), [&](int i) { return building_block(n, i, form, rep, ctx); });
    return g;
}

TorusMatrix mv_group_element(int n, const Generators &rep, const ContextPtr &mv, Twist sign) {
    const auto t = twist(rep, sign);
    return ordered_block_product(num_blocks(n), [&](int i) {
        const int r = root_of_block(n, i, rep);
        return mv_block(mv, i, h2_of(rep, r), t.Tplus[sz(r)], t.Tminus[sz(r)]);
    });
}

std::vector<MonomialImage> mv_to_fg_map(int n, const ContextPtr &mv, const ContextPtr &fg) {
    std::vector<MonomialImage> map(sz(mv->size()));
    for (int i = 1; i <= num_blocks(n); ++i) {
        const int w = require_var(fg, var_name("w", i)), x = require_var(fg, var_name("x", i)),
                  y = require_var(fg, var_name("y", i));
        Exponents e(sz(fg->size()), 0);
        auto &psi = map[sz(require_var(mv, var_name("psi", i)))];
        psi.exps = e;
        psi.exps[sz(w)] = 2;
        auto &chi = map[sz(require_var(mv, var_name("chi", i)))];
        chi.exps = e;
        chi.exps[sz(y)] = 2;
        auto &qphi = map[sz(require_var(mv, var_name("qphi", i)))];
        qphi.exps = e;
        qphi.exps[sz(w)] = qphi.exps[sz(x)] = qphi.exps[sz(y)] = 2;
        // w x y is already in normal order, so no phase.
        qphi.vshift = 0;
    }
    return map;
}

std::vector<MonomialImage> mvprime_to_fgprime_map(int n, const ContextPtr &mvp, const ContextPtr &fgp) {
    std::vector<MonomialImage> map(sz(mvp->size()));
    for (int i = 1; i <= num_blocks(n); ++i) {
        const int a = require_var(fgp, var_name("a", i)), b = require_var(fgp, var_name("b", i)),
                  c = require_var(fgp, var_name("c", i));
        Exponents e(sz(fgp->size()), 0);
        auto &al = map[sz(require_var(mvp, var_name("alpha", i)))];
        al.exps = e;
        al.exps[sz(a)] = -2;
        auto &ga = map[sz(require_var(mvp, var_name("gamma", i)))];
        ga.exps = e;
        ga.exps[sz(c)] = -2;
        auto &qb = map[sz(require_var(mvp, var_name("qbeta", i)))];
        qb.exps = e;
        qb.exps[sz(a)] = qb.exps[sz(b)] = qb.exps[sz(c)] = 2;
        qb.vshift = 0;
    }
    return map;
}

TorusMatrix substitute_matrix(const ContextPtr &src, const ContextPtr &dst, const std::vector<MonomialImage> &map,
                              const TorusMatrix &m) {
    check_skew_compatible(*src, *dst, map);
    return m.map<TorusElement>([&](const TorusElement &e) { return torus_substitute(src, dst, map, e); });
}

TorusMatrix coproduct_group_element(int n, const Generators &rep, const ContextPtr &mv, CoproductRoute route,
                                    Twist sign) {
    if (route == CoproductRoute::factorized && sign != Twist::positive)
        throw std::invalid_argument("coproduct: the factorized route needs the positive twist");
    const auto t = twist(rep, sign);
    const QMatrix id = QMatrix::identity(rep.dim);
    auto block = [&](int i) {
        const int r = root_of_block(n, i, rep);
        const auto &h2 = h2_of(rep, r);
        const QMatrix &tp = t.Tplus[sz(r)], &tm = t.Tminus[sz(r)];
        const QMatrix q2h = q_power_H(rep, r, 2), qm2h = q_power_H(rep, r, -2);
        const int psi_v = require_var(mv, var_name("psi", i)), qphi_v = require_var(mv, var_name("qphi", i)),
                  chi_v = require_var(mv, var_name("chi", i));
        const TorusElement psi = TorusElement::variable(mv, psi_v), chi = TorusElement::variable(mv, chi_v);
        const TorusMatrix qphiH = diagonal_power(mv, qphi_v, h2);
        const TorusMatrix phiL = kron(qphiH, lift<TorusElement>(id));
        const TorusMatrix phiR = kron(lift<TorusElement>(id), qphiH);
        if (route == CoproductRoute::factorized) {
            const TorusMatrix psiL = q_exp_matrix(times(psi, kron(tp, id)), ExpBase::q);
            const TorusMatrix psiRt = q_exp_matrix(times(psi, kron(q2h, tp)), ExpBase::q);
            const TorusMatrix chiLt = q_exp_matrix(times(chi, kron(tm, qm2h)), ExpBase::q_inverse);
            const TorusMatrix chiR = q_exp_matrix(times(chi, kron(id, tm)), ExpBase::q_inverse);
            return product<TorusElement>({psiL, psiRt, phiL, phiR, chiLt, chiR});
        }
        QMatrix dtp, dtm;
        if (sign == Twist::positive) {
            dtp = kron(q2h, tp) + kron(tp, id);
            dtm = kron(id, tm) + kron(tm, qm2h);
        } else {
            dtm = kron(q2h, tm) + kron(tm, id);
            dtp = kron(id, tp) + kron(tp, qm2h);
        }
        return product<TorusElement>({q_exp_matrix(times(psi, dtp), ExpBase::q), phiL * phiR,
                                      q_exp_matrix(times(chi, dtm), ExpBase::q_inverse)});
    };
    return ordered_block_product(num_blocks(n), block);
}

TorusMatrix symplectic_leaf(int n, const Generators &rep, const ContextPtr &leaf) {
    const auto t = twist(rep, Twist::positive);
    return ordered_block_product(n, [&](int i) {
        const int r = root_of_block(n, i, rep);
        const auto &h2 = h2_of(rep, r);
        const int w = require_var(leaf, var_name("w", i)), x = require_var(leaf, var_name("x", i));
        return product<TorusElement>({diagonal_power(leaf, w, h2), scalar_exp(t.Tplus[sz(r)], ExpBase::q),
                                      diagonal_power(leaf, x, h2),
                                      scalar_exp(t.Tminus[sz(r)], ExpBase::q_inverse)});
    });
}

TorusMatrix symplectic_leaf_by_projection(int n, const Generators &rep, const ContextPtr &leaf) {
    const auto fg = fg_context(n);
    auto m = ordered_block_product(n, [&](int i) { return building_block(n, i, BlockForm::FG, rep, fg); });
    return m.map<TorusElement>([&](const TorusElement &e) { return drop_variables(e, leaf); });
}

TorusMatrix evaluate_matrix(const TorusMatrix &m, const BigRational &v0, const ContextPtr &ctx) {
    return m.map<TorusElement>([&](const TorusElement &e) { return e.evaluate_coefficients(v0, ctx); });
}

} // namespace qcv
