#include "qcv/verify.hpp"

#include "qcv/errors.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>

namespace qcv {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// 1 / prod_{j=1}^{n} (q^j - q^{-j}) = v^{n(n+1)} / prod_j (v^{4j} - 1).
QScalar inverse_P(int n) {
    std::map<int, int> e;
    for (int j = 1; j <= n; ++j)
        for (int d = 1; d <= 4 * j; ++d)
            if ((4 * j) % d == 0) --e[d];
    std::vector<std::pair<int, int>> exps(e.begin(), e.end());
    return QScalar::from_cyclotomic(BigRational(1), n * (n + 1), exps);
}

// prod_{j=1}^{n} (v^{2j} - v^{-2j}), expanded.
LaurentPoly P_expanded(int n) {
    LaurentPoly p(1);
    for (int j = 1; j <= n; ++j) p *= LaurentPoly::monomial(1, 2 * j) - LaurentPoly::monomial(1, -2 * j);
    return p;
}

struct BinomialTable {
    std::vector<std::vector<LaurentPoly>> rows; // rows[n][a] = qbin(n, a)
    std::vector<LaurentPoly> P;
    std::vector<QScalar> Pinv;
};

BinomialTable binomial_table(int nmax) {
    BinomialTable t;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<LaurentPoly> row;
        for (int a = 0; a <= n; ++a) row.push_back(q_binomial(n, a).numerator());
        t.rows.push_back(std::move(row));
        t.P.push_back(P_expanded(n));
        t.Pinv.push_back(inverse_P(n));
    }
    return t;
}

// Coefficients of x^N, N = 0..nmax, in
//     e_q(q^{2h_r} x/(q - 1/q)) e_{1/q}(q^{-2h_s} x/(1/q - q)),
// which is commutative in x. The x^N coefficient is
//     (1/P_N) sum_a qbin(N, a) q^{2h_r a - a(a-1)/2} (-1)^{N-a} q^{-2h_s (N-a) + (N-a)(N-a-1)/2}.
// For integral weights the sum is divisible by P_N and most terms vanish.
std::vector<QScalar> dressing_coefficients(int h2r, int h2s, const BinomialTable &tab) {
    std::vector<QScalar> out;
    for (int n = 0; n < static_cast<int>(tab.rows.size()); ++n) {
        LaurentPoly s;
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            const int shift = 2 * h2r * a - a * (a - 1) - 2 * h2s * b + b * (b - 1);
            LaurentPoly t = tab.rows[sz(n)][sz(a)].shifted(shift);
            if (b % 2) t = -t;
            s += t;
        }
        if (s.is_zero()) {
            out.emplace_back();
        } else if (auto q = s.exact_div(tab.P[sz(n)])) {
            out.emplace_back(std::move(*q));
        } else {
            out.push_back(QScalar(std::move(s)) * tab.Pinv[sz(n)]);
        }
    }
    return out;
}

struct MutationData {
    int dim = 0;
    std::vector<int> h2;
    QMatrix Eplus, Eminus, F, G; // LHS and RHS q-exponential factors
};

MutationData mutation_data(const Generators &rep, int root) {
    if (root < 0 || root >= rep.rank) throw IndexOutOfRange("mutation: no simple root " + std::to_string(root + 1));
    MutationData d;
    d.dim = rep.dim;
    d.h2 = rep.h2[sz(root)];
    const QMatrix qh = q_power_H(rep, root, 1), qmh = q_power_H(rep, root, -1);
    const QMatrix &tp = rep.Tplus[sz(root)], &tm = rep.Tminus[sz(root)];
    d.Eplus = q_exp_matrix(qh * tp, ExpBase::q);
    d.Eminus = q_exp_matrix(tm * qmh, ExpBase::q_inverse);
    d.F = q_exp_matrix(qh * tm, ExpBase::q_inverse);
    d.G = q_exp_matrix(tp * qmh, ExpBase::q);
    return d;
}

std::string degree_location(int r, int s, int t) {
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") coefficient of x^(" +
           format_exponent(t) + ")";
}

int block_of(const Generators &rep, const MutationOptions &opt) {
    return opt.block < 0 ? rep.dim : std::min(opt.block, rep.dim);
}

} // namespace

VerificationReport verify_mutation(const Generators &rep, int root, const MutationOptions &opt) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "mutation";
    r.eq_tag = "mutation-main-equation";
    r.param("rep", rep.label).param("root", static_cast<long>(root + 1)).param("guard", static_cast<long>(opt.guard));
    const MutationData d = mutation_data(rep, root);
    const int n = d.dim, blk = block_of(rep, opt);
    if (blk != n) r.param("block", static_cast<long>(blk));

    // LHS_rs = sum_k Eplus_rk Eminus_ks x^{h_k}: exact, finitely many terms.
    std::vector<std::map<int, QScalar>> lhs(sz(n * n));
    int lo = INT_MAX, hi = INT_MIN, rhs_low = INT_MAX;
    for (int a = 0; a < blk; ++a)
        for (int b = 0; b < blk; ++b) {
            auto &e = lhs[sz(a * n + b)];
            for (int k = 0; k < n; ++k) {
                if (d.Eplus(a, k).is_zero() || d.Eminus(k, b).is_zero()) continue;
                e[d.h2[sz(k)]] += d.Eplus(a, k) * d.Eminus(k, b);
            }
            for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
            if (!e.empty()) {
                lo = std::min(lo, e.begin()->first);
                hi = std::max(hi, e.rbegin()->first);
            }
            for (int k = 0; k < n; ++k)
                if (!d.F(a, k).is_zero() && !d.G(k, b).is_zero()) rhs_low = std::min(rhs_low, -d.h2[sz(k)]);
        }
    if (lo == INT_MAX) throw Error("mutation: left-hand side vanishes");
    lo -= opt.guard;
    hi += opt.guard;
    // Any RHS term below the window is known exactly and must vanish too.
    const int from = std::min(lo, rhs_low);
    r.param("window", format_exponent(lo) + ".." + format_exponent(hi));

    const int hmax = *std::max_element(d.h2.begin(), d.h2.end());
    const int nmax = std::max(0, (hi + hmax) / 2 + 1);
    const BinomialTable tab = binomial_table(nmax);
    std::map<std::pair<int, int>, std::vector<QScalar>> cache;
    std::mutex cache_mu;
    auto dressing = [&](int hr, int hs) -> const std::vector<QScalar> & {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({hr, hs});
        if (it == cache.end()) it = cache.emplace(std::make_pair(hr, hs), dressing_coefficients(hr, hs, tab)).first;
        return it->second;
    };

    // RHS_rs at doubled degree t = sum_k F_rk G_ks E_rs[(t + h2_k)/2].
    std::vector<std::optional<Mismatch>> found(sz(n * n));
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < blk * blk; ++idx) {
        const int a = idx / blk, b = idx % blk;
        const auto &E = dressing(d.h2[sz(a)], d.h2[sz(b)]);
        std::vector<QScalar> m(sz(n));
        std::map<int, int> lcm;
        for (int k = 0; k < n; ++k)
            if (!d.F(a, k).is_zero() && !d.G(k, b).is_zero()) {
                m[sz(k)] = d.F(a, k) * d.G(k, b);
                for (auto [c, x] : m[sz(k)].cyclotomic_part()) lcm[c] = std::max(lcm[c], x);
            }
        // Both sides are compared after scaling by the common denominator of
        // the m_k, so the inner sum needs no cancellation.
        const QScalar den = QScalar::from_cyclotomic(BigRational(1), 0, {lcm.begin(), lcm.end()});
        for (auto &mk : m)
            if (!mk.is_zero()) mk *= den;
        const auto &e = lhs[sz(a * n + b)];
        for (int t = from; t <= hi; ++t) {
            QScalar rhs;
            for (int k = 0; k < n; ++k) {
                if (m[sz(k)].is_zero()) continue;
                const int twoN = t + d.h2[sz(k)];
                if (twoN < 0 || twoN % 2) continue;
                rhs += m[sz(k)] * E[sz(twoN / 2)];
            }
            auto it = e.find(t);
            const QScalar expected = it == e.end() ? QScalar() : it->second * den;
            if (expected != rhs) {
                found[sz(a * n + b)] = Mismatch{degree_location(a, b, t), (expected / den).to_string(),
                                                (rhs / den).to_string()};
                break;
            }
        }
    }
    for (const auto &f : found)
        if (f) {
            r.fail(*f);
            break;
        }

    if (opt.generic_route) {
        // Same identity as a product of RingMatrix<XSeries> factors.
        const long valid = hi - std::min(0, from) + 2 * hmax;
        RingMatrix<XSeries> xh(n, n), xmh(n, n), d1(n, n), d2(n, n);
        for (int k = 0; k < n; ++k) {
            xh(k, k) = XSeries::monomial(d.h2[sz(k)]);
            xmh(k, k) = XSeries::monomial(-d.h2[sz(k)]);
            XSeries s1, s2;
            for (int j = 0; 2 * j <= valid; ++j) {
                const QScalar p = inverse_P(j);
                QScalar c1 = QScalar::v_pow(2 * d.h2[sz(k)] * j - j * (j - 1)) * p;
                QScalar c2 = QScalar::v_pow(-2 * d.h2[sz(k)] * j + j * (j - 1)) * p;
                if (j % 2) c2 = -c2;
                s1 += XSeries::monomial(2 * j, c1, valid);
                s2 += XSeries::monomial(2 * j, c2, valid);
            }
            d1(k, k) = s1;
            d2(k, k) = s2;
        }
        auto lift_x = [](const QMatrix &q) { return q.map<XSeries>([](const QScalar &c) { return XSeries(c); }); };
        const auto L = lift_x(d.Eplus) * xh * lift_x(d.Eminus);
        const auto R = d1 * lift_x(d.F) * xmh * lift_x(d.G) * d2;
        bool ok = true;
        for (int a = 0; a < blk && ok; ++a)
            for (int b = 0; b < blk && ok; ++b)
                for (int t = from; t <= hi; ++t)
                    if (L(a, b).coeff(t) != R(a, b).coeff(t)) {
                        r.fail("generic route " + degree_location(a, b, t), L(a, b).coeff(t).to_string(),
                               R(a, b).coeff(t).to_string());
                        ok = false;
                        break;
                    }
        r.notes.push_back(std::string("generic matrix route: ") + (ok ? "agrees" : "disagrees"));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_mutation_slN(int n, int i, const MutationOptions &opt) {
    const auto rep = fundamental_rep(n + 1);
    const int root = square_bracket(n, i) - 1;
    auto r = verify_mutation(rep, root, opt);
    r.check = "mutation-sln";
    r.eq_tag = "mutation-main-equation-embedded";
    r.params.insert(r.params.begin(), {"block_index", std::to_string(i)});
    r.params.insert(r.params.begin(), {"n", std::to_string(n)});
    return r;
}

VerificationReport verify_mutation_extraction(MutationExtraction *out) {
    Stopwatch sw;
    VerificationReport r;
    r.check = "mutation-extraction";
    r.eq_tag = "quantum-mutation-formula";
    r.param("rep", "fund:2");
    const auto rep = fundamental_rep(2);
    const auto fg = fg_context(1);
    // Normalize so the twisted generators are E12 and E21.
    const QMatrix s = twist_normalizer(rep, Twist::positive);
    QMatrix sinv = s;
    for (int k = 0; k < s.rows(); ++k) sinv(k, k) = s(k, k).inverse();
    const auto B = lift<TorusElement>(s) * building_block(1, 1, BlockForm::FG, rep, fg) * lift<TorusElement>(sinv);
    // With a^{1/2} b^{1/2} c^{1/2} = B11, a^{1/2} b^{1/2} c^{-1/2} = B12 and
    // a^{-1/2} b^{1/2} c^{1/2} = B21:  c = B12^{-1} B11,  a = B11 B21^{-1},
    // and abc = B11^2 so b = a^{-1} B11^2 c^{-1}.
    const TorusElement c = B(0, 1).monomial_inverse() * B(0, 0);
    const TorusElement a = B(0, 0) * B(1, 0).monomial_inverse();
    const auto w = TorusElement::variable(fg, "w1"), x = TorusElement::variable(fg, "x1"),
               y = TorusElement::variable(fg, "y1");
    const TorusElement b = x.monomial_inverse();
    const QScalar q = QScalar::q_pow(1);
    const TorusElement a_exp = w + (w * x).scaled(q), c_exp = y + (y * x).scaled(q);
    if (a != a_exp) r.fail("a", a_exp.to_string(), a.to_string());
    if (c != c_exp) r.fail("c", c_exp.to_string(), c.to_string());
    if (a * b * c != B(0, 0) * B(0, 0)) r.fail("a b c", (B(0, 0) * B(0, 0)).to_string(), (a * b * c).to_string());
    // a, b, c satisfy the relations of the primed torus.
    const QScalar qm2 = QScalar::q_pow(-2);
    if (b * a != (a * b).scaled(qm2)) r.fail("b a", (a * b).scaled(qm2).to_string(), (b * a).to_string());
    if (b * c != (c * b).scaled(qm2)) r.fail("b c", (c * b).scaled(qm2).to_string(), (b * c).to_string());
    if (a * c != c * a) r.fail("a c", (c * a).to_string(), (a * c).to_string());
    // v = 1
    const auto flat = make_context(fg->names(), std::vector<int>(sz(fg->size() * fg->size()), 0));
    const auto one = BigRational(1);
    const auto wf = TorusElement::variable(flat, "w1"), xf = TorusElement::variable(flat, "x1"),
               yf = TorusElement::variable(flat, "y1");
    const TorusElement ac = a.evaluate_coefficients(one, flat), bc = b.evaluate_coefficients(one, flat),
                       cc = c.evaluate_coefficients(one, flat);
    if (ac != wf + wf * xf) r.fail("a at v=1", (wf + wf * xf).to_string(), ac.to_string());
    if (bc != xf.monomial_inverse()) r.fail("b at v=1", xf.monomial_inverse().to_string(), bc.to_string());
    if (cc != yf + yf * xf) r.fail("c at v=1", (yf + yf * xf).to_string(), cc.to_string());
    r.notes.push_back("a = " + a.to_string());
    r.notes.push_back("b = " + b.to_string());
    r.notes.push_back("c = " + c.to_string());
    r.notes.push_back("v=1: a = " + ac.to_string() + ", b = " + bc.to_string() + ", c = " + cc.to_string());
    if (out) *out = MutationExtraction{a, b, c, ac, bc, cc};
    r.elapsed_ms = sw.ms();
    return r;
}

VerificationReport verify_mutation_truncated(int m, const MutationOptions &opt) {
    MutationOptions o = opt;
    if (o.block < 0) o.block = std::max(1, m - 2);
    auto r = verify_mutation(truncated_lowest_weight_rep(m), 0, o);
    r.check = "mutation-truncated";
    r.notes.push_back("exploratory: truncated lowest-weight module, not a required identity");
    return r;
}

} // namespace qcv
