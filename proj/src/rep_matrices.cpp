#include "qcv/rep_matrices.hpp"

#include "qcv/errors.hpp"

#include <sstream>

namespace qcv {

namespace {

QMatrix diag_from_h2(const std::vector<int> &h2) {
    const int n = static_cast<int>(h2.size());
    QMatrix m(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = QScalar(BigRational(h2[static_cast<std::size_t>(j)], 2));
    return m;
}

std::vector<std::vector<int>> cartan_a(int rank) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) {
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        if (i + 1 < rank) {
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
            c[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
        }
    }
    return c;
}

bool equal_on_block(const QMatrix &a, const QMatrix &b, int block, std::string *where) {
    for (int i = 0; i < block; ++i)
        for (int j = 0; j < block; ++j)
            if (a(i, j) != b(i, j)) {
                if (where) {
                    std::ostringstream os;
                    os << "entry (" << i + 1 << "," << j + 1 << "): " << a(i, j).to_string() << " vs "
                       << b(i, j).to_string();
                    *where = os.str();
                }
                return false;
            }
    return true;
}

void require_relations(const Generators &g) {
    auto r = check_relations(g);
    if (!r.ok) throw RelationCheckFailed(g.label + ": " + r.failure);
}

} // namespace

QMatrix q_power_H(const Generators &g, int root, int m) {
    QMatrix d(g.dim, g.dim);
    const auto &h2 = g.h2[static_cast<std::size_t>(root)];
    for (int j = 0; j < g.dim; ++j) d(j, j) = QScalar::v_pow(m * h2[static_cast<std::size_t>(j)]);
    return d;
}

RelationCheck check_relations(const Generators &g, int block) {
    if (block < 0) block = g.exact_size;
    RelationCheck res;
    const QScalar qq = q_minus_q_inverse();
    for (int i = 0; i < g.rank; ++i) {
        const QMatrix qh = q_power_H(g, i, 1), qmh = q_power_H(g, i, -1);
        for (int j = 0; j < g.rank; ++j) {
            const int c = g.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const auto &tp = g.Tplus[static_cast<std::size_t>(j)];
            const auto &tm = g.Tminus[static_cast<std::size_t>(j)];
            std::string where;
            if (!equal_on_block(multiply_serial(multiply_serial(qh, tp), qmh), tp.scaled(QScalar::v_pow(c)), block, &where)) {
                res.ok = false;
                res.failure = "q^H_" + std::to_string(i + 1) + " T+_" + std::to_string(j + 1) + " q^-H_" +
                              std::to_string(i + 1) + " at " + where;
                return res;
            }
            if (!equal_on_block(multiply_serial(multiply_serial(qh, tm), qmh), tm.scaled(QScalar::v_pow(-c)), block, &where)) {
                res.ok = false;
                res.failure = "q^H_" + std::to_string(i + 1) + " T-_" + std::to_string(j + 1) + " q^-H_" +
                              std::to_string(i + 1) + " at " + where;
                return res;
            }
            const QMatrix comm = multiply_serial(g.Tplus[static_cast<std::size_t>(i)], tm) -
                                 multiply_serial(tm, g.Tplus[static_cast<std::size_t>(i)]);
            QMatrix want(g.dim, g.dim);
            if (i == j) {
                const auto &h2 = g.h2[static_cast<std::size_t>(i)];
                for (int r = 0; r < g.dim; ++r) {
                    const int e = 2 * h2[static_cast<std::size_t>(r)];
                    want(r, r) = (QScalar::v_pow(e) - QScalar::v_pow(-e)) / qq;
                }
            }
            if (!equal_on_block(comm, want, block, &where)) {
                res.ok = false;
                res.failure = "[T+_" + std::to_string(i + 1) + ", T-_" + std::to_string(j + 1) + "] at " + where;
                return res;
            }
        }
    }
    return res;
}

Generators fundamental_rep(int n) {
    if (n < 2) throw std::invalid_argument("fundamental_rep: N must be at least 2");
    Generators g;
    g.label = "fund:" + std::to_string(n);
    g.dim = n;
    g.rank = n - 1;
    g.exact_size = n;
    g.cartan = cartan_a(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        std::vector<int> h2(static_cast<std::size_t>(n), 0);
        h2[static_cast<std::size_t>(i)] = 1;
        h2[static_cast<std::size_t>(i + 1)] = -1;
        QMatrix tp(n, n), tm(n, n);
        tp(i, i + 1) = QScalar(1);
        tm(i + 1, i) = QScalar(1);
        g.H.push_back(diag_from_h2(h2));
        g.h2.push_back(h2);
        g.Tplus.push_back(tp);
        g.Tminus.push_back(tm);
    }
    require_relations(g);
    return g;
}

Generators symmetric_rep_sl2(int k) {
    if (k < 1) throw std::invalid_argument("symmetric_rep_sl2: k must be at least 1");
    Generators g;
    g.label = "sym:" + std::to_string(k);
    g.dim = k + 1;
    g.rank = 1;
    g.exact_size = k + 1;
    g.cartan = cartan_a(1);
    std::vector<int> h2(static_cast<std::size_t>(k + 1));
    QMatrix tp(k + 1, k + 1), tm(k + 1, k + 1);
    for (int j = 0; j <= k; ++j) {
        h2[static_cast<std::size_t>(j)] = k - 2 * j;
        if (j >= 1) tp(j - 1, j) = q_int(j);
        if (j < k) tm(j + 1, j) = q_int(k - j);
    }
    g.H.push_back(diag_from_h2(h2));
    g.h2.push_back(h2);
    g.Tplus.push_back(tp);
    g.Tminus.push_back(tm);
    require_relations(g);
    return g;
}

Generators truncated_lowest_weight_rep(int m) {
    if (m < 2) throw std::invalid_argument("truncated_lowest_weight_rep: M must be at least 2");
    Generators g;
    g.label = "trunc:" + std::to_string(m);
    g.dim = m;
    g.rank = 1;
    g.exact_size = m - 1;
    g.cartan = cartan_a(1);
    std::vector<int> h2(static_cast<std::size_t>(m));
    QMatrix tp(m, m), tm(m, m);
    for (int i = 1; i <= m; ++i) {
        h2[static_cast<std::size_t>(i - 1)] = -2 * i;
        if (i < m) {
            tp(i - 1, i) = q_int(i);
            tm(i, i - 1) = -q_int(i + 1);
        }
    }
    g.H.push_back(diag_from_h2(h2));
    g.h2.push_back(h2);
    g.Tplus.push_back(tp);
    g.Tminus.push_back(tm);
    return g;
}

Generators rep_from_spec(const std::string &spec, int fundamental_size) {
    if (spec == "fund") return fundamental_rep(fundamental_size);
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown representation '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    int size = 0;
    try {
        std::size_t used = 0;
        size = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception &) {
        throw std::invalid_argument("bad representation size in '" + spec + "'");
    }
    if (kind == "fund") return fundamental_rep(size);
    if (kind == "sym") return symmetric_rep_sl2(size);
    if (kind == "trunc") return truncated_lowest_weight_rep(size);
    throw std::invalid_argument("unknown representation '" + spec + "'");
}

TwistedGenerators twist(const Generators &g, Twist sign) {
    TwistedGenerators t;
    for (int i = 0; i < g.rank; ++i) {
        const QMatrix qh = q_power_H(g, i, 1), qmh = q_power_H(g, i, -1);
        const auto &tp = g.Tplus[static_cast<std::size_t>(i)];
        const auto &tm = g.Tminus[static_cast<std::size_t>(i)];
        if (sign == Twist::positive) {
            t.Tplus.push_back(multiply_serial(qh, tp));
            t.Tminus.push_back(multiply_serial(tm, qmh));
        } else {
            t.Tplus.push_back(multiply_serial(tp, qmh));
            t.Tminus.push_back(multiply_serial(qh, tm));
        }
    }
    return t;
}

QMatrix twist_normalizer(const Generators &g, Twist sign) {
    // S_ii / S_jj = c^{-1} for each nonzero twisted entry (i, j) = c * hatted
    // entry; c is a power of v read off from q^{+-H}.
    const int n = g.dim;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    struct Edge { int i, j, c; };
    std::vector<Edge> edges;
    for (int r = 0; r < g.rank; ++r) {
        const auto &h2 = g.h2[static_cast<std::size_t>(r)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto hi = h2[static_cast<std::size_t>(i)], hj = h2[static_cast<std::size_t>(j)];
                if (!g.Tplus[static_cast<std::size_t>(r)](i, j).is_zero())
                    edges.push_back({i, j, sign == Twist::positive ? hi : -hj});
                if (!g.Tminus[static_cast<std::size_t>(r)](i, j).is_zero())
                    edges.push_back({i, j, sign == Twist::positive ? -hj : hi});
            }
    }
    seen[0] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &ed : edges) {
            auto si = static_cast<std::size_t>(ed.i), sj = static_cast<std::size_t>(ed.j);
            if (seen[si] && !seen[sj]) {
                e[sj] = e[si] + ed.c;
                seen[sj] = changed = true;
            } else if (seen[sj] && !seen[si]) {
                e[si] = e[sj] - ed.c;
                seen[si] = changed = true;
            }
        }
    }
    for (const auto &ed : edges)
        if (e[static_cast<std::size_t>(ed.i)] - e[static_cast<std::size_t>(ed.j)] != -ed.c)
            throw RelationCheckFailed(g.label + ": no diagonal normalization of the twist");
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i) s(i, i) = QScalar::v_pow(e[static_cast<std::size_t>(i)]);
    return s;
}

RingMatrix<TorusElement> diagonal_power(const ContextPtr &ctx, int var, const std::vector<int> &h2) {
    const int n = static_cast<int>(h2.size());
    RingMatrix<TorusElement> d(n, n);
    for (int j = 0; j < n; ++j) {
        Exponents e(static_cast<std::size_t>(ctx->size()), 0);
        e[static_cast<std::size_t>(var)] = h2[static_cast<std::size_t>(j)];
        d(j, j) = TorusElement::monomial(ctx, std::move(e));
    }
    return d;
}

RingMatrix<TorusElement> diagonal_power(const ContextPtr &ctx, int var, const QMatrix &h) {
    std::vector<int> h2(static_cast<std::size_t>(h.rows()));
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            const QScalar &x = h(i, j);
            if (i != j) {
                if (!x.is_zero()) throw NonHalfIntegerEntry("diagonal_power: H is not diagonal");
                continue;
            }
            if (!x.is_zero() && !(x.is_polynomial() && x.numerator().is_constant()))
                throw NonHalfIntegerEntry("diagonal_power: diagonal entry is not a number");
            BigRational twice = x.is_zero() ? BigRational(0) : BigRational(2 * x.numerator().coeff(0));
            if (twice.get_den() != 1) throw NonHalfIntegerEntry("diagonal_power: entry is not a half-integer");
            h2[static_cast<std::size_t>(i)] = static_cast<int>(twice.get_num().get_si());
        }
    return diagonal_power(ctx, var, h2);
}

const char *qexp_kind_name(QExpKind k) {
    switch (k) {
    case QExpKind::eq_qH_Tplus: return "e_q(q^H T+)";
    case QExpKind::e1q_Tminus_qmH: return "e_1/q(T- q^-H)";
    case QExpKind::e1q_qH_Tminus: return "e_1/q(q^H T-)";
    case QExpKind::eq_Tplus_qmH: return "e_q(T+ q^-H)";
    }
    return "?";
}

QMatrix qexp_matrix_elements_closed_form(QExpKind kind, int m) {
    if (m < 2) throw std::invalid_argument("closed form: size must be at least 2");
    QMatrix r(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            QScalar &e = r(i - 1, j - 1);
            const int sgn = ((i - j) % 2 == 0) ? 1 : -1;
            switch (kind) {
            case QExpKind::eq_qH_Tplus:
                if (j >= i) e = q_binomial(j - 1, i - 1) * QScalar::q_pow(-(j - i) * (j - 1));
                break;
            case QExpKind::e1q_Tminus_qmH:
                if (i >= j) e = q_binomial(i, j) * QScalar::q_pow((i - j) * (i - 1)) * QScalar(sgn);
                break;
            case QExpKind::e1q_qH_Tminus:
                if (i >= j) e = q_binomial(i, j) * QScalar::q_pow(-(i - j) * (j + 1)) * QScalar(sgn);
                break;
            case QExpKind::eq_Tplus_qmH:
                if (j >= i) e = q_binomial(j - 1, i - 1) * QScalar::q_pow((j - i) * (i + 1));
                break;
            }
        }
    return r;
}

QMatrix qexp_matrix_elements_direct(QExpKind kind, int m) {
    const Generators g = truncated_lowest_weight_rep(m);
    const QMatrix qh = q_power_H(g, 0, 1), qmh = q_power_H(g, 0, -1);
    const QMatrix &tp = g.Tplus[0], &tm = g.Tminus[0];
    switch (kind) {
    case QExpKind::eq_qH_Tplus: return q_exp_matrix(qh * tp, ExpBase::q, m + 1);
    case QExpKind::e1q_Tminus_qmH: return q_exp_matrix(tm * qmh, ExpBase::q_inverse, m + 1);
    case QExpKind::e1q_qH_Tminus: return q_exp_matrix(qh * tm, ExpBase::q_inverse, m + 1);
    case QExpKind::eq_Tplus_qmH: return q_exp_matrix(tp * qmh, ExpBase::q, m + 1);
    }
    throw std::invalid_argument("unknown q-exponential kind");
}

} // namespace qcv
