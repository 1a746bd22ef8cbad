#include "flagpart/hecke_chars.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagpart {

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending parts
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// One standard tableau: position of each letter.
struct Filling {
    std::vector<int> comp, row, col; // per letter, 0-based
    std::vector<int> key() const {
        std::vector<int> k;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            k.push_back(comp[i]);
            k.push_back(row[i]);
            k.push_back(col[i]);
        }
        return k;
    }
};

void enumerate_fillings(const std::vector<std::vector<int>>& shapes, int n,
                        std::vector<Filling>& out) {
    Filling cur;
    cur.comp.resize(n);
    cur.row.resize(n);
    cur.col.resize(n);
    // fill_len[comp][row] = boxes filled so far
    std::vector<std::vector<int>> fill(shapes.size());
    for (std::size_t c = 0; c < shapes.size(); ++c) fill[c].assign(shapes[c].size(), 0);

    auto rec = [&](auto&& self, int letter) -> void {
        if (letter == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t c = 0; c < shapes.size(); ++c) {
            for (std::size_t r = 0; r < shapes[c].size(); ++r) {
                int len = fill[c][r];
                if (len >= shapes[c][r]) continue;
                if (r > 0 && fill[c][r - 1] <= len) continue; // column condition
                cur.comp[letter] = static_cast<int>(c);
                cur.row[letter] = static_cast<int>(r);
                cur.col[letter] = len;
                ++fill[c][r];
                self(self, letter + 1);
                --fill[c][r];
            }
        }
    };
    rec(rec, 0);
}

mpq_class mpq_pow(const mpq_class& x, int e) {
    if (e == 0) return 1;
    bool neg = e < 0;
    unsigned long k = static_cast<unsigned long>(neg ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), k);
    mpq_class r = neg ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return r;
}

} // namespace

std::string IrrLabel::to_string() const {
    auto fmt = [](const std::vector<int>& v) {
        return v.empty() ? std::string("-") : partition_to_string(v);
    };
    if (!bipartition) return fmt(lam);
    return fmt(lam) + "|" + fmt(mu);
}

std::vector<IrrLabel> irr_labels(const CoxeterGroup& W) {
    std::vector<IrrLabel> out;
    if (W.type().family == Family::A) {
        auto parts = partitions_of(W.rank() + 1);
        std::sort(parts.begin(), parts.end(), lex_greater);
        for (auto& p : parts) out.push_back({p, {}, false});
        return out;
    }
    if (W.type().family == Family::B || W.type().family == Family::C) {
        int n = W.rank();
        for (int k = n; k >= 0; --k) {
            auto lams = partitions_of(k);
            auto mus = partitions_of(n - k);
            std::sort(lams.begin(), lams.end(), lex_greater);
            std::sort(mus.begin(), mus.end(), lex_greater);
            for (auto& l : lams)
                for (auto& m : mus) out.push_back({l, m, true});
        }
        return out;
    }
    throw UnsupportedType("no seminormal model for " + W.label());
}

SeminormalRep SeminormalRep::build(const CoxeterGroup& W, const IrrLabel& label,
                                   const mpq_class& u0) {
    if (u0 <= 0) throw std::invalid_argument("seminormal model needs u0 > 0");
    const bool bip = label.bipartition;
    const Family fam = W.type().family;
    if ((fam == Family::A) == bip) throw TypeMismatch("label does not match group family");
    const int rank = W.rank();
    const int n_letters = bip ? rank : rank + 1;

    std::vector<std::vector<int>> shapes;
    if (bip) {
        shapes = {label.lam, label.mu};
    } else {
        shapes = {label.lam};
    }

    std::vector<Filling> tabs;
    enumerate_fillings(shapes, n_letters, tabs);
    if (tabs.empty()) throw std::logic_error("no standard fillings");

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < tabs.size(); ++i) index[tabs[i].key()] = static_cast<int>(i);

    const int d = static_cast<int>(tabs.size());
    const bool at_one = (u0 == 1);

    // Exponent of the content of a letter, and its sign component.
    auto gamma = [&](const Filling& t, int letter) {
        int g = t.col[letter] - t.row[letter];
        if (bip && t.comp[letter] == 0) g += 1;
        return g;
    };
    auto content = [&](const Filling& t, int letter) -> mpq_class {
        mpq_class c = mpq_pow(u0, gamma(t, letter));
        if (bip && t.comp[letter] == 1) c = -c;
        return c;
    };

    // Matrix for the transposition of letters (a, a+1), 0-based letter a.
    auto letter_swap_matrix = [&](int a) {
        std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d, 0));
        for (int i = 0; i < d; ++i) {
            const Filling& t = tabs[i];
            if (t.comp[a] == t.comp[a + 1] && t.row[a] == t.row[a + 1]) {
                M[i][i] = u0;
                continue;
            }
            if (t.comp[a] == t.comp[a + 1] && t.col[a] == t.col[a + 1]) {
                M[i][i] = -1;
                continue;
            }
            Filling s = t;
            std::swap(s.comp[a], s.comp[a + 1]);
            std::swap(s.row[a], s.row[a + 1]);
            std::swap(s.col[a], s.col[a + 1]);
            int j = index.at(s.key()); // swap is standard here
            bool same_comp = t.comp[a] == t.comp[a + 1];
            if (at_one) {
                if (same_comp) {
                    int dax = gamma(t, a + 1) - gamma(t, a);
                    mpq_class alpha(1, dax);
                    alpha.canonicalize();
                    M[i][i] = alpha;
                    if (i < j) {
                        M[j][i] = 1;
                        mpq_class dd(dax);
                        M[i][j] = 1 - 1 / (dd * dd);
                    }
                } else {
                    M[i][i] = 0;
                    if (i < j) {
                        M[j][i] = 1;
                        M[i][j] = 1;
                    }
                }
                continue;
            }
            mpq_class c1 = content(t, a), c2 = content(t, a + 1);
            M[i][i] = (u0 - 1) * c2 / (c2 - c1);
            if (i < j) {
                mpq_class diff = c2 - c1;
                mpq_class P = (u0 * diff * diff - (u0 - 1) * (u0 - 1) * c1 * c2) / (diff * diff);
                M[j][i] = 1;
                M[i][j] = P;
            }
        }
        return M;
    };

    SeminormalRep rep;
    rep.dim_ = d;
    rep.gen_.resize(rank);

    if (!bip) {
        for (int s = 0; s < rank; ++s) rep.gen_[s] = letter_swap_matrix(s);
        return rep;
    }

    // Type B/C: the sign-type generator acts on one distinguished letter and
    // the rest are letter swaps along the path.  s1 is the sign type in rank-2
    // type C, s_n otherwise.
    int special = (fam == Family::C && rank == 2) ? 0 : rank - 1;
    std::vector<std::vector<mpq_class>> T(d, std::vector<mpq_class>(d, 0));
    for (int i = 0; i < d; ++i) T[i][i] = tabs[i].comp[0] == 0 ? u0 : mpq_class(-1);
    rep.gen_[special] = std::move(T);

    // Remaining generators, walking away from the special node: the generator
    // at path distance j from it swaps letters (j, j+1).
    for (int s = 0; s < rank; ++s) {
        if (s == special) continue;
        int dist = std::abs(s - special);
        rep.gen_[s] = letter_swap_matrix(dist - 1);
    }
    return rep;
}

mpq_class SeminormalRep::trace_word(const std::vector<uint8_t>& word) const {
    const int d = dim_;
    std::vector<std::vector<mpq_class>> acc(d, std::vector<mpq_class>(d, 0));
    for (int i = 0; i < d; ++i) acc[i][i] = 1;
    for (uint8_t s : word) {
        const auto& g = gen_[s];
        std::vector<std::vector<mpq_class>> next(d, std::vector<mpq_class>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (acc[i][k] == 0) continue;
                for (int j = 0; j < d; ++j)
                    if (g[k][j] != 0) next[i][j] += acc[i][k] * g[k][j];
            }
        acc = std::move(next);
    }
    mpq_class tr = 0;
    for (int i = 0; i < d; ++i) tr += acc[i][i];
    return tr;
}

mpq_class char_value(const CoxeterGroup& W, const IrrLabel& E, int w, const mpq_class& u0) {
    SeminormalRep rep = SeminormalRep::build(W, E, u0);
    return rep.trace_word(W.word(w));
}

CharMatrix char_matrix(const CoxeterGroup& W, const mpq_class& u0) {
    CharMatrix cm;
    cm.W = &W;
    cm.u0 = u0;
    cm.rows = irr_labels(W);
    for (const auto& c : W.conjugacy_classes()) cm.class_reps.push_back(c.rep);
    if (cm.rows.size() != cm.class_reps.size())
        throw std::logic_error("label count != class count");

    std::vector<SeminormalRep> reps;
    reps.reserve(cm.rows.size());
    for (const auto& E : cm.rows) reps.push_back(SeminormalRep::build(W, E, u0));

    cm.m.assign(cm.rows.size(), std::vector<mpq_class>(cm.class_reps.size(), 0));
    for (std::size_t i = 0; i < cm.rows.size(); ++i)
        for (std::size_t j = 0; j < cm.class_reps.size(); ++j)
            cm.m[i][j] = reps[i].trace_word(W.word(cm.class_reps[j]));

    // Invertibility check by Gaussian elimination.
    auto a = cm.m;
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw SingularAtPoint("character matrix singular at u0 = " + u0.get_str());
        std::swap(a[col], a[piv]);
        for (int i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[col][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return cm;
}

std::vector<mpq_class> solve_unipotent_traces(const CoxeterGroup& W,
                                              const std::vector<unsigned long long>& counts,
                                              const mpq_class& q) {
    if (static_cast<int>(counts.size()) != W.order())
        throw std::invalid_argument("count vector incomplete over W");
    CharMatrix cm = char_matrix(W, q);
    const int n = static_cast<int>(cm.rows.size());

    // Solve A^T x = b where A[i][j] = tr(T_{w_j}, E_i) and b_j = N_{w_j}.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[j][i] = cm.m[i][j];
        a[j][n] = mpq_class(static_cast<unsigned long>(counts[cm.class_reps[j]]));
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularAtPoint("trace system singular");
        std::swap(a[col], a[piv]);
        mpq_class d = a[col][col];
        for (int j = col; j <= n; ++j) a[col][j] /= d;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];

    // The overdetermined remainder of the system certifies the count vector.
    std::vector<SeminormalRep> reps;
    for (const auto& E : cm.rows) reps.push_back(SeminormalRep::build(W, E, q));
    for (int w = 0; w < W.order(); ++w) {
        mpq_class lhs = 0;
        for (int i = 0; i < n; ++i) lhs += x[i] * reps[i].trace_word(W.word(w));
        if (lhs != mpq_class(static_cast<unsigned long>(counts[w])))
            throw FullSystemMismatch("trace identity fails at w = " + W.element_to_string(w));
    }
    return x;
}

} // namespace flagpart
