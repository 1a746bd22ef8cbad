#include "flagpart/lie_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagpart {

namespace {

std::vector<int> transpose_partition(const std::vector<int>& parts) {
    std::vector<int> t;
    if (parts.empty()) return t;
    for (int j = 1; j <= parts[0]; ++j) {
        int cnt = 0;
        for (int p : parts)
            if (p >= j) ++cnt;
        t.push_back(cnt);
    }
    return t;
}

std::vector<std::vector<int>> partitions_of_int(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
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

int embedded_component_group_order(Family fam, int rank, const std::vector<int>& parts) {
    if (fam == Family::A) return 1;
    auto is = [&](std::initializer_list<int> l) { return parts == std::vector<int>(l); };
    if (fam == Family::B && rank == 2)
        return is({3, 1, 1}) ? 2 : 1;
    if (fam == Family::C && rank == 2)
        return is({2, 2}) ? 2 : 1;
    if (fam == Family::B && rank == 3)
        return (is({5, 1, 1}) || is({3, 3, 1}) || is({3, 1, 1, 1, 1})) ? 2 : 1;
    if (fam == Family::C && rank == 3)
        return (is({4, 2}) || is({2, 2, 1, 1})) ? 2 : 1;
    return 1;
}

struct Block {
    int size = 0;
    std::vector<int> sd; // superdiagonal pattern, entries in {-1, 0, 1}
    bool single = true;  // single part vs hyperbolic pair
    int part = 0;
};

// Single-chain nilpotent in sp_S (S even) / so_S with the block's antidiagonal
// form: +1 on the first half of the superdiagonal, -1 on the second.
Block single_block(int part) {
    Block b;
    b.size = part;
    b.part = part;
    b.single = true;
    for (int k = 1; k < part; ++k) b.sd.push_back(2 * k <= part ? 1 : -1);
    return b;
}

// Pair (m, m): two chains, split by a zero in the middle.
Block pair_block(int m) {
    Block b;
    b.size = 2 * m;
    b.part = m;
    b.single = false;
    for (int k = 1; k < 2 * m; ++k) b.sd.push_back(k < m ? 1 : (k == m ? 0 : -1));
    return b;
}

// Type C: one symplectic chain per even part, hyperbolic pairs for equal odd
// parts.  Type B: one orthogonal chain per odd part, hyperbolic pairs for
// equal even parts.  The congruence transport below removes any need to
// interleave block positions.
std::vector<Block> build_blocks(Family fam, const std::vector<int>& parts) {
    std::map<int, int, std::greater<int>> mult;
    for (int p : parts) ++mult[p];
    std::vector<Block> blocks;
    for (auto [v, m] : mult) {
        const bool chain_type = fam == Family::C ? v % 2 == 0 : v % 2 == 1;
        if (chain_type) {
            for (int i = 0; i < m; ++i) blocks.push_back(single_block(v));
        } else {
            if (m % 2)
                throw InvalidPartition(std::string(fam == Family::C ? "type C: odd" : "type B: even") +
                                       " part with odd multiplicity");
            for (int i = 0; i < m / 2; ++i) blocks.push_back(pair_block(v));
        }
    }
    // Deterministic order: singles first, larger parts first.
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.single != b.single) return a.single;
        return a.part > b.part;
    });
    return blocks;
}

MatrixFq local_gram(const GroupModel& model, const Block& b, uint32_t scale) {
    PrimeField f(model.p);
    MatrixFq g(model.p, b.size, b.size);
    for (int i = 0; i < b.size; ++i) {
        uint32_t v = scale;
        if (model.fam == Family::C && 2 * i >= b.size) v = f.neg(v);
        g.at(i, b.size - 1 - i) = v;
    }
    return g;
}

// x^T G y
uint32_t bilinear(const MatrixFq& G, const std::vector<uint32_t>& x,
                  const std::vector<uint32_t>& y, const PrimeField& f) {
    uint64_t acc = 0;
    int n = G.rows();
    for (int i = 0; i < n; ++i) {
        if (!x[i]) continue;
        uint64_t row = 0;
        for (int j = 0; j < n; ++j)
            if (G.at(i, j)) row += static_cast<uint64_t>(G.at(i, j)) * y[j] % f.p();
        acc += x[i] * (row % f.p()) % f.p();
    }
    return static_cast<uint32_t>(acc % f.p());
}

std::vector<uint32_t> column(const MatrixFq& M, int j) {
    std::vector<uint32_t> c(M.rows());
    for (int i = 0; i < M.rows(); ++i) c[i] = M.at(i, j);
    return c;
}

// P with P^T G P = J_model for antisymmetric G (symplectic standardization).
MatrixFq symplectic_standardize(const MatrixFq& G, const GroupModel& model) {
    PrimeField f(model.p);
    int N = G.rows(), n = N / 2;
    std::vector<std::vector<uint32_t>> remaining;
    for (int i = 0; i < N; ++i) {
        std::vector<uint32_t> e(N, 0);
        e[i] = 1;
        remaining.push_back(e);
    }
    std::vector<std::vector<uint32_t>> vs, ws;
    while (!remaining.empty()) {
        auto v = remaining.front();
        std::size_t wi = 0;
        uint32_t bvw = 0;
        for (std::size_t k = 1; k < remaining.size(); ++k) {
            bvw = bilinear(G, v, remaining[k], f);
            if (bvw) {
                wi = k;
                break;
            }
        }
        if (!bvw) throw std::logic_error("degenerate symplectic form");
        auto w = remaining[wi];
        uint32_t s = f.inv(bvw);
        for (auto& x : w) x = f.mul(x, s); // B(v, w) = 1
        std::vector<std::vector<uint32_t>> next;
        for (std::size_t k = 1; k < remaining.size(); ++k) {
            if (k == wi) continue;
            auto x = remaining[k];
            uint32_t a = bilinear(G, x, w, f); // coefficient of v
            uint32_t b = bilinear(G, x, v, f);
            for (int i = 0; i < N; ++i)
                x[i] = f.add(f.sub(x[i], f.mul(a, v[i])), f.mul(b, w[i]));
            next.push_back(std::move(x));
        }
        vs.push_back(v);
        ws.push_back(w);
        remaining = std::move(next);
    }
    MatrixFq P(model.p, N, N);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < N; ++r) {
            P.at(r, i) = vs[i][r];
            P.at(r, N - 1 - i) = ws[i][r];
        }
    return P;
}

// P with P^T G P diagonal, followed by normalization of the diagonal to
// entries in {1, eps} and reduction of (eps, eps) pairs to (1, 1).
// Returns (P, number of eps entries in {0, 1}).
std::pair<MatrixFq, int> symmetric_normal_form(const MatrixFq& G, uint32_t p) {
    PrimeField f(p);
    int N = G.rows();
    std::vector<std::vector<uint32_t>> cols;
    std::vector<std::vector<uint32_t>> remaining;
    for (int i = 0; i < N; ++i) {
        std::vector<uint32_t> e(N, 0);
        e[i] = 1;
        remaining.push_back(e);
    }
    while (!remaining.empty()) {
        std::size_t pick = remaining.size();
        for (std::size_t k = 0; k < remaining.size(); ++k)
            if (bilinear(G, remaining[k], remaining[k], f)) {
                pick = k;
                break;
            }
        std::vector<uint32_t> v;
        if (pick < remaining.size()) {
            v = remaining[pick];
            remaining.erase(remaining.begin() + static_cast<long>(pick));
        } else {
            // all basis vectors isotropic: some pair has B != 0; v = a + b is
            // non-isotropic and span(v, remaining minus a) is unchanged
            bool found = false;
            for (std::size_t a = 0; a < remaining.size() && !found; ++a)
                for (std::size_t b = a + 1; b < remaining.size() && !found; ++b)
                    if (bilinear(G, remaining[a], remaining[b], f)) {
                        v = remaining[a];
                        for (int i = 0; i < N; ++i) v[i] = f.add(v[i], remaining[b][i]);
                        remaining.erase(remaining.begin() + static_cast<long>(a));
                        found = true;
                    }
            if (!found) throw std::logic_error("degenerate symmetric form");
        }
        uint32_t q = bilinear(G, v, v, f);
        uint32_t qi = f.inv(q);
        for (auto& x : remaining) {
            uint32_t c = f.mul(bilinear(G, x, v, f), qi);
            if (c)
                for (int i = 0; i < N; ++i) x[i] = f.sub(x[i], f.mul(c, v[i]));
        }
        cols.push_back(std::move(v));
    }

    uint32_t eps = f.least_nonresidue();
    std::vector<int> is_eps(N, 0);
    for (int j = 0; j < N; ++j) {
        uint32_t d = bilinear(G, cols[j], cols[j], f);
        uint32_t target = f.is_square(d) ? 1 : eps;
        uint32_t s = f.sqrt(f.mul(d, f.inv(target)));
        uint32_t si = f.inv(s);
        for (auto& x : cols[j]) x = f.mul(x, si);
        is_eps[j] = target == eps ? 1 : 0;
    }
    // (eps, eps) -> (1, 1): find x, y with eps (x^2 + y^2) = 1.
    std::vector<int> eps_pos;
    for (int j = 0; j < N; ++j)
        if (is_eps[j]) eps_pos.push_back(j);
    while (eps_pos.size() >= 2) {
        int a = eps_pos[eps_pos.size() - 2], b = eps_pos[eps_pos.size() - 1];
        uint32_t x = 0, y = 0;
        bool found = false;
        for (uint32_t xc = 0; xc < p && !found; ++xc)
            for (uint32_t yc = 0; yc < p && !found; ++yc)
                if (f.mul(eps, f.add(f.mul(xc, xc), f.mul(yc, yc))) == 1) {
                    x = xc;
                    y = yc;
                    found = true;
                }
        if (!found) throw std::logic_error("no representation of 1 by eps(x^2+y^2)");
        auto ca = cols[a], cb = cols[b];
        for (int i = 0; i < G.rows(); ++i) {
            cols[a][i] = f.add(f.mul(x, ca[i]), f.mul(y, cb[i]));
            cols[b][i] = f.add(f.mul(f.neg(y), ca[i]), f.mul(x, cb[i]));
        }
        is_eps[a] = is_eps[b] = 0;
        eps_pos.pop_back();
        eps_pos.pop_back();
    }
    // Move a remaining eps column to the end.
    int k = 0;
    if (!eps_pos.empty()) {
        std::swap(cols[eps_pos[0]], cols[N - 1]);
        k = 1;
    }
    MatrixFq P(p, N, N);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) P.at(i, j) = cols[j][i];
    return {P, k};
}

// T with T^T (c J) T = G for c in {1, eps}; B types.
MatrixFq symmetric_congruence_to_form(const MatrixFq& G, const GroupModel& model) {
    auto [pg, kg] = symmetric_normal_form(G, model.p);
    auto [pj1, kj1] = symmetric_normal_form(model.gram, model.p);
    if (kg == kj1) return pj1 * pg.inverse();
    PrimeField f(model.p);
    MatrixFq scaled = model.gram.scaled(f.least_nonresidue());
    auto [pj2, kj2] = symmetric_normal_form(scaled, model.p);
    if (kg != kj2) throw std::logic_error("symmetric forms not congruent to J or eps J");
    return pj2 * pg.inverse();
}

MatrixFq cayley_unipotent(const MatrixFq& X, uint32_t p) {
    PrimeField f(p);
    int N = X.rows();
    MatrixFq half = X.scaled(f.inv(2 % p));
    MatrixFq inv_part = MatrixFq::identity(p, N); // (I - X/2)^{-1} = sum (X/2)^k
    MatrixFq term = half;
    while (!term.is_zero()) {
        inv_part = inv_part + term;
        term = term * half;
    }
    return (MatrixFq::identity(p, N) + half) * inv_part;
}

} // namespace

GroupModel GroupModel::make(const std::string& type_label, uint32_t p) {
    GroupType t = GroupType::parse(type_label);
    if (t.family == Family::G) throw UnsupportedType("no matrix model for G2");
    if (!PrimeField::is_prime(p)) throw BadCharacteristic("p must be prime");
    if (t.family != Family::A && p == 2)
        throw BadCharacteristic("types B/C require odd characteristic");

    GroupModel m;
    m.fam = t.family;
    m.rank = t.rank;
    m.p = p;
    m.W = &CoxeterGroup::get(type_label);
    m.N = m.W->ambient_size();
    if (t.family == Family::B) {
        m.gram = MatrixFq(p, m.N, m.N);
        for (int i = 0; i < m.N; ++i) m.gram.at(i, m.N - 1 - i) = 1;
    } else if (t.family == Family::C) {
        PrimeField f(p);
        m.gram = MatrixFq(p, m.N, m.N);
        for (int i = 0; i < m.N; ++i)
            m.gram.at(i, m.N - 1 - i) = i < m.rank ? 1 : f.neg(1);
    }
    return m;
}

bool GroupModel::preserves_form(const MatrixFq& M) const {
    if (!has_form()) return true;
    return M.transpose() * gram * M == gram;
}

uint32_t GroupModel::form(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) const {
    PrimeField f(p);
    return bilinear(gram, x, y, f);
}

std::string UnipotentClassInfo::pretty_label() const {
    std::string s = u_label;
    auto pos = s.find('p');
    if (pos == std::string::npos) return s;
    std::string primes(s.size() - pos, '\'');
    return "u" + std::string(primes) + s.substr(1, pos - 1);
}

int springer_fiber_dim(Family fam, const std::vector<int>& partition) {
    int total = std::accumulate(partition.begin(), partition.end(), 0);
    auto tp = transpose_partition(partition);
    long sum_sq = 0;
    for (int v : tp) sum_sq += static_cast<long>(v) * v;
    int r_odd = 0;
    for (int v : partition)
        if (v % 2) ++r_odd;

    long dim_g, dim_z, dim_flag;
    switch (fam) {
        case Family::A: {
            int n1 = total;
            dim_g = static_cast<long>(n1) * n1;
            dim_z = sum_sq;
            dim_flag = static_cast<long>(n1) * (n1 - 1) / 2;
            break;
        }
        case Family::B: {
            if (total % 2 == 0) throw InvalidPartition("type B partition must have odd size");
            int n = (total - 1) / 2;
            dim_g = static_cast<long>(n) * (2 * n + 1);
            if ((sum_sq - r_odd) % 2) throw InvalidPartition("bad type B partition");
            dim_z = (sum_sq - r_odd) / 2;
            dim_flag = static_cast<long>(n) * n;
            break;
        }
        case Family::C: {
            if (total % 2) throw InvalidPartition("type C partition must have even size");
            int n = total / 2;
            dim_g = static_cast<long>(n) * (2 * n + 1);
            dim_z = (sum_sq + r_odd) / 2;
            dim_flag = static_cast<long>(n) * n;
            break;
        }
        default: throw UnsupportedType("no partition classes for this family");
    }
    long cl = dim_g - dim_z;
    if (cl % 2) throw InvalidPartition("odd class dimension");
    long fiber = dim_flag - cl / 2;
    if (fiber < 0) throw InvalidPartition("negative fiber dimension");
    return static_cast<int>(fiber);
}

void validate_partition(Family fam, int rank, const std::vector<int>& partition) {
    if (partition.empty()) throw InvalidPartition("empty partition");
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        if (partition[i] < partition[i + 1]) throw InvalidPartition("partition not descending");
    for (int v : partition)
        if (v < 1) throw InvalidPartition("nonpositive part");
    int total = std::accumulate(partition.begin(), partition.end(), 0);
    std::map<int, int> mult;
    for (int v : partition) ++mult[v];
    switch (fam) {
        case Family::A:
            if (total != rank + 1) throw InvalidPartition("type A partition size");
            break;
        case Family::B:
            if (total != 2 * rank + 1) throw InvalidPartition("type B partition size");
            for (auto [v, m] : mult)
                if (v % 2 == 0 && m % 2) throw InvalidPartition("type B: even part odd multiplicity");
            break;
        case Family::C:
            if (total != 2 * rank) throw InvalidPartition("type C partition size");
            for (auto [v, m] : mult)
                if (v % 2 && m % 2) throw InvalidPartition("type C: odd part odd multiplicity");
            break;
        default: throw UnsupportedType("no partition classes for this family");
    }
}

std::vector<UnipotentClassInfo> unipotent_partitions(Family fam, int rank) {
    int total = fam == Family::A ? rank + 1 : fam == Family::B ? 2 * rank + 1 : 2 * rank;
    std::vector<UnipotentClassInfo> out;
    for (auto& parts : partitions_of_int(total)) {
        try {
            validate_partition(fam, rank, parts);
        } catch (const InvalidPartition&) {
            continue;
        }
        UnipotentClassInfo info;
        info.partition = parts;
        info.fiber_dim = springer_fiber_dim(fam, parts);
        info.component_group_order = embedded_component_group_order(fam, rank, parts);
        info.has_split_variant = info.component_group_order == 2;
        out.push_back(std::move(info));
    }
    // class_dim for sorting: recompute through the fiber dimension.
    long dim_flag = fam == Family::A ? static_cast<long>(rank) * (rank + 1) / 2
                                     : static_cast<long>(rank) * rank;
    for (auto& info : out) info.class_dim = 2 * (dim_flag - info.fiber_dim);
    std::sort(out.begin(), out.end(), [](const UnipotentClassInfo& a, const UnipotentClassInfo& b) {
        if (a.fiber_dim != b.fiber_dim) return a.fiber_dim < b.fiber_dim;
        return a.partition > b.partition;
    });
    for (auto& info : out) {
        info.u_label = "u" + std::to_string(info.fiber_dim);
        if (fam == Family::C && rank == 3 && info.fiber_dim == 2) {
            // (3,3) is u'2; (4,1,1) is regular in a C2 Levi, u''2.
            info.u_label += info.partition == std::vector<int>{3, 3} ? "p" : "pp";
        }
    }
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].u_label == out[i + 1].u_label)
            throw std::logic_error("ambiguous u-labels for " + std::to_string(rank));
    return out;
}

const UnipotentClassInfo& class_by_partition(Family fam, int rank, const std::vector<int>& parts) {
    static std::map<std::pair<int, int>, std::vector<UnipotentClassInfo>> cache;
    auto key = std::make_pair(static_cast<int>(fam), rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, unipotent_partitions(fam, rank)).first;
    for (const auto& info : it->second)
        if (info.partition == parts) return info;
    throw InvalidPartition("no class with partition " + partition_to_string(parts));
}

const UnipotentClassInfo& class_by_label(Family fam, int rank, const std::string& u_label) {
    static std::map<std::pair<int, int>, std::vector<UnipotentClassInfo>> cache;
    auto key = std::make_pair(static_cast<int>(fam), rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, unipotent_partitions(fam, rank)).first;
    for (const auto& info : it->second)
        if (info.u_label == u_label) return info;
    throw InvalidPartition("no class labeled " + u_label);
}

bool closure_leq(Family fam, const std::vector<int>& lo, const std::vector<int>& hi) {
    int slo = std::accumulate(lo.begin(), lo.end(), 0);
    int shi = std::accumulate(hi.begin(), hi.end(), 0);
    if (slo != shi) throw InvalidPartition("closure_leq: different total sizes");
    (void)fam;
    long a = 0, b = 0;
    std::size_t k = std::max(lo.size(), hi.size());
    for (std::size_t i = 0; i < k; ++i) {
        a += i < lo.size() ? lo[i] : 0;
        b += i < hi.size() ? hi[i] : 0;
        if (a > b) return false;
    }
    return true;
}

std::vector<int> jordan_type(const MatrixFq& M) {
    int N = M.rows();
    MatrixFq E = M - MatrixFq::identity(M.p(), N);
    std::vector<int> ranks{N};
    MatrixFq pw = E;
    for (int k = 1; k <= N; ++k) {
        ranks.push_back(pw.rank());
        if (ranks.back() == 0) break;
        pw = pw * E;
    }
    if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not unipotent");
    std::vector<int> col_counts; // lambda'_k = rank(E^{k-1}) - rank(E^k)
    for (std::size_t k = 1; k < ranks.size(); ++k) col_counts.push_back(ranks[k - 1] - ranks[k]);
    return transpose_partition(col_counts);
}

MatrixFq unipotent_rep(const GroupModel& model, const std::vector<int>& partition,
                       const std::string& variant) {
    validate_partition(model.fam, model.rank, partition);
    if (variant != "std" && variant != "tw")
        throw std::invalid_argument("variant must be std or tw");
    PrimeField f(model.p);

    if (model.fam == Family::A) {
        MatrixFq u = MatrixFq::identity(model.p, model.N);
        int off = 0;
        for (int part : partition) {
            for (int k = 0; k + 1 < part; ++k) u.at(off + k, off + k + 1) = 1;
            off += part;
        }
        if (jordan_type(u) != partition) throw std::logic_error("type A rep: wrong Jordan type");
        return u;
    }

    auto blocks = build_blocks(model.fam, partition);
    uint32_t eps = f.least_nonresidue();
    std::set<int> tw_blocks;
    if (variant == "tw") {
        if (model.fam == Family::C) {
            // flip the multiplicity-space discriminant of one even part
            for (std::size_t i = 0; i < blocks.size(); ++i)
                if (blocks[i].single) {
                    tw_blocks.insert(static_cast<int>(i));
                    break;
                }
        } else {
            // flip two distinct odd part values together; the total
            // discriminant stays fixed, which is the nontrivial cocycle
            int first_part = -1;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if (!blocks[i].single) continue;
                if (first_part < 0) {
                    first_part = blocks[i].part;
                    tw_blocks.insert(static_cast<int>(i));
                } else if (blocks[i].part != first_part) {
                    tw_blocks.insert(static_cast<int>(i));
                    break;
                }
            }
            if (tw_blocks.size() < 2) tw_blocks.clear();
        }
        if (tw_blocks.empty())
            throw UnsupportedType("no split variant available for " +
                                  partition_to_string(partition));
    }

    MatrixFq X(model.p, model.N, model.N), G(model.p, model.N, model.N);
    int off = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        uint32_t scale = tw_blocks.count(static_cast<int>(bi)) ? eps : 1;
        for (int k = 0; k + 1 < b.size; ++k) X.at(off + k, off + k + 1) = f.from_int(b.sd[k]);
        MatrixFq lg = local_gram(model, b, scale);
        for (int i = 0; i < b.size; ++i)
            for (int j = 0; j < b.size; ++j) G.at(off + i, off + j) = lg.at(i, j);
        off += b.size;
    }
    if (off != model.N) throw std::logic_error("block sizes do not fill the space");

    MatrixFq T = model.fam == Family::C
                     ? symplectic_standardize(G, model).inverse()
                     : symmetric_congruence_to_form(G, model);
    MatrixFq Xs = T * X * T.inverse();
    MatrixFq u = cayley_unipotent(Xs, model.p);
    if (!model.preserves_form(u)) throw std::logic_error("unipotent_rep: form not preserved");
    if (jordan_type(u) != partition) throw std::logic_error("unipotent_rep: wrong Jordan type");
    return u;
}

MatrixFq regular_ss_rep(const GroupModel& model, const std::vector<int>& eigenvalues) {
    if (model.fam != Family::A) throw TypeMismatch("regular_ss_rep: type A model required");
    if (static_cast<int>(eigenvalues.size()) != model.N)
        throw std::invalid_argument("need one eigenvalue per dimension");
    PrimeField f(model.p);
    std::vector<uint32_t> vals;
    for (int e : eigenvalues) {
        uint32_t v = f.from_int(e);
        if (v == 0) throw RepeatedEigenvalue("zero eigenvalue");
        for (uint32_t w : vals)
            if (w == v) throw RepeatedEigenvalue("repeated eigenvalue mod p");
        vals.push_back(v);
    }
    MatrixFq m(model.p, model.N, model.N);
    for (int i = 0; i < model.N; ++i) m.at(i, i) = vals[i];
    return m;
}

MatrixFq weyl_lift(const GroupModel& model, int w) {
    auto perm = model.W->ambient_permutation(w);
    int N = model.N;
    if (model.fam == Family::A) {
        MatrixFq P(model.p, N, N);
        for (int j = 0; j < N; ++j) P.at(perm[j], j) = 1;
        return P;
    }
    PrimeField f(model.p);
    std::vector<uint32_t> sign(N, 1);
    for (int a = 0; a < N / 2; ++a) {
        int ma = N - 1 - a;
        uint32_t num = model.gram.at(a, ma);
        uint32_t den = model.gram.at(perm[a], N - 1 - perm[a]);
        sign[ma] = f.mul(num, f.inv(den)); // s_a = 1, s_mirror = ratio
    }
    MatrixFq P(model.p, N, N);
    for (int j = 0; j < N; ++j) P.at(perm[j], j) = sign[j];
    if (!model.preserves_form(P)) throw std::logic_error("weyl_lift: form not preserved");
    return P;
}

MatrixFq random_group_element(const GroupModel& model, unsigned seed) {
    std::mt19937 rng(seed);
    PrimeField f(model.p);
    int N = model.N;
    auto rnd = [&](uint32_t lo, uint32_t hi) {
        return lo + rng() % (hi - lo + 1);
    };

    if (model.fam == Family::A) {
        for (;;) {
            MatrixFq m(model.p, N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) m.at(i, j) = rnd(0, model.p - 1);
            if (m.rank() == N) return m;
        }
    }

    MatrixFq h = weyl_lift(model, static_cast<int>(rng() % model.W->order()));
    // torus part
    MatrixFq t(model.p, N, N);
    for (int i = 0; i < model.rank; ++i) {
        uint32_t a = rnd(1, model.p - 1);
        t.at(i, i) = a;
        t.at(N - 1 - i, N - 1 - i) = f.inv(a);
    }
    if (model.fam == Family::B) t.at(model.rank, model.rank) = 1;
    h = h * t;
    // a few upper-triangular root elements
    for (int k = 0; k < 4; ++k) {
        int i = static_cast<int>(rng() % (N - 1));
        int j = i + 1 + static_cast<int>(rng() % (N - 1 - i));
        uint32_t c = rnd(1, model.p - 1);
        int mi = N - 1 - j, mj = N - 1 - i;
        for (uint32_t d = 0; d < model.p; ++d) {
            MatrixFq X(model.p, N, N);
            X.at(i, j) = c;
            X.at(mi, mj) = f.add(X.at(mi, mj), d);
            MatrixFq cond = X.transpose() * model.gram + model.gram * X;
            if (cond.is_zero()) {
                h = h * cayley_unipotent(X, model.p);
                break;
            }
        }
    }
    if (!model.preserves_form(h)) throw std::logic_error("random_group_element: bad element");
    return h;
}

} // namespace flagpart
