#include "flagpart/flag_count.hpp"

#include <atomic>
#include <cstring>
#include <thread>

#include <json.hpp>

namespace flagpart {

unsigned long long flag_total(const CoxeterGroup& W, uint32_t q) {
    unsigned long long t = 0;
    for (int w = 0; w < W.order(); ++w) {
        unsigned long long pw = 1;
        for (int i = 0; i < W.length(w); ++i) pw *= q;
        t += pw;
    }
    return t;
}

const std::vector<uint32_t>& supported_count_primes() {
    static const std::vector<uint32_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    return primes;
}

std::string CountVector::json() const {
    nlohmann::json j;
    j["type"] = type_label;
    j["q"] = q;
    j["class"] = class_spec;
    j["variant"] = variant;
    j["version"] = kCodeVersion;
    nlohmann::json c = nlohmann::json::object();
    const CoxeterGroup& W = CoxeterGroup::get(type_label);
    for (int w = 0; w < W.order(); ++w)
        if (counts[w]) c[W.element_to_string(w)] = counts[w];
    j["counts"] = c;
    return j.dump(2);
}

CountVector CountVector::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CountVector cv;
    cv.type_label = j.at("type").get<std::string>();
    cv.q = j.at("q").get<uint32_t>();
    cv.class_spec = j.at("class").get<std::string>();
    cv.variant = j.at("variant").get<std::string>();
    if (j.value("version", std::string()) != kCodeVersion)
        throw std::runtime_error("cache version mismatch");
    const CoxeterGroup& W = CoxeterGroup::get(cv.type_label);
    cv.counts.assign(W.order(), 0);
    for (auto& [word, val] : j.at("counts").items())
        cv.counts[W.element_from_string(word)] = val.get<unsigned long long>();
    return cv;
}

namespace {

constexpr int MAXN = 8;

struct Vec {
    uint32_t c[MAXN];
};

template <uint32_t P>
struct Mod {
    static uint32_t add(uint32_t a, uint32_t b) {
        uint32_t s = a + b;
        return s >= P ? s - P : s;
    }
    static uint32_t sub(uint32_t a, uint32_t b) { return a >= b ? a - b : a + P - b; }
    static uint32_t mul(uint32_t a, uint32_t b) { return a * b % P; }
    static uint32_t inv(uint32_t a) {
        uint32_t r = 1, base = a % P, e = P - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

struct JobSetup {
    int N = 0;
    int nlev = 0; // chosen levels (A: N-1; B/C: rank)
    Family fam = Family::A;
    uint32_t gram[MAXN][MAXN] = {};
    std::vector<std::array<uint32_t, MAXN * MAXN>> elements;
    std::vector<int> perm_to_wid; // base-MAXN code -> element id
    int order = 0;
};

JobSetup make_setup(const GroupModel& model, const std::vector<MatrixFq>& gs) {
    JobSetup job;
    job.N = model.N;
    job.fam = model.fam;
    job.nlev = model.fam == Family::A ? model.N - 1 : model.rank;
    job.order = model.W->order();
    if (model.has_form())
        for (int i = 0; i < model.N; ++i)
            for (int j = 0; j < model.N; ++j) job.gram[i][j] = model.gram.at(i, j);
    for (const auto& g : gs) {
        if (g.rows() != model.N || g.cols() != model.N || g.p() != model.p)
            throw std::invalid_argument("element shape/field mismatch");
        if (!model.preserves_form(g))
            throw std::invalid_argument("element does not preserve the form");
        std::array<uint32_t, MAXN * MAXN> a{};
        for (int i = 0; i < model.N; ++i)
            for (int j = 0; j < model.N; ++j) a[i * MAXN + j] = g.at(i, j);
        job.elements.push_back(a);
    }
    int table = 1;
    for (int i = 0; i < model.N; ++i) table *= MAXN;
    job.perm_to_wid.assign(table, -1);
    for (int w = 0; w < model.W->order(); ++w) {
        auto perm = model.W->ambient_permutation(w);
        int code = 0;
        for (int j = 0; j < model.N; ++j) code = code * MAXN + perm[j];
        job.perm_to_wid[code] = w;
    }
    return job;
}

template <uint32_t P>
class Counter {
  public:
    explicit Counter(const JobSetup& job) : job_(job), N_(job.N) {}

    struct Worker {
        uint32_t rows[MAXN][MAXN];
        Vec comp[MAXN + 1][MAXN];
        int compdim[MAXN + 1];
        std::vector<std::vector<unsigned long long>> counts; // [element][wid]

        explicit Worker(const JobSetup& j) {
            counts.assign(j.elements.size(), std::vector<unsigned long long>(j.order, 0));
        }
    };

    struct FirstChoice {
        Vec v;
        uint32_t coeff[MAXN];
        int lead;
    };

    std::vector<FirstChoice> first_level() const {
        Vec comp[MAXN];
        for (int i = 0; i < N_; ++i) {
            std::memset(comp[i].c, 0, sizeof(comp[i].c));
            comp[i].c[i] = 1;
        }
        std::vector<FirstChoice> out;
        enumerate_level(comp, N_, [&](const Vec& v, const uint32_t* coeff, int lead) {
            FirstChoice fc;
            fc.v = v;
            std::memcpy(fc.coeff, coeff, sizeof(fc.coeff));
            fc.lead = lead;
            out.push_back(fc);
        });
        return out;
    }

    void run_first(Worker& w, const FirstChoice& fc) const {
        for (int i = 0; i < N_; ++i) {
            std::memset(w.comp[0][i].c, 0, sizeof(w.comp[0][i].c));
            w.comp[0][i].c[i] = 1;
        }
        w.compdim[0] = N_;
        descend(w, 0, fc.v, fc.coeff, fc.lead);
    }

  private:
    const JobSetup& job_;
    int N_;

    bool orthogonal() const { return job_.fam == Family::B; }
    bool has_form() const { return job_.fam != Family::A; }

    uint32_t form(const uint32_t* x, const uint32_t* y) const {
        uint32_t acc = 0;
        for (int i = 0; i < N_; ++i) {
            if (!x[i]) continue;
            uint32_t row = 0;
            for (int j = 0; j < N_; ++j)
                if (job_.gram[i][j]) row = Mod<P>::add(row, Mod<P>::mul(job_.gram[i][j], y[j]));
            acc = Mod<P>::add(acc, Mod<P>::mul(x[i], row));
        }
        return acc;
    }

    // Projective representatives over the complement basis, isotropy-filtered
    // for orthogonal groups.  fn(v, coeff, lead).
    template <class Fn>
    void enumerate_level(const Vec* comp, int d, Fn&& fn) const {
        uint32_t coeff[MAXN];
        for (int lead = 0; lead < d; ++lead) {
            for (int k = 0; k < d; ++k) coeff[k] = 0;
            coeff[lead] = 1;
            for (;;) {
                Vec v;
                for (int j = 0; j < N_; ++j) {
                    uint32_t s = comp[lead].c[j];
                    for (int k = lead + 1; k < d; ++k)
                        if (coeff[k]) s = Mod<P>::add(s, Mod<P>::mul(coeff[k], comp[k].c[j]));
                    v.c[j] = s;
                }
                if (!orthogonal() || form(v.c, v.c) == 0) fn(v, coeff, lead);
                int k = d - 1;
                while (k > lead) {
                    if (++coeff[k] < P) break;
                    coeff[k] = 0;
                    --k;
                }
                if (k <= lead) break;
            }
        }
    }

    // rows[level] := v; comp[level+1] from comp[level] using v's coefficients.
    void build_next_complement(Worker& w, int level, const Vec& v, const uint32_t* cc,
                               int lead) const {
        const int d = w.compdim[level];
        const Vec* comp = w.comp[level];
        Vec* out = w.comp[level + 1];
        if (!has_form()) {
            int m = 0;
            for (int k = 0; k < d; ++k)
                if (k != lead) out[m++] = comp[k];
            w.compdim[level + 1] = m;
            return;
        }
        uint32_t beta[MAXN];
        int k0 = -1;
        for (int k = 0; k < d; ++k) {
            beta[k] = form(comp[k].c, v.c);
            if (k0 < 0 && beta[k]) k0 = k;
        }
        if (k0 < 0) throw std::logic_error("degenerate complement");
        uint32_t ik0 = Mod<P>::inv(beta[k0]);
        int drop = lead != k0 ? lead : -1;
        if (drop < 0)
            for (int k = lead + 1; k < d; ++k)
                if (k != k0 && cc[k]) {
                    drop = k;
                    break;
                }
        if (drop < 0) throw std::logic_error("no droppable direction");
        int m = 0;
        for (int k = 0; k < d; ++k) {
            if (k == k0 || k == drop) continue;
            Vec x = comp[k];
            if (beta[k]) {
                uint32_t fscale = Mod<P>::mul(beta[k], ik0);
                for (int j = 0; j < N_; ++j)
                    x.c[j] = Mod<P>::sub(x.c[j], Mod<P>::mul(fscale, comp[k0].c[j]));
            }
            out[m++] = x;
        }
        w.compdim[level + 1] = m;
    }

    void descend(Worker& w, int level, const Vec& v, const uint32_t* cc, int lead) const {
        for (int j = 0; j < N_; ++j) w.rows[level][j] = v.c[j];
        build_next_complement(w, level, v, cc, lead);
        if (level + 1 == job_.nlev) {
            leaf(w);
            return;
        }
        enumerate_level(w.comp[level + 1], w.compdim[level + 1],
                        [&](const Vec& nv, const uint32_t* ncc, int nlead) {
                            descend(w, level + 1, nv, ncc, nlead);
                        });
    }

    void leaf(Worker& w) const {
        uint32_t full[MAXN][MAXN];
        for (int i = 0; i < job_.nlev; ++i)
            for (int j = 0; j < N_; ++j) full[i][j] = w.rows[i][j];

        uint32_t ech[MAXN][MAXN];
        int pivcol[MAXN];
        int nech = 0;
        auto try_add = [&](const uint32_t* row, uint32_t* fullrow) -> bool {
            uint32_t t[MAXN];
            for (int j = 0; j < N_; ++j) t[j] = row[j];
            for (int e = 0; e < nech; ++e) {
                uint32_t fac = t[pivcol[e]];
                if (!fac) continue;
                for (int j = 0; j < N_; ++j) t[j] = Mod<P>::sub(t[j], Mod<P>::mul(fac, ech[e][j]));
            }
            int pc = -1;
            for (int j = 0; j < N_; ++j)
                if (t[j]) {
                    pc = j;
                    break;
                }
            if (pc < 0) return false;
            uint32_t inv = Mod<P>::inv(t[pc]);
            for (int j = 0; j < N_; ++j) ech[nech][j] = Mod<P>::mul(t[j], inv);
            pivcol[nech] = pc;
            ++nech;
            if (fullrow)
                for (int j = 0; j < N_; ++j) fullrow[j] = row[j];
            return true;
        };
        for (int i = 0; i < job_.nlev; ++i) try_add(full[i], nullptr);

        if (has_form()) {
            for (int m = job_.nlev; m < N_; ++m) {
                int k = N_ - 1 - m; // V_{m+1} = (V_k)^perp = V_k + span(comp[k])
                bool ok = false;
                for (int cand = 0; cand < w.compdim[k] && !ok; ++cand)
                    ok = try_add(w.comp[k][cand].c, full[m]);
                if (!ok) throw std::logic_error("flag completion failed");
            }
        } else {
            if (w.compdim[job_.nlev] != 1) throw std::logic_error("bad final complement");
            if (!try_add(w.comp[job_.nlev][0].c, full[N_ - 1]))
                throw std::logic_error("flag completion failed");
        }

        uint32_t M[MAXN][MAXN], Minv[MAXN][MAXN];
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) M[i][j] = full[j][i];
        invert(M, Minv);

        uint32_t D[MAXN][MAXN], C[MAXN][MAXN];
        for (std::size_t gi = 0; gi < job_.elements.size(); ++gi) {
            const uint32_t* g = job_.elements[gi].data();
            for (int i = 0; i < N_; ++i)
                for (int j = 0; j < N_; ++j) {
                    uint32_t s = 0;
                    for (int k = 0; k < N_; ++k)
                        if (g[i * MAXN + k])
                            s = Mod<P>::add(s, Mod<P>::mul(g[i * MAXN + k], M[k][j]));
                    D[i][j] = s;
                }
            for (int i = 0; i < N_; ++i)
                for (int j = 0; j < N_; ++j) {
                    uint32_t s = 0;
                    for (int k = 0; k < N_; ++k)
                        if (Minv[i][k]) s = Mod<P>::add(s, Mod<P>::mul(Minv[i][k], D[k][j]));
                    C[i][j] = s;
                }
            int code = bruhat_code(C);
            int wid = job_.perm_to_wid[code];
            if (wid < 0) throw std::logic_error("relative position outside the Weyl group");
            ++w.counts[gi][wid];
        }
    }

    void invert(const uint32_t a_in[MAXN][MAXN], uint32_t out[MAXN][MAXN]) const {
        uint32_t a[MAXN][MAXN];
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) {
                a[i][j] = a_in[i][j];
                out[i][j] = i == j ? 1 : 0;
            }
        for (int col = 0; col < N_; ++col) {
            int piv = -1;
            for (int i = col; i < N_; ++i)
                if (a[i][col]) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::logic_error("singular flag matrix");
            if (piv != col)
                for (int j = 0; j < N_; ++j) {
                    std::swap(a[col][j], a[piv][j]);
                    std::swap(out[col][j], out[piv][j]);
                }
            uint32_t inv = Mod<P>::inv(a[col][col]);
            for (int j = 0; j < N_; ++j) {
                a[col][j] = Mod<P>::mul(a[col][j], inv);
                out[col][j] = Mod<P>::mul(out[col][j], inv);
            }
            for (int i = 0; i < N_; ++i) {
                if (i == col || !a[i][col]) continue;
                uint32_t fac = a[i][col];
                for (int j = 0; j < N_; ++j) {
                    a[i][j] = Mod<P>::sub(a[i][j], Mod<P>::mul(fac, a[col][j]));
                    out[i][j] = Mod<P>::sub(out[i][j], Mod<P>::mul(fac, out[col][j]));
                }
            }
        }
    }

    // Bruhat pivot pattern: columns left to right, eliminate at earlier pivot
    // rows, pivot = lowest remaining nonzero row.
    int bruhat_code(uint32_t C[MAXN][MAXN]) const {
        uint32_t red[MAXN][MAXN];
        int pivrow[MAXN];
        int code = 0;
        for (int j = 0; j < N_; ++j) {
            uint32_t col[MAXN];
            for (int i = 0; i < N_; ++i) col[i] = C[i][j];
            for (int t = 0; t < j; ++t) {
                uint32_t fac = col[pivrow[t]];
                if (!fac) continue;
                uint32_t scale = Mod<P>::mul(fac, Mod<P>::inv(red[t][pivrow[t]]));
                for (int i = 0; i < N_; ++i)
                    col[i] = Mod<P>::sub(col[i], Mod<P>::mul(scale, red[t][i]));
            }
            int pr = -1;
            for (int i = N_ - 1; i >= 0; --i)
                if (col[i]) {
                    pr = i;
                    break;
                }
            if (pr < 0) throw std::logic_error("singular relative-position matrix");
            pivrow[j] = pr;
            for (int i = 0; i < N_; ++i) red[j][i] = col[i];
            code = code * MAXN + pr;
        }
        return code;
    }
};

template <uint32_t P>
std::vector<std::vector<unsigned long long>> run_counts(const GroupModel& model,
                                                        const std::vector<MatrixFq>& gs,
                                                        int jobs) {
    JobSetup job = make_setup(model, gs);
    Counter<P> counter(job);
    auto firsts = counter.first_level();

    int nthreads = std::max(1, jobs);
    if (!firsts.empty())
        nthreads = std::min<int>(nthreads, static_cast<int>(firsts.size()));
    std::atomic<std::size_t> next{0};
    std::vector<typename Counter<P>::Worker> workers;
    workers.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) workers.emplace_back(job);

    auto body = [&](int t) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= firsts.size()) break;
            counter.run_first(workers[static_cast<std::size_t>(t)], firsts[i]);
        }
    };
    if (nthreads == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(body, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<unsigned long long>> out(gs.size(),
                                                     std::vector<unsigned long long>(job.order, 0));
    for (auto& w : workers)
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
            for (int k = 0; k < job.order; ++k) out[gi][k] += w.counts[gi][k];
    return out;
}

std::vector<std::vector<unsigned long long>> run_counts_dispatch(const GroupModel& model,
                                                                 const std::vector<MatrixFq>& gs,
                                                                 int jobs) {
    switch (model.p) {
        case 2: return run_counts<2>(model, gs, jobs);
        case 3: return run_counts<3>(model, gs, jobs);
        case 5: return run_counts<5>(model, gs, jobs);
        case 7: return run_counts<7>(model, gs, jobs);
        case 11: return run_counts<11>(model, gs, jobs);
        case 13: return run_counts<13>(model, gs, jobs);
        case 17: return run_counts<17>(model, gs, jobs);
        case 19: return run_counts<19>(model, gs, jobs);
        case 23: return run_counts<23>(model, gs, jobs);
        case 29: return run_counts<29>(model, gs, jobs);
        case 31: return run_counts<31>(model, gs, jobs);
        default:
            throw UnsupportedType("counting kernel not compiled for p = " + std::to_string(model.p));
    }
}

} // namespace

void enumerate_flags(const GroupModel& model, const std::function<void(const MatrixFq&)>& fn) {
    PrimeField f(model.p);
    const int N = model.N;
    const int nlev = model.fam == Family::A ? N - 1 : model.rank;
    const bool orth = model.fam == Family::B;
    const bool has_form = model.fam != Family::A;

    std::vector<std::vector<uint32_t>> rows;
    std::vector<std::vector<std::vector<uint32_t>>> comps(static_cast<std::size_t>(nlev) + 1);
    comps[0].clear();
    for (int i = 0; i < N; ++i) {
        std::vector<uint32_t> e(N, 0);
        e[i] = 1;
        comps[0].push_back(e);
    }

    std::function<void(int)> rec = [&](int level) {
        if (level == nlev) {
            MatrixFq chain(model.p, nlev, N);
            for (int i = 0; i < nlev; ++i)
                for (int j = 0; j < N; ++j) chain.at(i, j) = rows[i][j];
            fn(canonicalize_chain(chain));
            return;
        }
        const auto comp = comps[level]; // copy: children overwrite deeper entries
        int d = static_cast<int>(comp.size());
        std::vector<uint32_t> coeff(d, 0);
        for (int lead = 0; lead < d; ++lead) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[lead] = 1;
            for (;;) {
                std::vector<uint32_t> v(N, 0);
                for (int j = 0; j < N; ++j) {
                    uint32_t s = comp[lead][j];
                    for (int k = lead + 1; k < d; ++k)
                        if (coeff[k]) s = f.add(s, f.mul(coeff[k], comp[k][j]));
                    v[j] = s;
                }
                if (!orth || model.form(v, v) == 0) {
                    auto& nxt = comps[level + 1];
                    nxt.clear();
                    if (!has_form) {
                        for (int k = 0; k < d; ++k)
                            if (k != lead) nxt.push_back(comp[k]);
                    } else {
                        std::vector<uint32_t> beta(d);
                        int k0 = -1;
                        for (int k = 0; k < d; ++k) {
                            beta[k] = model.form(comp[k], v);
                            if (k0 < 0 && beta[k]) k0 = k;
                        }
                        if (k0 < 0) throw std::logic_error("degenerate complement");
                        uint32_t ik0 = f.inv(beta[k0]);
                        int drop = lead != k0 ? lead : -1;
                        if (drop < 0)
                            for (int k = lead + 1; k < d; ++k)
                                if (k != k0 && coeff[k]) {
                                    drop = k;
                                    break;
                                }
                        if (drop < 0) throw std::logic_error("no droppable direction");
                        for (int k = 0; k < d; ++k) {
                            if (k == k0 || k == drop) continue;
                            auto x = comp[k];
                            if (beta[k]) {
                                uint32_t fac = f.mul(beta[k], ik0);
                                for (int j = 0; j < N; ++j) x[j] = f.sub(x[j], f.mul(fac, comp[k0][j]));
                            }
                            nxt.push_back(std::move(x));
                        }
                    }
                    rows.push_back(v);
                    rec(level + 1);
                    rows.pop_back();
                }
                int k = d - 1;
                while (k > lead) {
                    if (++coeff[k] < model.p) break;
                    coeff[k] = 0;
                    --k;
                }
                if (k <= lead) break;
            }
        }
    };
    rec(0);
}

MatrixFq canonicalize_chain(const MatrixFq& rows) {
    PrimeField f(rows.p());
    MatrixFq out = rows;
    std::vector<int> pivots;
    for (int i = 0; i < out.rows(); ++i) {
        for (int e = 0; e < i; ++e) {
            uint32_t fac = out.at(i, pivots[e]);
            if (!fac) continue;
            for (int j = 0; j < out.cols(); ++j)
                out.at(i, j) = f.sub(out.at(i, j), f.mul(fac, out.at(e, j)));
        }
        int pc = -1;
        for (int j = 0; j < out.cols(); ++j)
            if (out.at(i, j)) {
                pc = j;
                break;
            }
        if (pc < 0) throw std::invalid_argument("chain rows not independent");
        uint32_t inv = f.inv(out.at(i, pc));
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = f.mul(out.at(i, j), inv);
        pivots.push_back(pc);
    }
    return out;
}

MatrixFq complete_isotropic_flag(const GroupModel& model, const MatrixFq& chain) {
    PrimeField f(model.p);
    const int N = model.N;
    if (chain.cols() != N) throw std::invalid_argument("chain width mismatch");
    const int k = chain.rows();

    if (model.has_form()) {
        if (k != model.rank) throw std::invalid_argument("need a maximal isotropic chain");
        for (int a = 0; a < k; ++a)
            for (int b = 0; b <= a; ++b) {
                std::vector<uint32_t> ra(N), rb(N);
                for (int j = 0; j < N; ++j) {
                    ra[j] = chain.at(a, j);
                    rb[j] = chain.at(b, j);
                }
                if (model.form(ra, rb) != 0) throw NotIsotropic("chain is not isotropic");
            }
    }

    MatrixFq full(model.p, N, N);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < N; ++j) full.at(i, j) = chain.at(i, j);

    std::vector<std::vector<uint32_t>> rowsed;
    std::vector<int> pivots;
    auto try_add = [&](const std::vector<uint32_t>& row) -> bool {
        std::vector<uint32_t> t = row;
        for (std::size_t e = 0; e < rowsed.size(); ++e) {
            uint32_t fac = t[pivots[e]];
            if (!fac) continue;
            for (int j = 0; j < N; ++j) t[j] = f.sub(t[j], f.mul(fac, rowsed[e][j]));
        }
        int pc = -1;
        for (int j = 0; j < N; ++j)
            if (t[j]) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        uint32_t inv = f.inv(t[pc]);
        for (int j = 0; j < N; ++j) t[j] = f.mul(t[j], inv);
        rowsed.push_back(t);
        pivots.push_back(pc);
        return true;
    };
    for (int i = 0; i < k; ++i) {
        std::vector<uint32_t> row(N);
        for (int j = 0; j < N; ++j) row[j] = chain.at(i, j);
        if (!try_add(row)) throw std::invalid_argument("chain rows not independent");
    }

    if (!model.has_form()) {
        for (int m = k; m < N; ++m)
            for (int cand = 0; cand < N; ++cand) {
                std::vector<uint32_t> e(N, 0);
                e[cand] = 1;
                if (try_add(e)) {
                    for (int j = 0; j < N; ++j) full.at(m, j) = e[j];
                    break;
                }
            }
        return full;
    }

    for (int m = k; m < N; ++m) {
        int kk = N - 1 - m; // V_{m+1} = (V_kk)^perp
        MatrixFq sub(model.p, kk, N);
        for (int i = 0; i < kk; ++i)
            for (int j = 0; j < N; ++j) sub.at(i, j) = chain.at(i, j);
        MatrixFq ns = (sub * model.gram).right_nullspace();
        bool ok = false;
        for (int c = 0; c < ns.cols() && !ok; ++c) {
            std::vector<uint32_t> v(N);
            for (int j = 0; j < N; ++j) v[j] = ns.at(j, c);
            if (try_add(v)) {
                for (int j = 0; j < N; ++j) full.at(m, j) = v[j];
                ok = true;
            }
        }
        if (!ok) throw std::logic_error("completion failed");
    }
    return full;
}

int relative_position(const GroupModel& model, const MatrixFq& flag1, const MatrixFq& flag2) {
    PrimeField f(model.p);
    const int N = model.N;
    if (flag1.rows() != N || flag2.rows() != N)
        throw std::invalid_argument("relative_position needs complete flags");

    if (model.has_form()) {
        auto check_selfdual = [&](const MatrixFq& r) {
            MatrixFq g = r * model.gram * r.transpose();
            for (int a = 0; a < N; ++a)
                for (int b = 0; a + b <= N - 2; ++b)
                    if (g.at(a, b)) throw NotSelfDual("flag is not self-dual");
        };
        check_selfdual(flag1);
        check_selfdual(flag2);
    }

    MatrixFq M1 = flag1.transpose(), M2 = flag2.transpose();
    MatrixFq C = M1.inverse() * M2;

    std::vector<int> perm(N, -1);
    std::vector<std::vector<uint32_t>> red;
    std::vector<int> pivrow;
    for (int j = 0; j < N; ++j) {
        std::vector<uint32_t> col(N);
        for (int i = 0; i < N; ++i) col[i] = C.at(i, j);
        for (std::size_t t = 0; t < red.size(); ++t) {
            uint32_t fac = col[pivrow[t]];
            if (!fac) continue;
            uint32_t scale = f.mul(fac, f.inv(red[t][pivrow[t]]));
            for (int i = 0; i < N; ++i) col[i] = f.sub(col[i], f.mul(scale, red[t][i]));
        }
        int pr = -1;
        for (int i = N - 1; i >= 0; --i)
            if (col[i]) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::invalid_argument("flags are degenerate");
        perm[j] = pr;
        red.push_back(col);
        pivrow.push_back(pr);
    }
    int w = model.W->element_with_ambient_permutation(perm);
    if (w < 0) {
        std::string s;
        for (int v : perm) s += std::to_string(v) + ",";
        throw PermutationOutsideSubgroup("relative position " + s);
    }
    return w;
}

CountVector count_partition(const GroupModel& model, const MatrixFq& g,
                            const std::string& class_spec, const std::string& variant, int jobs) {
    auto r = count_many(model, {g}, {{class_spec, variant}}, jobs);
    return r.front();
}

std::vector<CountVector> count_many(const GroupModel& model, const std::vector<MatrixFq>& gs,
                                    const std::vector<std::pair<std::string, std::string>>& specs,
                                    int jobs) {
    if (gs.size() != specs.size()) throw std::invalid_argument("specs/elements size mismatch");
    auto counts = run_counts_dispatch(model, gs, jobs);
    std::vector<CountVector> out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        CountVector cv;
        cv.type_label = model.type_label();
        cv.q = model.p;
        cv.class_spec = specs[i].first;
        cv.variant = specs[i].second;
        cv.counts = std::move(counts[i]);
        out.push_back(std::move(cv));
    }
    return out;
}

} // namespace flagpart
