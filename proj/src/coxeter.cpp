#include "flagpart/coxeter.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace flagpart {

std::string GroupType::label() const {
    const char* fam = family == Family::A ? "A" : family == Family::B ? "B"
                      : family == Family::C                           ? "C"
                                                                      : "G";
    return fam + std::to_string(rank);
}

GroupType GroupType::parse(const std::string& label) {
    if (label.size() < 2) throw UnsupportedType("bad type label: " + label);
    Family fam;
    switch (label[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'G': fam = Family::G; break;
        default: throw UnsupportedType("bad type label: " + label);
    }
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw UnsupportedType("bad type label: " + label);
    }
    if (rank < 1) throw UnsupportedType("bad rank in type label: " + label);
    if (fam == Family::G && rank != 2) throw UnsupportedType("only G2 is supported");
    return GroupType{fam, rank};
}

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i + 1;
    return p;
}

// (*this).compose(o) applies o first, then *this.
SignedPerm SignedPerm::compose(const SignedPerm& o) const {
    SignedPerm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        int a = o.img[i];
        int b = img[std::abs(a) - 1];
        r.img[i] = a > 0 ? b : -b;
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        int a = img[i];
        r.img[std::abs(a) - 1] = a > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
    }
    return r;
}

std::pair<std::vector<int>, std::vector<int>> SignedPerm::signed_cycle_type() const {
    int n = static_cast<int>(img.size());
    std::vector<bool> seen(n, false);
    std::vector<int> pos, neg;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1, j = i;
        do {
            seen[j] = true;
            ++len;
            int a = img[j];
            if (a < 0) sign = -sign;
            j = std::abs(a) - 1;
        } while (j != i);
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {pos, neg};
}

std::vector<int> s2n_cycle_type(const std::pair<std::vector<int>, std::vector<int>>& t) {
    std::vector<int> parts;
    for (int j : t.first) {
        parts.push_back(j);
        parts.push_back(j);
    }
    for (int j : t.second) parts.push_back(2 * j);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

namespace {

SignedPerm transposition(int n, int a, int b) { // letters, 1-based
    SignedPerm p = SignedPerm::identity(n);
    p.img[a - 1] = b;
    p.img[b - 1] = a;
    return p;
}

SignedPerm flip(int n, int a) {
    SignedPerm p = SignedPerm::identity(n);
    p.img[a - 1] = -a;
    return p;
}

std::vector<long> mat_mul2(const std::vector<long>& a, const std::vector<long>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

long group_order(GroupType t) {
    long o = 1;
    switch (t.family) {
        case Family::A:
            for (int i = 2; i <= t.rank + 1; ++i) o *= i;
            return o;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= t.rank; ++i) o *= 2L * i;
            return o;
        case Family::G: return 12;
    }
    return 0;
}

} // namespace

CoxeterGroup::CoxeterGroup(GroupType t) : type_(t), label_(t.label()) {
    const int r = t.rank;
    if (group_order(t) > 10000)
        throw UnsupportedType("rank too large for full enumeration: " + label_);

    m_.assign(r, std::vector<int>(r, 2));
    for (int i = 0; i < r; ++i) m_[i][i] = 1;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < r; ++i) m_[i][i + 1] = m_[i + 1][i] = 3;
            break;
        case Family::B:
        case Family::C:
            for (int i = 0; i + 1 < r; ++i) m_[i][i + 1] = m_[i + 1][i] = 3;
            if (r >= 2) m_[r - 2][r - 1] = m_[r - 1][r - 2] = 4;
            break;
        case Family::G: m_[0][1] = m_[1][0] = 6; break;
    }

    // Generator realizations.  Rank-2 B/C follow the convention that s1 is the
    // long root: B2 s1 swaps coordinates, C2 s1 flips a sign.  For rank >= 3
    // (and generically) s_i swaps (i, i+1) and s_n flips coordinate n.
    if (t.family == Family::A) {
        int n = r + 1;
        for (int i = 1; i <= r; ++i) gens_.push_back(transposition(n, i, i + 1));
    } else if (t.family == Family::B || t.family == Family::C) {
        int n = r;
        if (r == 1) {
            gens_.push_back(flip(n, 1));
        } else if (r == 2 && t.family == Family::B) {
            gens_.push_back(transposition(n, 1, 2));
            gens_.push_back(flip(n, 2));
        } else if (r == 2 && t.family == Family::C) {
            gens_.push_back(flip(n, 2));
            gens_.push_back(transposition(n, 1, 2));
        } else {
            for (int i = 1; i < r; ++i) gens_.push_back(transposition(n, i, i + 1));
            gens_.push_back(flip(n, r));
        }
    } else {
        gen_mats_ = {{-1, 3, 0, 1}, {1, 0, 1, -1}};
    }

    build_elements();
    build_classes();
}

void CoxeterGroup::build_elements() {
    const int r = type_.rank;
    const bool matrix_model = type_.family == Family::G;

    std::map<std::vector<long>, int> mat_index;
    std::vector<std::vector<long>> mats;

    auto intern = [&](int parent, int s) -> int {
        // parent * s in the realization; returns id or -1 for a known element.
        if (matrix_model) {
            std::vector<long> m = parent < 0 ? std::vector<long>{1, 0, 0, 1}
                                             : mat_mul2(mats[parent], gen_mats_[s]);
            if (parent < 0) {
                mat_index[m] = 0;
                mats.push_back(m);
                return 0;
            }
            auto it = mat_index.find(m);
            if (it != mat_index.end()) return -1 - it->second;
            int id = static_cast<int>(mats.size());
            mat_index[m] = id;
            mats.push_back(m);
            return id;
        }
        SignedPerm p = parent < 0 ? SignedPerm::identity(static_cast<int>(gens_[0].img.size()))
                                  : perms_[parent].compose(gens_[s]);
        std::vector<int> key = p.img;
        auto it = perm_index_.find(key);
        if (parent < 0) {
            perm_index_[key] = 0;
            perms_.push_back(p);
            return 0;
        }
        if (it != perm_index_.end()) return -1 - it->second;
        int id = static_cast<int>(perms_.size());
        perm_index_[key] = id;
        perms_.push_back(p);
        return id;
    };

    intern(-1, 0);
    words_.push_back({});
    std::vector<int> frontier{0};
    std::vector<std::vector<int>> rmult_partial; // filled after BFS

    while (!frontier.empty()) {
        std::vector<int> next;
        for (int w : frontier) {
            for (int s = 0; s < r; ++s) {
                int id = intern(w, s);
                if (id >= 0) {
                    std::vector<uint8_t> word = words_[w];
                    word.push_back(static_cast<uint8_t>(s));
                    words_.push_back(std::move(word));
                    next.push_back(id);
                }
            }
        }
        frontier = std::move(next);
    }

    const int order = static_cast<int>(words_.size());
    gen_id_.resize(r);
    for (int s = 0; s < r; ++s) {
        if (matrix_model) {
            gen_id_[s] = mat_index.at(gen_mats_[s]);
        } else {
            gen_id_[s] = perm_index_.at(gens_[s].img);
        }
    }

    // Right multiplication by generators via the realization, then the full
    // multiplication table by folding canonical words.
    std::vector<std::vector<int>> rmult(order, std::vector<int>(r));
    for (int w = 0; w < order; ++w)
        for (int s = 0; s < r; ++s) {
            if (matrix_model) {
                rmult[w][s] = mat_index.at(mat_mul2(mats[w], gen_mats_[s]));
            } else {
                rmult[w][s] = perm_index_.at(perms_[w].compose(gens_[s]).img);
            }
        }

    mult_.assign(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int cur = a;
            for (uint8_t s : words_[b]) cur = rmult[cur][s];
            mult_[a][b] = cur;
        }

    inv_.assign(order, 0);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mult_[a][b] == 0) {
                inv_[a] = b;
                break;
            }

    w0_ = 0;
    for (int w = 0; w < order; ++w)
        if (length(w) > length(w0_)) w0_ = w;

    // Re-key the permutation index by ambient permutation for lookups from
    // the counting engine.
    if (!matrix_model) {
        perm_index_.clear();
        for (int w = 0; w < order; ++w) perm_index_[ambient_permutation(w)] = w;
    }
}

void CoxeterGroup::build_classes() {
    const int order = this->order();
    const int r = type_.rank;
    class_of_.assign(order, -1);
    std::vector<std::vector<int>> raw;

    for (int x = 0; x < order; ++x) {
        if (class_of_[x] >= 0) continue;
        std::vector<int> orbit{x};
        class_of_[x] = static_cast<int>(raw.size());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            int g = orbit[k];
            for (int s = 0; s < r; ++s) {
                int c = mult_[gen_id_[s]][mult_[g][gen_id_[s]]]; // s g s
                if (class_of_[c] < 0) {
                    class_of_[c] = class_of_[x];
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }

    classes_.clear();
    for (auto& members : raw) {
        ConjClass c;
        c.members = std::move(members);
        c.min_length = length(c.members.front());
        for (int w : c.members) c.min_length = std::min(c.min_length, length(w));
        for (int w : c.members)
            if (length(w) == c.min_length) c.min_members.push_back(w);
        c.rep = c.min_members.front();
        c.label = element_to_string(c.rep);
        if (has_perm_model() && type_.family != Family::A) {
            auto t = signed_cycle_type_of(c.rep);
            auto fmt = [](const std::vector<int>& v) {
                if (v.empty()) return std::string("-");
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + std::to_string(v[i]);
                return s;
            };
            c.cycle_label = "(" + fmt(t.first) + ";" + fmt(t.second) + ")";
        }
        classes_.push_back(std::move(c));
    }

    std::sort(classes_.begin(), classes_.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.min_length != b.min_length) return a.min_length < b.min_length;
        return a.rep < b.rep;
    });
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        classes_[i].id = static_cast<int>(i);
        for (int w : classes_[i].members) class_of_[w] = static_cast<int>(i);
    }
}

int CoxeterGroup::from_word(const std::vector<uint8_t>& word) const {
    int cur = 0;
    for (uint8_t s : word) {
        if (s >= static_cast<uint8_t>(rank())) throw std::out_of_range("generator index");
        cur = mult_[cur][gen_id_[s]];
    }
    return cur;
}

std::string CoxeterGroup::element_to_string(int w) const {
    if (w == 0) return "e";
    std::string s;
    for (std::size_t i = 0; i < words_[w].size(); ++i)
        s += (i ? "," : "") + std::to_string(static_cast<int>(words_[w][i]) + 1);
    return s;
}

int CoxeterGroup::element_from_string(const std::string& s) const {
    if (s == "e" || s.empty()) return 0;
    if (s == "w0") return w0_;
    std::vector<uint8_t> word;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int g = std::stoi(tok);
        if (g < 1 || g > rank()) throw std::out_of_range("generator index in: " + s);
        word.push_back(static_cast<uint8_t>(g - 1));
    }
    return from_word(word);
}

const CoxeterGroup::ConjClass& CoxeterGroup::class_of_word(const std::string& word) const {
    return classes_[class_of_[element_from_string(word)]];
}

const SignedPerm& CoxeterGroup::signed_perm(int w) const {
    if (!has_perm_model()) throw TypeMismatch("no permutation model for " + label_);
    return perms_[w];
}

int CoxeterGroup::ambient_size() const {
    switch (type_.family) {
        case Family::A: return type_.rank + 1;
        case Family::B: return 2 * type_.rank + 1;
        case Family::C: return 2 * type_.rank;
        default: throw TypeMismatch("no ambient model for " + label_);
    }
}

std::vector<int> CoxeterGroup::ambient_permutation(int w) const {
    const SignedPerm& p = signed_perm(w);
    int N = ambient_size();
    int n = static_cast<int>(p.img.size());
    std::vector<int> perm(N);
    if (type_.family == Family::A) {
        for (int i = 0; i < N; ++i) perm[i] = p.img[i] - 1;
        return perm;
    }
    if (type_.family == Family::B) perm[n] = n;
    for (int i = 0; i < n; ++i) {
        int a = p.img[i];
        int image_pos = a > 0 ? a - 1 : N - (-a);
        perm[i] = image_pos;
        perm[N - 1 - i] = N - 1 - image_pos;
    }
    return perm;
}

int CoxeterGroup::element_with_ambient_permutation(const std::vector<int>& perm) const {
    auto it = perm_index_.find(perm);
    return it == perm_index_.end() ? -1 : it->second;
}

std::pair<std::vector<int>, std::vector<int>> CoxeterGroup::signed_cycle_type_of(int w) const {
    if (type_.family != Family::B && type_.family != Family::C)
        throw TypeMismatch("signed cycle type needs type B/C");
    return signed_perm(w).signed_cycle_type();
}

std::vector<int> CoxeterGroup::s2n_cycle_type_of(int w) const {
    return s2n_cycle_type(signed_cycle_type_of(w));
}

const CoxeterGroup& CoxeterGroup::get(const std::string& type_label) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CoxeterGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(type_label);
    if (it == cache.end()) {
        auto g = std::make_unique<CoxeterGroup>(GroupType::parse(type_label));
        it = cache.emplace(type_label, std::move(g)).first;
    }
    return *it->second;
}

std::string partition_to_string(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
}

std::vector<int> partition_from_string(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

} // namespace flagpart
