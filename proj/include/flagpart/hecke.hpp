#ifndef FLAGPART_HECKE_HPP
#define FLAGPART_HECKE_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "flagpart/coxeter.hpp"
#include "flagpart/errors.hpp"
#include "flagpart/laurent.hpp"

namespace flagpart {

// Structure constants of the normalized basis: hatT_s * hatT_w is hatT_{sw}
// when the length goes up, and (1 - u^-1) hatT_w + u^-1 hatT_{sw} when it
// goes down.  K is LaurentPoly (symbolic u) or mpq_class (u specialized).
template <class K>
struct HeckeParam {
    K one, u_inv, one_minus_u_inv;
};

inline HeckeParam<LaurentPoly> symbolic_hecke_param() {
    return {LaurentPoly::one(), LaurentPoly::u_pow(-1),
            LaurentPoly::one() - LaurentPoly::u_pow(-1)};
}

inline HeckeParam<mpq_class> numeric_hecke_param(const mpq_class& u0) {
    if (u0 == 0) throw PoleAtSpecialization("Hecke parameter u = 0");
    return {mpq_class(1), 1 / u0, 1 - 1 / u0};
}

template <class K>
bool coeff_is_zero(const K& k);
template <>
inline bool coeff_is_zero<LaurentPoly>(const LaurentPoly& k) { return k.is_zero(); }
template <>
inline bool coeff_is_zero<mpq_class>(const mpq_class& k) { return k == 0; }

/// Finitely supported map w -> coefficient of hatT_w.
template <class K>
class HeckeElt {
  public:
    HeckeElt() : W_(nullptr) {}
    explicit HeckeElt(const CoxeterGroup& W) : W_(&W) {}

    static HeckeElt basis(const CoxeterGroup& W, int w, K coeff) {
        HeckeElt h(W);
        h.add(w, std::move(coeff));
        return h;
    }

    const CoxeterGroup& group() const { return *W_; }
    const std::map<int, K>& coeffs() const { return c_; }

    K coeff(int w) const {
        auto it = c_.find(w);
        return it == c_.end() ? K{} : it->second;
    }

    void add(int w, const K& v) {
        if (coeff_is_zero(v)) return;
        auto it = c_.find(w);
        if (it == c_.end()) {
            c_.emplace(w, v);
        } else {
            it->second += v;
            if (coeff_is_zero(it->second)) c_.erase(it);
        }
    }

    HeckeElt& operator+=(const HeckeElt& o) {
        check_group(o);
        for (const auto& [w, v] : o.c_) add(w, v);
        return *this;
    }
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }

    HeckeElt operator-() const {
        HeckeElt r(*W_);
        for (const auto& [w, v] : c_) r.c_[w] = -v;
        return r;
    }
    HeckeElt& operator-=(const HeckeElt& o) { return *this += -o; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }

    HeckeElt scaled(const K& s) const {
        HeckeElt r(*W_);
        if (coeff_is_zero(s)) return r;
        for (const auto& [w, v] : c_) r.add(w, s * v);
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.c_ == b.c_; }

    void check_group(const HeckeElt& o) const {
        if (W_ != o.W_) throw GroupMismatch("Hecke elements over different groups");
    }

  private:
    const CoxeterGroup* W_;
    std::map<int, K> c_;
};

template <class K>
HeckeElt<K> gen_left_mul(const HeckeParam<K>& par, int s, const HeckeElt<K>& h) {
    const CoxeterGroup& W = h.group();
    HeckeElt<K> r(W);
    for (const auto& [w, v] : h.coeffs()) {
        int sw = W.left_mult_gen(s, w);
        if (W.length(sw) > W.length(w)) {
            r.add(sw, v);
        } else {
            r.add(w, par.one_minus_u_inv * v);
            r.add(sw, par.u_inv * v);
        }
    }
    return r;
}

template <class K>
HeckeElt<K> gen_right_mul(const HeckeParam<K>& par, const HeckeElt<K>& h, int s) {
    const CoxeterGroup& W = h.group();
    HeckeElt<K> r(W);
    for (const auto& [w, v] : h.coeffs()) {
        int ws = W.right_mult_gen(w, s);
        if (W.length(ws) > W.length(w)) {
            r.add(ws, v);
        } else {
            r.add(w, par.one_minus_u_inv * v);
            r.add(ws, par.u_inv * v);
        }
    }
    return r;
}

/// Product in the hatT basis: bilinear, with hatT_{w1} applied through the
/// generators of a reduced word of w1.
template <class K>
HeckeElt<K> hatT_mul(const HeckeParam<K>& par, const HeckeElt<K>& a, const HeckeElt<K>& b) {
    a.check_group(b);
    const CoxeterGroup& W = a.group();
    HeckeElt<K> out(W);
    for (const auto& [w1, c1] : a.coeffs()) {
        HeckeElt<K> acc = b;
        const auto& word = W.word(w1);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = gen_left_mul(par, *it, acc);
        out += acc.scaled(c1);
    }
    return out;
}

template <class K>
struct CentralityWitness {
    bool central = true;
    int generator = -1; // 1-based on failure
    int at_element = -1;
    K difference{};
};

/// hatT_s h == h hatT_s for every generator s.
template <class K>
CentralityWitness<K> is_central(const HeckeParam<K>& par, const HeckeElt<K>& h) {
    const CoxeterGroup& W = h.group();
    for (int s = 0; s < W.rank(); ++s) {
        HeckeElt<K> diff = gen_left_mul(par, s, h) - gen_right_mul(par, h, s);
        if (!diff.is_zero()) {
            auto [w, v] = *diff.coeffs().begin();
            return {false, s + 1, w, v};
        }
    }
    return {};
}

/// For a central element: the common coefficient on C cap W_min per class.
/// Throws MinCoeffMismatch when conjugate minimal-length elements disagree.
template <class K>
std::map<int, K> min_coeff_profile(const HeckeElt<K>& h) {
    const CoxeterGroup& W = h.group();
    std::map<int, K> out;
    for (const auto& cls : W.conjugacy_classes()) {
        K value = h.coeff(cls.min_members.front());
        for (int w : cls.min_members)
            if (!coeff_is_zero(K(h.coeff(w) - value)))
                throw MinCoeffMismatch("class " + cls.label + ": minimal-length coefficients differ at " +
                                       W.element_to_string(w));
        out[cls.id] = value;
    }
    return out;
}

/// Coefficientwise evaluation at a rational point.
inline HeckeElt<mpq_class> specialize(const HeckeElt<LaurentPoly>& h, const mpq_class& u0) {
    HeckeElt<mpq_class> r(h.group());
    for (const auto& [w, v] : h.coeffs()) r.add(w, v.eval(u0));
    return r;
}

/// Element of Z[W].
class GroupAlgebraElement {
  public:
    explicit GroupAlgebraElement(const CoxeterGroup& W) : W_(&W) {}

    const CoxeterGroup& group() const { return *W_; }
    const std::map<int, mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int w) const {
        auto it = c_.find(w);
        return it == c_.end() ? mpz_class(0) : it->second;
    }
    void add(int w, const mpz_class& v) {
        if (v == 0) return;
        c_[w] += v;
        if (c_[w] == 0) c_.erase(w);
    }

    GroupAlgebraElement mul_element_left(int g) const {
        GroupAlgebraElement r(*W_);
        for (const auto& [w, v] : c_) r.add(W_->mult(g, w), v);
        return r;
    }
    GroupAlgebraElement mul_element_right(int g) const {
        GroupAlgebraElement r(*W_);
        for (const auto& [w, v] : c_) r.add(W_->mult(w, g), v);
        return r;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.c_ == b.c_;
    }

    /// Central in Z[W]: commutes with every group element.
    bool commutes_with_all() const {
        for (int g = 0; g < W_->order(); ++g)
            if (!(mul_element_left(g) == mul_element_right(g))) return false;
        return true;
    }

  private:
    const CoxeterGroup* W_;
    std::map<int, mpz_class> c_;
};

/// u = 1 image in Z[W].
inline GroupAlgebraElement at_one(const HeckeElt<LaurentPoly>& h) {
    GroupAlgebraElement r(h.group());
    for (const auto& [w, v] : h.coeffs()) r.add(w, v.at_one());
    return r;
}

} // namespace flagpart

#endif
