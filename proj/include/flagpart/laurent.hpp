#ifndef FLAGPART_LAURENT_HPP
#define FLAGPART_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagpart/errors.hpp"

namespace flagpart {

/// Integer Laurent polynomial in the variable u (= v^2).  Finitely supported,
/// no zero coefficients are ever stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(const mpz_class& c) {
        LaurentPoly p;
        if (c != 0) p.c_[0] = c;
        return p;
    }

    static LaurentPoly one() { return constant(1); }

    /// c * u^e
    static LaurentPoly term(const mpz_class& c, int e) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = c;
        return p;
    }

    static LaurentPoly u_pow(int e) { return term(1, e); }

    /// Build from ascending coefficients starting at exponent min_exp.
    static LaurentPoly from_coeffs(int min_exp, const std::vector<mpz_class>& coeffs) {
        LaurentPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.c_[min_exp + static_cast<int>(i)] = coeffs[i];
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    const std::map<int, mpz_class>& coeffs() const { return c_; }

    mpz_class coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? mpz_class(0) : it->second;
    }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, v] : a.c_) r.c_[e] = -v;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const mpz_class& s, const LaurentPoly& a) {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, v] : a.c_) r.c_[e] = s * v;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Evaluate at a rational point.  u0 = 0 with negative exponents present is a pole.
    mpq_class eval(const mpq_class& u0) const {
        if (u0 == 0 && !c_.empty() && min_exp() < 0)
            throw PoleAtSpecialization("LaurentPoly::eval at u=0 with negative exponents");
        mpq_class acc = 0;
        for (const auto& [e, v] : c_) {
            mpq_class t(v);
            if (e >= 0) {
                mpz_class num;
                mpz_pow_ui(num.get_mpz_t(), u0.get_num().get_mpz_t(), static_cast<unsigned long>(e));
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), u0.get_den().get_mpz_t(), static_cast<unsigned long>(e));
                t *= mpq_class(num, den);
            } else {
                mpz_class num;
                mpz_pow_ui(num.get_mpz_t(), u0.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), u0.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
                mpq_class f(num, den);
                f.canonicalize();
                t *= f;
            }
            acc += t;
        }
        return acc;
    }

    /// Sum of all coefficients (the value at u = 1; always an integer).
    mpz_class at_one() const {
        mpz_class s = 0;
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    /// (min_exponent, ascending coefficient array); ( 0, [] ) for zero.
    std::pair<int, std::vector<mpz_class>> serialize() const {
        if (c_.empty()) return {0, {}};
        int lo = min_exp(), hi = max_exp();
        std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [e, v] : c_) out[static_cast<std::size_t>(e - lo)] = v;
        return {lo, out};
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, v] : c_) {
            mpz_class a = v < 0 ? mpz_class(-v) : v;
            if (first) {
                if (v < 0) s += "-";
                first = false;
            } else {
                s += v < 0 ? " - " : " + ";
            }
            std::string mag = a.get_str();
            if (e == 0) {
                s += mag;
            } else {
                if (mag != "1") s += mag + "*";
                s += "u";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

  private:
    void add_term(int e, const mpz_class& v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<int, mpz_class> c_;
};

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

} // namespace flagpart

#endif
