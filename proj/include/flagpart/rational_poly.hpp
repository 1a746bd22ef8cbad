#ifndef FLAGPART_RATIONAL_POLY_HPP
#define FLAGPART_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "flagpart/errors.hpp"
#include "flagpart/laurent.hpp"

namespace flagpart {

/// Dense polynomial with exact rational coefficients, ascending degree in q.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool is_integral() const {
        for (const auto& v : c_)
            if (v.get_den() != 1) return false;
        return true;
    }

    /// Reinterpret an integral polynomial in q as a polynomial in u.
    LaurentPoly to_laurent() const {
        if (!is_integral()) throw NonIntegerCoefficients("RationalPoly::to_laurent");
        std::vector<mpz_class> z;
        z.reserve(c_.size());
        for (const auto& v : c_) z.push_back(v.get_num());
        return LaurentPoly::from_coeffs(0, z);
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

/// Unique polynomial of degree <= degree_bound through the first degree_bound+1
/// samples; every further sample must satisfy it exactly.
RationalPoly interpolate_poly(const std::vector<std::pair<mpq_class, mpq_class>>& samples,
                              int degree_bound);

} // namespace flagpart

#endif
