#ifndef FLAGPART_PRIME_FIELD_HPP
#define FLAGPART_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>

#include "flagpart/errors.hpp"

namespace flagpart {

/// F_p with canonical residues in [0, p).  p is checked prime on construction.
class PrimeField {
  public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }

    uint32_t from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t base = a % p_, r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField::inv of zero");
        return pow(a % p_, p_ - 2);
    }

    uint32_t half(uint32_t a) const { // a/2, p odd
        if (p_ == 2) throw BadCharacteristic("PrimeField::half needs odd p");
        return mul(a, inv(2 % p_));
    }

    bool is_square(uint32_t a) const {
        a %= p_;
        if (a == 0) return true;
        if (p_ == 2) return true;
        return pow(a, (p_ - 1) / 2) == 1;
    }

    /// Some square root of a (must be a square); brute force, p is small.
    uint32_t sqrt(uint32_t a) const {
        a %= p_;
        for (uint32_t x = 0; x < p_; ++x)
            if (mul(x, x) == a) return x;
        throw std::domain_error("PrimeField::sqrt of a non-square");
    }

    /// Least quadratic non-residue (p odd).
    uint32_t least_nonresidue() const {
        if (p_ == 2) throw BadCharacteristic("no non-residue mod 2");
        for (uint32_t x = 2; x < p_; ++x)
            if (!is_square(x)) return x;
        throw std::logic_error("unreachable: every odd p has a non-residue");
    }

  private:
    uint32_t p_;
};

} // namespace flagpart

#endif
