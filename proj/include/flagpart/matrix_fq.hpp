#ifndef FLAGPART_MATRIX_FQ_HPP
#define FLAGPART_MATRIX_FQ_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "flagpart/prime_field.hpp"

namespace flagpart {

/// Dense row-major matrix over F_p.
class MatrixFq {
  public:
    MatrixFq() : p_(2), rows_(0), cols_(0) {}
    MatrixFq(uint32_t p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static MatrixFq identity(uint32_t p, int n) {
        MatrixFq m(p, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static MatrixFq from_rows(uint32_t p, std::initializer_list<std::initializer_list<long long>> rows) {
        PrimeField f(p);
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        MatrixFq m(p, r, c);
        int i = 0;
        for (const auto& row : rows) {
            int j = 0;
            for (long long v : row) m.at(i, j++) = f.from_int(v);
            ++i;
        }
        return m;
    }

    uint32_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatrixFq& a, const MatrixFq& b) { return !(a == b); }

    MatrixFq transpose() const;
    MatrixFq operator*(const MatrixFq& o) const;
    MatrixFq operator+(const MatrixFq& o) const;
    MatrixFq operator-(const MatrixFq& o) const;
    MatrixFq scaled(uint32_t s) const;
    MatrixFq pow(unsigned e) const;

    /// Row rank by exact Gaussian elimination.
    int rank() const;

    /// Inverse of a square matrix; throws SingularAtPoint if singular.
    MatrixFq inverse() const;

    /// Basis of the right nullspace {x : M x = 0}, as columns stacked into a matrix.
    MatrixFq right_nullspace() const;

    bool is_zero() const {
        for (uint32_t v : a_)
            if (v) return false;
        return true;
    }

    std::string to_string() const;

  private:
    uint32_t p_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

inline int mat_rank(const MatrixFq& m) { return m.rank(); }

} // namespace flagpart

#endif
