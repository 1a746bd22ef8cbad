#include "flagpart/matrix_fq.hpp"

#include <sstream>
#include <stdexcept>

namespace flagpart {

MatrixFq MatrixFq::transpose() const {
    MatrixFq r(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("MatrixFq::mul shape/field");
    PrimeField f(p_);
    MatrixFq r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(v, o.at(k, j)));
        }
    return r;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("MatrixFq::add shape/field");
    PrimeField f(p_);
    MatrixFq r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = f.add(at(i, j), o.at(i, j));
    return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("MatrixFq::sub shape/field");
    PrimeField f(p_);
    MatrixFq r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = f.sub(at(i, j), o.at(i, j));
    return r;
}

MatrixFq MatrixFq::scaled(uint32_t s) const {
    PrimeField f(p_);
    MatrixFq r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = f.mul(s, at(i, j));
    return r;
}

MatrixFq MatrixFq::pow(unsigned e) const {
    if (rows_ != cols_) throw std::invalid_argument("MatrixFq::pow on non-square");
    MatrixFq base = *this, r = identity(p_, rows_);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int MatrixFq::rank() const {
    PrimeField f(p_);
    MatrixFq m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int i = rank; i < rows_; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        uint32_t inv = f.inv(m.at(rank, col));
        for (int i = rank + 1; i < rows_; ++i) {
            uint32_t factor = f.mul(m.at(i, col), inv);
            if (!factor) continue;
            for (int j = col; j < cols_; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

MatrixFq MatrixFq::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("MatrixFq::inverse on non-square");
    PrimeField f(p_);
    MatrixFq m = *this, inv = identity(p_, rows_);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int i = col; i < rows_; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularAtPoint("MatrixFq::inverse: singular matrix");
        for (int j = 0; j < cols_; ++j) {
            std::swap(m.at(col, j), m.at(piv, j));
            std::swap(inv.at(col, j), inv.at(piv, j));
        }
        uint32_t d = f.inv(m.at(col, col));
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) = f.mul(m.at(col, j), d);
            inv.at(col, j) = f.mul(inv.at(col, j), d);
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col) continue;
            uint32_t factor = m.at(i, col);
            if (!factor) continue;
            for (int j = 0; j < cols_; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
                inv.at(i, j) = f.sub(inv.at(i, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

MatrixFq MatrixFq::right_nullspace() const {
    PrimeField f(p_);
    MatrixFq m = *this;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(piv, j));
        uint32_t d = f.inv(m.at(r, col));
        for (int j = 0; j < cols_; ++j) m.at(r, j) = f.mul(m.at(r, j), d);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t factor = m.at(i, col);
            if (!factor) continue;
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<int> free_cols;
    {
        std::size_t k = 0;
        for (int col = 0; col < cols_; ++col) {
            if (k < pivot_col.size() && pivot_col[k] == col)
                ++k;
            else
                free_cols.push_back(col);
        }
    }
    MatrixFq basis(p_, cols_, static_cast<int>(free_cols.size()));
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        int fc = free_cols[b];
        basis.at(fc, static_cast<int>(b)) = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            basis.at(pivot_col[i], static_cast<int>(b)) = f.neg(m.at(static_cast<int>(i), fc));
    }
    return basis;
}

std::string MatrixFq::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

} // namespace flagpart
