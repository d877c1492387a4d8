#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace orthotopy {

// Exact integer type used everywhere. Unimodular transforms in the Smith
// reduction can blow past machine words even for small inputs.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Dense matrix over Z. Zero rows or columns are legal; all arithmetic is
// exact. Row-major storage.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}

    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMat m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw ShapeError("from_rows: ragged row lengths");
            std::size_t j = 0;
            for (long long x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw ShapeError("matrix product: inner dimensions disagree");
        IntMat out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    IntMat operator+(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shapes disagree");
        IntMat out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }

    IntMat operator-(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shapes disagree");
        IntMat out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }

    IntMat transpose() const {
        IntMat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const Int& k) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
    }

    // col a += k * col b
    void add_col(std::size_t a, std::size_t b, const Int& k) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }

    // Copies m into this matrix with top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const IntMat& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
            throw ShapeError("set_block: block exceeds matrix bounds");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
    }

    // Kronecker product, blocks a(i,j) * b.
    static IntMat kronecker(const IntMat& a, const IntMat& b) {
        IntMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Int& s = a(i, j);
                if (s == 0) continue;
                for (std::size_t p = 0; p < b.rows_; ++p)
                    for (std::size_t q = 0; q < b.cols_; ++q)
                        out(i * b.rows_ + p, j * b.cols_ + q) = s * b(p, q);
            }
        return out;
    }

    // Exact determinant by fraction-free (Bareiss) elimination.
    Int det() const {
        if (rows_ != cols_) throw ShapeError("det: matrix is not square");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMat a(*this);
        Int sign = 1;
        Int prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
                a(i, k) = 0;
            }
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << (*this)(i, j);
            }
            os << "]";
            if (i + 1 < rows_) os << "\n";
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

inline IntMat operator*(const Int& k, const IntMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = k * m(i, j);
    return out;
}

// [a | b]
inline IntMat hstack(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw ShapeError("hstack: row counts disagree");
    IntMat out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

// [a; b]
inline IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack: column counts disagree");
    IntMat out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

// diag(a, b)
inline IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntMat& m) {
    return os << m.to_string();
}

} // namespace orthotopy
