#pragma once

#include <utility>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/numeric.hpp"

namespace qwalk {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw dimension_error("IntMatrix: dimensions must be positive");
        a_.resize(static_cast<std::size_t>(rows) * cols);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Int> mul(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw dimension_error("IntMatrix::mul: size mismatch");
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Exact determinant by fraction-free Bareiss elimination. Every interior
/// division is exact, so intermediate entries stay bounded by minors of the
/// input and no rational arithmetic is needed.
inline Int det_exact(IntMatrix m) {
    if (!m.square()) throw dimension_error("det_exact: matrix not square");
    const int n = m.rows();
    int sign = 1;
    Int prev = 1;
    Int t;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Int d = m(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

} // namespace qwalk
