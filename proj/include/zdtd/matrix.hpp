#pragma once

#include <vector>

#include "zdtd/errors.hpp"
#include "zdtd/field.hpp"

namespace zdtd {

// Dense square matrix over an exact field, rows and columns indexed 0..d.
template <Field K>
class Matrix {
public:
    Matrix(int n, const K& fill) : n_(n), e_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 1)
            throw DimensionMismatch("matrix dimension must be >= 1");
    }

    static Matrix identity(int n, const K& sample) {
        Matrix m(n, sample.zero_like());
        for (int i = 0; i < n; ++i) m(i, i) = sample.one_like();
        return m;
    }

    static Matrix diagonal(const std::vector<K>& d) {
        Matrix m(static_cast<int>(d.size()), d.at(0).zero_like());
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    K& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const K& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    const K& sample() const { return e_[0]; }

    Matrix operator+(const Matrix& o) const {
        conforming(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        conforming(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        conforming(o);
        Matrix r(n_, sample().zero_like());
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < n_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r = *this;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r(i, j) = (*this)(j, i);
        return r;
    }

    K trace() const {
        K t = sample().zero_like();
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    void conforming(const Matrix& o) const {
        if (n_ != o.n_)
            throw DimensionMismatch("matrix dimensions differ: " + std::to_string(n_) +
                                    " vs " + std::to_string(o.n_));
    }

    int n_;
    std::vector<K> e_;
};

// Fraction-free (Bareiss) determinant; division at each step is exact.
template <Field K>
K det(Matrix<K> m) {
    const int n = m.dim();
    K sign = m.sample().one_like();
    K prev = m.sample().one_like();
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) return m.sample().zero_like();
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Exact inverse by Gauss-Jordan elimination.
template <Field K>
Matrix<K> inverse(Matrix<K> m) {
    const int n = m.dim();
    Matrix<K> inv = Matrix<K>::identity(n, m.sample());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0)
            throw SingularMatrix("matrix is not invertible");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        K pv = m(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * pv;
            inv(c, j) = inv(c, j) * pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            K f = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// D^{-1} A D for an invertible diagonal D given by its diagonal entries.
template <Field K>
Matrix<K> conjugate_by_diagonal(const Matrix<K>& a, const std::vector<K>& d) {
    if (static_cast<int>(d.size()) != a.dim())
        throw DimensionMismatch("diagonal length does not match matrix dimension");
    for (const auto& x : d)
        if (x.is_zero())
            throw ZeroDiagonalEntry("conjugating diagonal has a zero entry");
    Matrix<K> r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r(i, j) = a(i, j) * d[static_cast<std::size_t>(j)] / d[static_cast<std::size_t>(i)];
    return r;
}

// Z^{-1} A^T Z where Z is the index-reversal permutation; flips A across
// its anti-diagonal. Involution; preserves the characteristic polynomial.
template <Field K>
Matrix<K> anti_diagonal_transpose(const Matrix<K>& a) {
    const int n = a.dim();
    Matrix<K> r = a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) = a(n - 1 - j, n - 1 - i);
    return r;
}

} // namespace zdtd
