#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace linecong {

class dimension_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// ADL trampoline for use inside classes whose own is_zero() member would
// shadow the scalar overloads.
template <class K>
bool scalar_is_zero(const K& x) {
    return is_zero(x);
}

// Dense row-major matrix over an exact scalar type (field element or
// polynomial). Entries are immutable in spirit: operations return new values.
template <class K>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, const K& zero)
        : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw dimension_error("matrix needs at least one entry");
        Matrix m(rows.size(), rows[0].size(), zero_like(rows[0][0]));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_error("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    // Any entry works as a field/ring exemplar for minting constants.
    const K& exemplar() const { return a_[0]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, zero_like(exemplar()));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& aik = at(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sum shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix diff shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix scaled(const K& s) const {
        Matrix r = *this;
        for (K& x : r.a_) x = x * s;
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw dimension_error("matrix-vector shape mismatch");
        std::vector<K> r(rows_, zero_like(exemplar()));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot column indices.
// Field entries only (uses division).
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        K inv = one_like(m.at(row, col)) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(Matrix<K> m) {
    return detail::rref(m).size();
}

// Basis of the right kernel {v : Mv = 0}; one vector per free column, in
// ascending free-column order (canonical).
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m) {
    const K zero = zero_like(m.exemplar());
    const K one = one_like(m.exemplar());
    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(m.cols(), zero);
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse over a field; throws on singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (!m.square()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n, zero_like(m.exemplar()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = one_like(m.exemplar());
    }
    if (detail::rref(aug).size() != n ||
        [&] {  // pivots must all land in the left block
            for (std::size_t i = 0; i < n; ++i)
                if (is_zero(aug.at(i, i))) return true;
            return false;
        }())
        throw std::domain_error("matrix is singular");
    Matrix<K> inv(n, n, zero_like(m.exemplar()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Determinant by plain elimination with division (field entries).
template <class K>
K det(Matrix<K> m) {
    if (!m.square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    K result = one_like(m.exemplar());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return zero_like(m.exemplar());
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            result = -result;
        }
        result = result * m.at(col, col);
        K inv = one_like(m.at(col, col)) / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m.at(i, col))) continue;
            K f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return result;
}

// Determinant by Bareiss fraction-free elimination. All divisions are exact,
// so this also controls coefficient growth over Q; used as the independent
// cross-check route for char_poly.
template <class K>
K det_bareiss(Matrix<K> m) {
    if (!m.square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one_like(m.exemplar());
    K prev = one_like(m.exemplar());
    K sign = one_like(m.exemplar());
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t sel = col;
        while (sel < n && is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return zero_like(m.exemplar());
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                K num = m.at(i, j) * m.at(col, col) - m.at(i, col) * m.at(col, j);
                m.at(i, j) = num / prev;
            }
            m.at(i, col) = zero_like(m.exemplar());
        }
        prev = m.at(col, col);
    }
    return sign * m.at(n - 1, n - 1);
}

// Characteristic polynomial det(tI - M) by the Samuelson-Berkowitz method:
// division-free, so it is valid over any exact commutative ring (field
// scalars and polynomial entries alike) and produces the monic char poly.
// Returns coefficients in ascending order, coeffs[n] = 1.
template <class R>
std::vector<R> char_poly_coeffs(const Matrix<R>& m) {
    if (!m.square()) throw dimension_error("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    const R one = one_like(m.exemplar());
    if (n == 0) return {one};
    // c holds the coefficients of det(tI - A_r) in descending order.
    std::vector<R> c = {one, -m.at(0, 0)};
    for (std::size_t r = 2; r <= n; ++r) {
        // First column of the Toeplitz factor:
        // q = [1, -a_rr, -(R S), -(R A S), ..., -(R A^{r-2} S)].
        std::vector<R> q;
        q.reserve(r + 1);
        q.push_back(one);
        q.push_back(-m.at(r - 1, r - 1));
        std::vector<R> w(r - 1, zero_like(m.exemplar()));
        for (std::size_t i = 0; i < r - 1; ++i) w[i] = m.at(i, r - 1);
        for (std::size_t k = 2; k <= r; ++k) {
            R dot = zero_like(m.exemplar());
            for (std::size_t i = 0; i < r - 1; ++i) dot += m.at(r - 1, i) * w[i];
            q.push_back(-dot);
            if (k == r) break;
            std::vector<R> next(r - 1, zero_like(m.exemplar()));
            for (std::size_t i = 0; i < r - 1; ++i)
                for (std::size_t j = 0; j < r - 1; ++j) next[i] += m.at(i, j) * w[j];
            w = std::move(next);
        }
        std::vector<R> nc(r + 1, zero_like(m.exemplar()));
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (i < j || i - j >= q.size()) continue;
                nc[i] += q[i - j] * c[j];
            }
        c = std::move(nc);
    }
    std::vector<R> ascending(c.rbegin(), c.rend());
    return ascending;
}

}  // namespace linecong
