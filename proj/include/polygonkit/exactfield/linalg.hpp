#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polygonkit {

/// Dense row-major matrix over an element type E.
template <class E>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    E* row(std::size_t r) { return data_.data() + r * cols_; }
    const E* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<E> row_vector(std::size_t r) const { return {row(r), row(r) + cols_}; }

    void append_row(const std::vector<E>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }

    /// Keeps the first r rows.
    void truncate_rows(std::size_t r) {
        rows_ = r;
        data_.resize(r * cols_);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

template <class F>
using MatrixOf = Matrix<typename F::Elem>;

template <class F>
MatrixOf<F> zeros(const F& f, std::size_t rows, std::size_t cols) {
    return MatrixOf<F>(rows, cols, f.zero());
}

template <class F>
MatrixOf<F> identity(const F& f, std::size_t n) {
    auto m = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

template <class F>
MatrixOf<F> transpose(const F& f, const MatrixOf<F>& a) {
    auto t = zeros(f, a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <class F>
MatrixOf<F> multiply(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    auto c = zeros(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

template <class F>
std::vector<typename F::Elem> row_times(const F& f, const std::vector<typename F::Elem>& v, const MatrixOf<F>& a) {
    if (v.size() != a.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
    std::vector<typename F::Elem> out(a.cols(), f.zero());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (f.is_zero(v[k])) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], a(k, j)));
    }
    return out;
}

template <class F>
bool is_zero_matrix(const F& f, const MatrixOf<F>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a(i, j))) return false;
    return true;
}

/// Row-reduces `a` in place to reduced row echelon form and returns the pivot columns.
/// Rows past the rank are zero and truncated.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, MatrixOf<F>& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        a.swap_rows(p, r);
        const auto inv = f.inv(a(r, c));
        auto* pr = a.row(r);
        for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto* pi = a.row(i);
            if (f.is_zero(pi[c])) continue;
            const auto factor = pi[c];
            for (std::size_t j = c; j < cols; ++j)
                if (!f.is_zero(pr[j])) pi[j] = f.sub(pi[j], f.mul(factor, pr[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    a.truncate_rows(r);
    return pivots;
}

/// Rank by forward elimination on a copy.
template <class F>
std::size_t matrix_rank(const F& f, MatrixOf<F> a) {
    std::size_t r = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        a.swap_rows(p, r);
        const auto inv = f.inv(a(r, c));
        const auto* pr = a.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto* pi = a.row(i);
            if (f.is_zero(pi[c])) continue;
            const auto factor = f.mul(pi[c], inv);
            for (std::size_t j = c; j < cols; ++j)
                if (!f.is_zero(pr[j])) pi[j] = f.sub(pi[j], f.mul(factor, pr[j]));
        }
        ++r;
    }
    return r;
}

/// Basis of the right null space {x : a x = 0}, one basis vector per row.
template <class F>
MatrixOf<F> solve_nullspace(const F& f, MatrixOf<F> a) {
    const std::size_t cols = a.cols();
    const auto pivots = rref_in_place(f, a);
    std::vector<int> pivot_row(cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
    auto basis = zeros(f, cols - pivots.size(), cols);
    std::size_t b = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] >= 0) continue;
        basis(b, c) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(b, pivots[i]) = f.neg(a(i, c));
        ++b;
    }
    return basis;
}

/// Row space basis in reduced echelon form.
template <class F>
MatrixOf<F> row_space(const F& f, MatrixOf<F> a) {
    rref_in_place(f, a);
    return a;
}

template <class F>
typename F::Elem determinant(const F& f, MatrixOf<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && f.is_zero(a(p, c))) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            a.swap_rows(p, c);
            det = f.neg(det);
        }
        det = f.mul(det, a(c, c));
        const auto inv = f.inv(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (f.is_zero(a(i, c))) continue;
            const auto factor = f.mul(a(i, c), inv);
            for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
        }
    }
    return det;
}

/// Inverse of a square matrix; throws std::domain_error if singular.
template <class F>
MatrixOf<F> inverse(const F& f, const MatrixOf<F>& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    auto aug = zeros(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    const auto pivots = rref_in_place(f, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    auto out = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/// Solves x * a = b for a row vector x, where a has full row rank on the relevant span.
/// Returns false if b is not in the row space of a.
template <class F>
bool solve_left(const F& f, const MatrixOf<F>& a, const std::vector<typename F::Elem>& b,
                std::vector<typename F::Elem>& x) {
    // Transpose: a^T x^T = b^T.
    const std::size_t m = a.rows(), n = a.cols();
    auto aug = zeros(f, n, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) aug(j, i) = a(i, j);
    for (std::size_t j = 0; j < n; ++j) aug(j, m) = b[j];
    const auto pivots = rref_in_place(f, aug);
    if (!pivots.empty() && pivots.back() == m) return false;
    x.assign(m, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m);
    return true;
}

/// Stacks the rows of b below those of a.
template <class F>
MatrixOf<F> vstack(const F& f, const MatrixOf<F>& a, const MatrixOf<F>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    auto out = zeros(f, a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

}  // namespace polygonkit
