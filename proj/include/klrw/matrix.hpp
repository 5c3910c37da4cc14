#pragma once

#include <cstddef>
#include <vector>

#include "klrw/rational.hpp"

namespace klrw {

// Small dense matrix over an exact ring T (Rat, LaurentPoly, RationalFunctionQ).
// Division-based routines (rref, rank, solve) require T to be a field.
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c, T()) {}
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in sum");
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in difference");
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Mat scaled(const T& c) const {
        Mat r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }
    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T())) return false;
        return true;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

// In-place row reduction; returns pivot column indices. T must be a field.
template <class T>
std::vector<size_t> rref(Mat<T>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m(sel, col) == T()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            T f = m(i, col);
            if (f == T()) continue;
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
size_t rank(Mat<T> m) {
    return rref(m).size();
}

// Incremental row-space accumulator: rows are reduced as they arrive.
template <class T>
class RowSpace {
  public:
    explicit RowSpace(size_t cols) : cols_(cols) {}

    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Reduces v against the stored rows in place; v becomes the residue.
    void reduce(std::vector<T>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const T& f = v[pivot_[r]];
            if (f == T()) continue;
            T c = f;  // rows are pivot-normalized
            for (size_t j = 0; j < cols_; ++j) v[j] -= c * rows_[r][j];
        }
    }

    // Returns true if the row enlarged the space.
    bool insert(std::vector<T> v) {
        if (v.size() != cols_) throw Error("row length mismatch in RowSpace");
        reduce(v);
        size_t p = 0;
        while (p < cols_ && v[p] == T()) ++p;
        if (p == cols_) return false;
        T inv = T(1) / v[p];
        for (size_t j = p; j < cols_; ++j) v[j] = v[j] * inv;
        // keep existing rows reduced against the new one
        for (size_t r = 0; r < rows_.size(); ++r) {
            T f = rows_[r][p];
            if (f == T()) continue;
            for (size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        // keep rows ordered by pivot for deterministic reduction
        for (size_t r = rows_.size(); r-- > 1;) {
            if (pivot_[r] < pivot_[r - 1]) {
                std::swap(pivot_[r], pivot_[r - 1]);
                std::swap(rows_[r], rows_[r - 1]);
            } else {
                break;
            }
        }
        return true;
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!(x == T())) return false;
        return true;
    }

    const std::vector<size_t>& pivots() const { return pivot_; }

  private:
    size_t cols_;
    std::vector<std::vector<T>> rows_;
    std::vector<size_t> pivot_;
};

}  // namespace klrw
