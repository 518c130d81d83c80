#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kmin {

/// Dense row-major matrix of exact scalars. Vectors are 1 x n (row) or
/// n x 1 (column) matrices; coefficient lists are plain std::vector.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                std::to_string(rows_ * cols_));
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw ShapeMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T::one();
        return m;
    }
    static Matrix row_vector(std::vector<T> v) {
        std::size_t n = v.size();
        return Matrix(1, n, std::move(v));
    }
    static Matrix column_vector(std::vector<T> v) {
        std::size_t n = v.size();
        return Matrix(n, 1, std::move(v));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_copy(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<T> column_copy(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back((*this)(i, j));
        return out;
    }
    const std::vector<T>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }
    bool row_is_zero(std::size_t i) const {
        for (const auto& x : row(i))
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// First `count` rows.
    Matrix top_rows(std::size_t count) const {
        return Matrix(count, cols_, std::vector<T>(data_.begin(), data_.begin() + count * cols_));
    }
    /// First `count` columns.
    Matrix left_columns(std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j)
                m(i, j) = (*this)(i, j);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void scale_row(std::size_t i, const T& s) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = (*this)(i, j) * s;
    }

    /// Replaces rows (i, k) by (a*ri + b*rk, c*ri + d*rk).
    void combine_rows(std::size_t i, std::size_t k, const T& a, const T& b, const T& c, const T& d) {
        for (std::size_t j = 0; j < cols_; ++j) {
            T x = (*this)(i, j), y = (*this)(k, j);
            (*this)(i, j) = a * x + b * y;
            (*this)(k, j) = c * x + d * y;
        }
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_)
            out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("product of " + a.shape() + " and " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] = c.data_[i] - b.data_[i];
        return c;
    }
    Matrix operator-() const {
        return map([](const T& x) { return -x; });
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        return m.map([&](const T& x) { return s * x; });
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch("shapes " + shape() + " and " + o.shape() + " differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Row vector times matrix.
template <class T>
std::vector<T> operator*(std::span<const T> v, const Matrix<T>& m) {
    if (v.size() != m.rows())
        throw ShapeMismatch("vector of length " + std::to_string(v.size()) + " times " + m.shape());
    std::vector<T> out(m.cols(), T::zero());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += v[k] * m(k, j);
    }
    return out;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& m) {
    return std::span<const T>(v) * m;
}

/// [a; b]
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols() && a.rows() && b.rows())
        throw ShapeMismatch("vstack of " + a.shape() + " and " + b.shape());
    std::size_t cols = a.rows() ? a.cols() : b.cols();
    std::vector<T> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix<T>(a.rows() + b.rows(), cols, std::move(data));
}

/// [a 0; 0 b]
template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

/// [a b]
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows())
        throw ShapeMismatch("hstack of " + a.shape() + " and " + b.shape());
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

/// Kronecker product; entry ((i1, i2), (j1, j2)) sits at (i1*r2 + i2, j1*c2 + j2).
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1).is_zero())
                continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    m(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    return m;
}

} // namespace kmin
