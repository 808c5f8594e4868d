/*
   Copyright 2026 The pfactor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pfactor/errors.hpp"
#include "pfactor/field.hpp"

namespace pfactor {

template <Scalar T>
using Vector = std::vector<T>;

/// Dense column-major matrix. Columns are the natural unit: a subspace basis
/// is a matrix whose columns are the spanning vectors.
template <Scalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Build from a list of equally sized columns.
    static Matrix from_columns(std::span<const Vector<T>> columns) {
        if (columns.empty()) {
            return {};
        }
        Matrix m(columns.front().size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != m.rows_) {
                throw DimensionError("columns have different lengths");
            }
            std::copy(columns[j].begin(), columns[j].end(), m.col(j).begin());
        }
        return m;
    }

    static Matrix from_columns(std::initializer_list<Vector<T>> columns) {
        return from_columns(std::span<const Vector<T>>(columns.begin(), columns.size()));
    }

    /// Row-major literal, convenient in tests: `{{1, 2}, {3, 4}}`.
    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) {
                throw DimensionError("ragged row literal");
            }
            std::size_t j = 0;
            for (const T& x : row) {
                m(i, j++) = x;
            }
            ++i;
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    std::span<T> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
    std::span<const T> col(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }

    Vector<T> column(std::size_t j) const {
        auto c = col(j);
        return {c.begin(), c.end()};
    }

    std::vector<Vector<T>> columns() const {
        std::vector<Vector<T>> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            out.push_back(column(j));
        }
        return out;
    }

    /// Columns [first, first + count).
    Matrix column_block(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * rows_),
                  data_.begin() + static_cast<std::ptrdiff_t>((first + count) * rows_), m.data_.begin());
        return m;
    }

    std::span<const T> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Conjugate transpose (plain transpose over the reals).
template <Scalar T>
Matrix<T> adjoint(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out(j, i) = conj(m(i, j));
        }
    }
    return out;
}

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T bkj = b(k, j);
            if (bkj == T(0)) {
                continue;
            }
            for (std::size_t i = 0; i < a.rows(); ++i) {
                c(i, j) += a(i, k) * bkj;
            }
        }
    }
    return c;
}

template <Scalar T>
Vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
    if (a.cols() != x.size()) {
        throw DimensionError("matrix-vector product: dimensions differ");
    }
    Vector<T> y(a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            y[i] += a(i, k) * x[k];
        }
    }
    return y;
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix difference: shapes differ");
    }
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

template <Scalar T>
double frobenius_norm(const Matrix<T>& m) {
    double s = 0.0;
    for (const T& x : m.data()) {
        s += abs2(x);
    }
    return std::sqrt(s);
}

/// Horizontal concatenation [a | b].
template <Scalar T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() == 0) {
        return b;
    }
    if (b.cols() == 0) {
        return a;
    }
    if (a.rows() != b.rows()) {
        throw DimensionError("hcat: row counts differ");
    }
    Matrix<T> c(a.rows(), a.cols() + b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::copy(a.col(j).begin(), a.col(j).end(), c.col(j).begin());
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::copy(b.col(j).begin(), b.col(j).end(), c.col(a.cols() + j).begin());
    }
    return c;
}

}  // namespace pfactor
