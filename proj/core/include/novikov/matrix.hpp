#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/param_poly.hpp"
#include "novikov/rational.hpp"

namespace novikov {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::vector<T> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    void append_row(const std::vector<T>& r);

    [[nodiscard]] Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <class T>
void Matrix<T>::append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw ShapeError("row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<ParamPoly>;

struct RrefResult {
    RationalMatrix reduced;             ///< nonzero rows only
    std::vector<std::size_t> pivots;    ///< pivot column of each row
    std::size_t rank = 0;
};

RrefResult rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Rows form a basis of { x : m x = 0 }.
RationalMatrix nullspace(const RationalMatrix& m);
Rational determinant(RationalMatrix m);

inline constexpr std::size_t kPolyDetMaxSize = 8;
/// Laplace expansion along rows with subset memoization; square, size <= 8.
ParamPoly poly_det(const PolyMatrix& m);

RationalMatrix specialize(const PolyMatrix& m, const ParamAssignment& values);

} // namespace novikov
