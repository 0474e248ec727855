#pragma once

#include "fuchs/gaussian.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fuchs {

// Dense row-major matrix over the Gaussian rationals. Bases of subspaces are
// passed around as matrices whose columns are the basis vectors, so an n x 0
// matrix is the zero subspace of C^n.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Gaussian>> rows);

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Gaussian& value);
    static Matrix diagonal(std::span<const Gaussian> entries);
    static Matrix from_columns(std::span<const Matrix> columns, std::size_t rows);
    // e_{i} as an n x 1 column.
    static Matrix unit_vector(std::size_t n, std::size_t i);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    Gaussian& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Gaussian& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Gaussian> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Gaussian> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Gaussian>& entries() const { return data_; }

    Matrix column(std::size_t j) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Gaussian& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Gaussian(-1); }
    friend Matrix operator*(Matrix a, const Gaussian& s) { return a *= s; }
    friend Matrix operator*(const Gaussian& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    // a + s*I
    Matrix shifted(const Gaussian& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gaussian> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);
Gaussian trace(const Matrix& m);

} // namespace fuchs
