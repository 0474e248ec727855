#include "fuchs/matrix.hpp"

#include "fuchs/error.hpp"
#include "fuchs/kernels.hpp"

#include <sstream>

namespace fuchs {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::SizeMismatch, std::string("shape mismatch in ") + op);
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Gaussian>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::SizeMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Gaussian(1)); }

Matrix Matrix::scalar(std::size_t n, const Gaussian& value)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = value;
    return m;
}

Matrix Matrix::diagonal(std::span<const Gaussian> entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_columns(std::span<const Matrix> columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].rows() != rows || columns[j].cols() != 1)
            throw Error(ErrorKind::SizeMismatch, "column vector of wrong size");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j](i, 0);
    }
    return m;
}

Matrix Matrix::unit_vector(std::size_t n, std::size_t i)
{
    Matrix v(n, 1);
    v(i, 0) = 1;
    return v;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::IndexOutOfRange, "block outside matrix");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw Error(ErrorKind::IndexOutOfRange, "block outside matrix");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const
{
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const
{
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(idx[i], j);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require_same_shape(*this, o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    require_same_shape(*this, o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Gaussian& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::omp::multiply(a, b); }

Matrix Matrix::shifted(const Gaussian& s) const
{
    if (!is_square())
        throw Error(ErrorKind::NonSquare, "shift of a non-square matrix");
    Matrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        m(i, i) += s;
    return m;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::SizeMismatch, "hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw Error(ErrorKind::SizeMismatch, "vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Gaussian trace(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::NonSquare, "trace of a non-square matrix");
    Gaussian t;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

} // namespace fuchs
