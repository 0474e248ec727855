#include "fuchs/kernels.hpp"

#include "fuchs/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuchs::kernels {

namespace {

void check_product(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::SizeMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                 std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                                 "x" + std::to_string(b.cols()));
}

void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i)
{
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero())
            continue;
        const Gaussian neg = -a(i, k);
        auto brow = b.row(k);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!brow[j].is_zero())
                out[j].sub_mul(neg, brow[j]);
    }
}

// Finds the pivot for column `col` at or below `row`, swaps it up and scales
// it to 1. Returns false if the column is zero from `row` down.
bool prepare_pivot(Matrix& m, std::size_t row, std::size_t col)
{
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero())
        ++p;
    if (p == m.rows())
        return false;
    if (p != row) {
        auto a = m.row(p);
        auto b = m.row(row);
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(a[j], b[j]);
    }
    Gaussian inv = Gaussian(1) / m(row, col);
    auto r = m.row(row);
    for (std::size_t j = col; j < m.cols(); ++j)
        if (!r[j].is_zero())
            r[j] *= inv;
    return true;
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col)
{
    Gaussian f = m(target, col);
    if (f.is_zero())
        return;
    auto src = m.row(pivot_row);
    auto dst = m.row(target);
    for (std::size_t j = col; j < m.cols(); ++j)
        if (!src[j].is_zero())
            dst[j].sub_mul(f, src[j]);
}

} // namespace

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b)
{
    check_product(a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        multiply_row(a, b, c, i);
    return c;
}

std::vector<std::size_t> rref_inplace(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!prepare_pivot(m, row, col))
            continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row)
                eliminate_row(m, i, row, col);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace serial

namespace omp {

Matrix multiply(const Matrix& a, const Matrix& b)
{
    check_product(a, b);
    Matrix c(a.rows(), b.cols());
    const long rows = static_cast<long>(a.rows());
    const bool par = a.rows() * b.cols() * a.cols() >= parallel_threshold;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long i = 0; i < rows; ++i)
        multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

std::vector<std::size_t> rref_inplace(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const long rows = static_cast<long>(m.rows());
    const bool par = m.rows() * m.cols() >= parallel_threshold;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!prepare_pivot(m, row, col))
            continue;
        const long pivot_row = static_cast<long>(row);
#pragma omp parallel for schedule(dynamic, 4) if (par)
        for (long i = 0; i < rows; ++i)
            if (i != pivot_row)
                eliminate_row(m, static_cast<std::size_t>(i), row, col);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace omp

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fuchs::kernels
