#include "fuchs/linalg.hpp"

#include "fuchs/error.hpp"
#include "fuchs/kernels.hpp"

#include <deque>

namespace fuchs {

RrefResult rref(Matrix m)
{
    auto pivots = kernels::omp::rref_inplace(m);
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    Matrix copy = m;
    return kernels::omp::rref_inplace(copy).size();
}

Matrix kernel_basis(const Matrix& m)
{
    auto [r, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    Matrix basis(n, n - pivots.size());
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        basis(f, k) = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            basis(pivots[row], k) = -r(row, f);
        ++k;
    }
    return basis;
}

Matrix image_basis(const Matrix& m)
{
    auto pivots = rref(m).pivots;
    return m.select_columns(pivots);
}

Matrix reduced_image_basis(const Matrix& m)
{
    auto [r, pivots] = rref(m.transpose());
    return r.block(0, 0, pivots.size(), r.cols()).transpose();
}

std::size_t commutant_dim(const Matrix& a)
{
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "commutant of a non-square matrix");
    const std::size_t n = a.rows();
    // Row (i,j) of the system encodes (AX - XA)_{ij} with X vectorized row-major.
    Matrix sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                sys(i * n + j, k * n + j) += a(i, k);
                sys(i * n + j, i * n + k) -= a(k, j);
            }
    return n * n - rank(sys);
}

namespace {

std::vector<Gaussian> flatten(const Matrix& m) { return m.entries(); }

} // namespace

std::size_t generated_algebra_dim(std::span<const Matrix> mats, std::size_t n)
{
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw Error(ErrorKind::SizeMismatch, "generator of the wrong size");
    SpanBuilder span(n * n);
    std::deque<Matrix> pending;
    span.add(flatten(Matrix::identity(n)));
    pending.push_back(Matrix::identity(n));
    while (!pending.empty() && span.size() < n * n) {
        Matrix x = std::move(pending.front());
        pending.pop_front();
        for (const auto& g : mats) {
            Matrix y = g * x;
            if (span.add(flatten(y)))
                pending.push_back(std::move(y));
        }
    }
    return span.size();
}

std::vector<Matrix> solve_sylvester_space(std::span<const Matrix> a_list, std::span<const Matrix> b_list)
{
    if (a_list.size() != b_list.size())
        throw Error(ErrorKind::SizeMismatch, "intertwiner lists of different lengths");
    if (a_list.empty())
        throw Error(ErrorKind::SizeMismatch, "intertwiner of empty lists");
    const std::size_t n = a_list[0].rows();
    const std::size_t m = b_list[0].rows();
    for (std::size_t t = 0; t < a_list.size(); ++t) {
        const auto& a = a_list[t];
        const auto& b = b_list[t];
        if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != m)
            throw Error(ErrorKind::SizeMismatch, "intertwiner matrices of inconsistent sizes");
    }
    // Unknown g is m x n, vectorized row-major; row (t,i,l) is (g a_t - b_t g)_{il}.
    Matrix sys(a_list.size() * m * n, m * n);
    for (std::size_t t = 0; t < a_list.size(); ++t) {
        const auto& a = a_list[t];
        const auto& b = b_list[t];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t row = (t * m + i) * n + l;
                for (std::size_t k = 0; k < n; ++k)
                    sys(row, i * n + k) += a(k, l);
                for (std::size_t k = 0; k < m; ++k)
                    sys(row, k * n + l) -= b(i, k);
            }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<Matrix> out;
    out.reserve(ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Matrix g(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < n; ++l)
                g(i, l) = ker(i * n + l, c);
        out.push_back(std::move(g));
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto [r, pivots] = rref(hstack(m, Matrix::identity(n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    return r.block(0, n, n, n);
}

Gaussian determinant(Matrix m)
{
    if (!m.is_square())
        throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Gaussian det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return Gaussian(0);
        if (p != c) {
            auto a = m.row(p);
            auto b = m.row(c);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[j], b[j]);
            det = -det;
        }
        det *= m(c, c);
        const Gaussian inv = Gaussian(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            const Gaussian f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j).sub_mul(f, m(c, j));
        }
    }
    return det;
}

Matrix annihilator(const Matrix& u) { return kernel_basis(u.transpose()).transpose(); }

Matrix subspace_sum(const Matrix& u, const Matrix& w) { return image_basis(hstack(u, w)); }

Matrix subspace_intersection(const Matrix& u, const Matrix& w)
{
    if (u.rows() != w.rows())
        throw Error(ErrorKind::SizeMismatch, "subspaces of different ambient spaces");
    return kernel_basis(vstack(annihilator(u), annihilator(w)));
}

Matrix preimage(const Matrix& a, const Matrix& u)
{
    Matrix n = annihilator(u);
    if (n.rows() == 0)
        return Matrix::identity(a.cols());
    return kernel_basis(n * a);
}

Matrix largest_invariant_subspace(const Matrix& a, const Matrix& w)
{
    Matrix u = image_basis(w);
    while (u.cols() > 0) {
        Matrix next = subspace_intersection(u, preimage(a, u));
        if (next.cols() == u.cols())
            return u;
        u = std::move(next);
    }
    return u;
}

Matrix solve_in_basis(const Matrix& basis, const Matrix& v)
{
    if (basis.rows() != v.rows())
        throw Error(ErrorKind::SizeMismatch, "vector and basis of different lengths");
    const std::size_t k = basis.cols();
    auto [r, pivots] = rref(hstack(basis, v));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != i)
            throw Error(ErrorKind::Internal, "vector not in the span of the given basis");
    if (pivots.size() != k)
        throw Error(ErrorKind::Internal, "basis columns are dependent");
    return r.block(0, k, k, v.cols());
}

Matrix complement_basis(const Matrix& s)
{
    const std::size_t n = s.rows();
    auto pivots = rref(hstack(s, Matrix::identity(n))).pivots;
    std::vector<std::size_t> extra;
    for (auto p : pivots)
        if (p >= s.cols())
            extra.push_back(p - s.cols());
    return Matrix::identity(n).select_columns(extra);
}

void SpanBuilder::reduce(std::vector<Gaussian>& v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p].is_zero())
            continue;
        const Gaussian f = v[p];
        const auto& row = rows_[r];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero())
                v[j].sub_mul(f, row[j]);
    }
}

bool SpanBuilder::contains(std::vector<Gaussian> v) const
{
    if (v.size() != dim_)
        throw Error(ErrorKind::SizeMismatch, "vector of the wrong length");
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

bool SpanBuilder::add(std::vector<Gaussian> v)
{
    if (v.size() != dim_)
        throw Error(ErrorKind::SizeMismatch, "vector of the wrong length");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero())
        ++p;
    if (p == dim_)
        return false;
    const Gaussian inv = Gaussian(1) / v[p];
    for (auto& x : v)
        if (!x.is_zero())
            x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

} // namespace fuchs
