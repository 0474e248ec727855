#pragma once

#include "fuchs/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fuchs {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// Subspace routines take and return bases as column matrices.
Matrix kernel_basis(const Matrix& m);
Matrix image_basis(const Matrix& m);
// Column space basis in reduced echelon form: a coordinate subspace comes
// back as its standard basis vectors.
Matrix reduced_image_basis(const Matrix& m);

std::size_t commutant_dim(const Matrix& m);
std::size_t generated_algebra_dim(std::span<const Matrix> mats, std::size_t n);

// Basis of { g : g a_j = b_j g for all j }. With a_j of size n and b_j of
// size m, each basis element is m x n.
std::vector<Matrix> solve_sylvester_space(std::span<const Matrix> a_list, std::span<const Matrix> b_list);

std::optional<Matrix> inverse(const Matrix& m);
Gaussian determinant(Matrix m);

// Rows spanning the annihilator of span(u): N with N u = 0 and rank n - dim u.
Matrix annihilator(const Matrix& u);
Matrix subspace_sum(const Matrix& u, const Matrix& w);
Matrix subspace_intersection(const Matrix& u, const Matrix& w);
// { x : a x lies in span(u) }
Matrix preimage(const Matrix& a, const Matrix& u);
// Largest a-invariant subspace contained in span(w).
Matrix largest_invariant_subspace(const Matrix& a, const Matrix& w);

// Coordinates c with basis * c = v. The basis must have independent columns;
// throws Internal if some column of v is outside the span.
Matrix solve_in_basis(const Matrix& basis, const Matrix& v);

// Standard basis vectors completing span(s) to the whole space, chosen by the
// pivots of rref([s | I]).
Matrix complement_basis(const Matrix& s);

// Incremental row-echelon span of vectors, used to grow algebras and orbits.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

    // Adds v if it is not already in the span; returns whether it was new.
    bool add(std::vector<Gaussian> v);
    bool contains(std::vector<Gaussian> v) const;
    std::size_t size() const { return rows_.size(); }

private:
    void reduce(std::vector<Gaussian>& v) const;

    std::size_t dim_;
    std::vector<std::vector<Gaussian>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace fuchs
