#pragma once

#include "fuchs/linalg.hpp"
#include "fuchs/spectral_types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fuchs {

// Residues A_1..A_p at the poles t_1..t_p. The residue at infinity is always
// recomputed from the matrices, so it cannot drift out of sync.
struct SchlesingerTuple {
    std::vector<Gaussian> poles;
    std::vector<Matrix> matrices;
    std::optional<RiemannScheme> scheme;

    std::size_t rank() const { return matrices.empty() ? 0 : matrices.front().rows(); }
    std::size_t p() const { return matrices.size(); }
};

// Validates the invariants (distinct poles, equal square sizes, a declared
// scheme that actually verifies) and returns the tuple.
SchlesingerTuple make_scf(std::vector<Gaussian> poles, std::vector<Matrix> matrices,
                          std::optional<RiemannScheme> scheme = std::nullopt);

Matrix residue_at_infinity(const SchlesingerTuple& t);
Matrix residue_at_infinity(std::span<const Matrix> mats, std::size_t n);

struct StarConditions {
    std::vector<bool> star;
    std::vector<bool> starstar;
    bool all() const;
};

// For p = 1 the intersection over the other residues is empty; we then ask
// for ker A_1 = 0, which is what the conditions say at tau = 0.
StarConditions check_star_conditions(const SchlesingerTuple& t);
StarConditions check_star_conditions(std::span<const Matrix> mats);

bool is_irreducible(const SchlesingerTuple& t);
bool is_irreducible(std::span<const Matrix> mats, std::size_t n);

// Simultaneous conjugacy of matrix tuples, ignoring poles.
bool tuples_equivalent(std::span<const Matrix> a, std::span<const Matrix> b);
bool is_equivalent(const SchlesingerTuple& a, const SchlesingerTuple& b);

int index_of_rigidity(const SchlesingerTuple& t);
int index_of_rigidity(std::span<const Matrix> mats, std::size_t n);

bool matches_conjugacy_class(const Matrix& m, Column parts);
Matrix build_L(Column parts);

// Checks A_0 against column 0 and A_j against column j.
bool verify_scheme(const SchlesingerTuple& t, const RiemannScheme& s);

// Attaches a transported scheme only if it verifies against the matrices;
// otherwise the result carries no scheme.
void attach_scheme_if_valid(SchlesingerTuple& t, std::optional<RiemannScheme> s);

// Best effort: finds eigenvalues among the Gaussian-rational roots of the
// characteristic polynomial and reads Jordan data off kernel dimensions.
// Throws SchemeUnavailable when some eigenvalue lies outside the field.
Column infer_column(const Matrix& m);
RiemannScheme infer_scheme(const SchlesingerTuple& t);

// Coefficients c_0..c_n of det(xI - m), lowest degree first.
std::vector<Gaussian> characteristic_polynomial(const Matrix& m);

} // namespace fuchs
