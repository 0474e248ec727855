#pragma once

#include "fuchs/schlesinger.hpp"

#include <span>
#include <vector>

namespace fuchs {

// Pole indices in this API are 0-based: index j addresses A_{j+1}.

SchlesingerTuple addition(const SchlesingerTuple& t, std::span<const Gaussian> mu);

struct ConvolutionData {
    std::vector<Matrix> big_matrices; // G_1..G_p, each pn x pn
    Matrix k_basis;                   // direct sum of ker A_j
    Matrix l_basis;                   // ker(G_1 + ... + G_p)
    Matrix sum_basis;                 // basis of K + L
    Matrix complement_basis;          // standard vectors completing sum_basis
};

ConvolutionData convolution(const SchlesingerTuple& t, const Gaussian& lambda);
SchlesingerTuple middle_convolution(const SchlesingerTuple& t, const Gaussian& lambda);

SchlesingerTuple swap_with_infinity(const SchlesingerTuple& t, std::size_t j);
// New position k receives old position sigma[k].
SchlesingerTuple permute(const SchlesingerTuple& t, std::span<const std::size_t> sigma);
SchlesingerTuple append_infinity_pole(const SchlesingerTuple& t, const Gaussian& t_new);

// Scheme after mc_lambda: the top [lambda] entry at infinity and the top [0]
// entry at each pole lose d = (sum of those multiplicities) - (p-1)n.
RiemannScheme predicted_scheme(const RiemannScheme& s, const Gaussian& lambda);
int predicted_rank_drop(const RiemannScheme& s, const Gaussian& lambda);

// The reduction step: shift each pole's dominant eigenvalue to 0, then
// convolve with the dominant eigenvalue that appears at infinity.
SchlesingerTuple mc_max(const SchlesingerTuple& t);

} // namespace fuchs
