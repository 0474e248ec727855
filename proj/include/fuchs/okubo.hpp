#pragma once

#include "fuchs/schlesinger.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fuchs {

// (x - T) u' = A u with T = diag(t_1 I_{n_1}, ..., t_p I_{n_p}).
// Blocks of size 0 are allowed; they arise when an intermediate step of a
// composite operation has a residue of rank 0.
struct OkuboSystem {
    std::vector<std::size_t> blocks;
    std::vector<Gaussian> poles;
    Matrix a;
    std::optional<RiemannScheme> scheme;

    std::size_t rank() const { return a.rows(); }
    std::size_t p() const { return blocks.size(); }
    std::size_t offset(std::size_t j) const;
    Matrix block(std::size_t i, std::size_t j) const;
};

OkuboSystem make_onf(std::vector<std::size_t> blocks, std::vector<Gaussian> poles, Matrix a,
                     std::optional<RiemannScheme> scheme = std::nullopt);

SchlesingerTuple scf_from_onf(const OkuboSystem& o);
OkuboSystem onf_from_scf(const SchlesingerTuple& t);
bool okubo_convertible(const SchlesingerTuple& t);

bool check_onf_conditions(const OkuboSystem& o);

// mc_lambda realized on IM A_1 + ... + IM A_p; needs lambda != 0 and
// rank(A_1 + ... + A_p + lambda) = n.
OkuboSystem mc_via_images(const OkuboSystem& o, const Gaussian& lambda);
OkuboSystem mc_via_images(const SchlesingerTuple& t, const Gaussian& lambda);

OkuboSystem euler_transform(const OkuboSystem& o, const Gaussian& lambda);

Gaussian pick_generic(std::span<const Gaussian> forbidden);

void attach_scheme_if_valid(OkuboSystem& o, std::optional<RiemannScheme> s);

} // namespace fuchs
