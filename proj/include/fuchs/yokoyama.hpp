#pragma once

#include "fuchs/okubo.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fuchs {

struct ExtensionParams {
    Gaussian rho1;
    Gaussian rho2;
    Gaussian t_new;
};

// j is 0-based; the block j is moved to the end and then removed.
struct RestrictionParams {
    Gaussian mu1;
    Gaussian mu2;
    std::size_t j = 0;
};

// Adds the pole t_new with a block of size dim IM (A - rho1)(A - rho2).
// allow_degenerate lets that block be empty, which the composite operators
// need when A already satisfies a quadratic relation.
OkuboSystem extend_direct(const OkuboSystem& o, const ExtensionParams& params, bool allow_degenerate = false);

// mc_rho1 . M(0,..,0,rho2-rho1) . T(p+1,inf) . mc_-rho1 on the Schlesinger form.
SchlesingerTuple extend_composite(const OkuboSystem& o, const ExtensionParams& params);

// New block position k receives old block sigma[k].
OkuboSystem permute_blocks(const OkuboSystem& o, std::span<const std::size_t> sigma);

// With cross_check the block deletion is compared against the Katz pipeline
// mc_mu1 . T(p,inf) . M(0,..,0,mu1-mu2) . mc_-mu1 and a mismatch is Internal.
OkuboSystem restrict(const OkuboSystem& o, const RestrictionParams& params, bool cross_check = true);
SchlesingerTuple restrict_composite(const OkuboSystem& o, const RestrictionParams& params);

// (mu1, mu2) with (a - mu1)(a - mu2) = 0, when a is not scalar and the roots
// are Gaussian rationals.
std::optional<std::pair<Gaussian, Gaussian>> quadratic_relation(const Matrix& a);

// Both sides of the restriction-after-extension identities. The Yokoyama
// side keeps the original pole t_j at position j.
struct CompositeSides {
    OkuboSystem yokoyama;
    SchlesingerTuple katz;
    Gaussian epsilon;
    std::size_t predicted_rank = 0;
    std::vector<OkuboSystem> stages;
};

// R_j . E_eps . E_{rho1,rho2} against mc_{rho1+eps} . M(rho2-rho1 at j) . T(j,inf) . mc_-rho1.
// Without epsilon the smallest generic positive integer is used.
CompositeSides re_sides(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                        std::optional<Gaussian> epsilon = std::nullopt);
OkuboSystem re_composite(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                         std::optional<Gaussian> epsilon = std::nullopt);

// R_j . E_{rho1+eps, rho1+rho2+rho3+eps} . R_j . E_eps . E_{rho1,rho2}
// against mc_{rho1+eps} . M(rho1+rho3 at j) . mc_-rho1.
CompositeSides rere_sides(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                          const Gaussian& rho3, std::optional<Gaussian> epsilon = std::nullopt);
OkuboSystem rere_composite(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                           const Gaussian& rho3, std::optional<Gaussian> epsilon = std::nullopt);

RiemannScheme scheme_of_extension(const RiemannScheme& s, const Gaussian& rho1, const Gaussian& rho2,
                                  std::optional<Gaussian> t_new = std::nullopt);
// Removes the last pole. The two-parameter form reads mu1, mu2 off the two
// entries at infinity.
RiemannScheme scheme_of_restriction(const RiemannScheme& s);
RiemannScheme scheme_of_restriction(const RiemannScheme& s, const Gaussian& mu1, const Gaussian& mu2);

// One rank-lowering step for an Okubo system with a scheme: a pole j whose
// top eigenvalue is 0 and d = m_{0,1} - m_{j,1} + m_{j,2} > 0 (largest d wins).
struct YokoyamaStep {
    std::size_t j = 0;
    Gaussian rho1;
    Gaussian rho2;
    Gaussian rho3;
    int d = 0;
};

std::optional<YokoyamaStep> choose_yokoyama_step(const RiemannScheme& s);
OkuboSystem apply_yokoyama_step(const OkuboSystem& o, const YokoyamaStep& step,
                                std::optional<Gaussian> epsilon = std::nullopt);

} // namespace fuchs
