#pragma once

#include "fuchs/io.hpp"
#include "fuchs/spectral.hpp"
#include "fuchs/yokoyama.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuchs {

struct ReductionStage {
    std::size_t rank = 0;
    int idx = 0;
    std::optional<RiemannScheme> scheme;
    PartitionTuple type;
    std::string note;
};

struct ReductionReport {
    std::vector<ReductionStage> stages; // stages[0] is the input
    bool reached_rank_one = false;
    // When the loop stops above rank 1: the basic type it stopped at, and
    // whether that type is one of the enumerated index 0 / -2 basic types.
    std::optional<std::string> stuck_at;
    bool stuck_type_in_tables = false;
};

// Iterates mc_max on matrices. A missing scheme is inferred first.
ReductionReport reduce_katz_matrix(const SchlesingerTuple& t);
// Iterates partial_max on a (labelled or bare) type.
ReductionReport reduce_katz_scheme(const PartitionTuple& m);

// Iterates the Yokoyama step R E R E on Okubo systems. A Schlesinger input
// that is not of Okubo type is first moved to one by mc_via_images at a
// generic lambda.
ReductionReport reduce_yokoyama_matrix(const System& s);
// The same loop on Riemann schemes, using the scheme action of the step.
ReductionReport reduce_yokoyama_scheme(const RiemannScheme& s);

// Scheme after the Yokoyama step, equal to the scheme of its Katz side
// mc_(rho1+eps) . M(rho1+rho3 at j) . mc_(-rho1).
RiemannScheme scheme_after_yokoyama_step(const RiemannScheme& s, const YokoyamaStep& step,
                                         const Gaussian& epsilon);

} // namespace fuchs
