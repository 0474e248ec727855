#pragma once

#include "fuchs/schlesinger.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fuchs {

using McFunction = std::function<SchlesingerTuple(const SchlesingerTuple&, const Gaussian&)>;

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t count = 10;
    std::size_t size_bound = 4;
    // The middle convolution under test. Left empty it is the library's own;
    // the harness self-test swaps in a deliberately broken one.
    McFunction mc;
};

struct IdentityCheck {
    std::size_t instance = 0;
    std::string identity;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    std::size_t failures() const;
};

// Names of the identities checked on every instance, in report order.
const std::vector<std::string>& identity_names();

// Instance k is generated from its own seed, so reports do not depend on
// how instances are spread over threads.
VerifyReport run_verify(const VerifyOptions& options);

} // namespace fuchs
