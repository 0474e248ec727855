#include "doctest.h"

#include "fuchs/katz.hpp"
#include "fuchs/verify.hpp"

using namespace fuchs;

TEST_CASE("every identity holds on seeded instances")
{
    VerifyOptions options;
    options.seed = 1;
    options.count = 10;
    options.size_bound = 4;
    auto report = run_verify(options);
    CHECK(report.checks.size() == 10 * identity_names().size());
    for (const auto& c : report.checks)
        CHECK_MESSAGE(c.passed, "instance " << c.instance << " " << c.identity << ": " << c.detail);
}

TEST_CASE("reports are deterministic")
{
    VerifyOptions options;
    options.seed = 7;
    options.count = 3;
    auto a = run_verify(options);
    auto b = run_verify(options);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].identity == b.checks[k].identity);
        CHECK(a.checks[k].detail == b.checks[k].detail);
    }
}

TEST_CASE("an empty run passes")
{
    VerifyOptions options;
    options.count = 0;
    auto report = run_verify(options);
    CHECK(report.checks.empty());
    CHECK(report.all_passed());
}

TEST_CASE("a corrupted middle convolution is caught")
{
    VerifyOptions options;
    options.count = 4;
    options.mc = [](const SchlesingerTuple& t, const Gaussian& lambda) {
        auto out = middle_convolution(t, lambda);
        if (out.rank() > 0)
            out.matrices[0](0, 0) += Gaussian(1);
        return out;
    };
    auto report = run_verify(options);
    CHECK_FALSE(report.all_passed());
    CHECK(report.failures() >= 4);
}
