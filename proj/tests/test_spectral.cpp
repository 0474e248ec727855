#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"
#include "fuchs/spectral.hpp"

#include <omp.h>
#include <set>

using namespace fuchs;

namespace {

PartitionTuple T(const char* s) { return parse_spectral_type(s); }

std::string canon(const PartitionTuple& m) { return format_spectral_type(canonical_type(m)); }

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

PartitionTuple rigid_type(int n)
{
    std::string ones(static_cast<std::size_t>(n), '1');
    return T((ones + "," + ones + "," + std::to_string(n - 1) + "1").c_str());
}

} // namespace

TEST_CASE("ord, idx and d")
{
    CHECK(ord(T("11,11,11,11")) == 2);
    CHECK(ord(T("111111,222,33")) == 6);
    CHECK(ord(T("5")) == 5);
    PartitionTuple uneven{{{{std::nullopt, 2}}, {{std::nullopt, 1}}}};
    CHECK(kind_of([&] { ord(uneven); }) == ErrorKind::InconsistentColumns);

    CHECK(idx_spec(T("11,11,11")) == 2);
    CHECK(idx_spec(T("11,11,11,11")) == 0);
    CHECK(idx_spec(T("11111,221,221")) == -2);

    CHECK(d_tau(T("11,11,11"), {0, 0, 0}) == 1);
    CHECK(d_tau(T("11,11,11,11"), {0, 0, 0, 0}) == 0);
    CHECK(d_tau(T("21,111,21"), {5, 5, 5}) == -3);
    CHECK(tau_max(T("21,111,21")) == std::vector<std::size_t>{0, 0, 0});
    CHECK(tau_max(T("11,11,11")) == std::vector<std::size_t>{0, 0, 0});
    CHECK(d_max(T("11,11,11")) == 1);
    CHECK(d_max(T("11,11,11,11")) == 0);
    CHECK(d_max(T("111111,222,33")) == 0);
}

TEST_CASE("partial_max and katz_reduce")
{
    auto once = partial_max(T("11,11,11"));
    CHECK(format_spectral_type(once) == "1,1,1");
    CHECK(ord(once) == 1);
    CHECK(format_spectral_type(partial_max(T("111,21,21,21"))) == "11,11,11,11");

    auto basic = katz_reduce(T("11,11,11,11"));
    CHECK(basic.steps.empty());
    auto d4 = katz_reduce(T("111,21,21,21"));
    CHECK(d4.steps.size() == 1);
    CHECK(format_spectral_type(d4.final_type) == "11,11,11,11");

    for (int n = 2; n <= 7; ++n) {
        auto m = rigid_type(n);
        auto r = katz_reduce(m);
        CHECK(ord(r.final_type) == 1);
        CHECK(r.steps.size() == static_cast<std::size_t>(n - 1));
        for (const auto& step : r.steps)
            CHECK(idx_spec(step) == 2);
    }
    // A column whose maximum is smaller than d_max cannot be reduced.
    CHECK(kind_of([&] { partial_max(T("11,2,2,2")); }) == ErrorKind::NegativePart);
}

TEST_CASE("partial_max transports labels like mc_max")
{
    for (std::size_t n = 2; n <= 4; ++n) {
        auto t = rigid_family_tuple(n);
        REQUIRE(t.scheme);
        auto m = mc_max(t);
        REQUIRE(m.scheme);
        PartitionTuple labelled{t.scheme->columns};
        PartitionTuple expected{m.scheme->columns};
        CHECK(partial_max(labelled) == expected);
    }
}

TEST_CASE("Okubo index and basic types")
{
    CHECK(oidx(T("111,21,21,21")) == 0);
    CHECK(oidx(T("11,11,11,11")) == 1);
    CHECK(oidx(T("211,22,22,22")) == 2);
    CHECK(is_basic(T("11,11,11,11")));
    CHECK_FALSE(is_basic(T("11,11,11")));
    CHECK(is_basic(T("2222211,444,66")));
}

TEST_CASE("the inequality for Katz reduction")
{
    for (int n = 3; n <= 8; ++n)
        CHECK(lemma_ineq_holds(rigid_type(n)));
    CHECK(lemma_ineq_holds(T("22,1111,211")));
    CHECK(lemma_ineq_holds(T("21,21,21,21")));
    CHECK(lemma_ineq_holds(T("11,11,11")));
    // d_max(111,21,21,21) = 1 but its reduction 11,11,11,11 has d_max = 0.
    CHECK(kind_of([&] { lemma_ineq_holds(T("111,21,21,21")); }) == ErrorKind::PreconditionFail);
    CHECK(kind_of([&] { lemma_ineq_holds(T("11,11,11,11")); }) == ErrorKind::PreconditionFail);
}

TEST_CASE("canonical form identifies permuted types")
{
    CHECK(canon(T("22,31,1111")) == "1111,22,31");
    CHECK(canon(T("12,3,21")) == "21,21");
    CHECK(canonical_type(T("211,22")) == canonical_type(T("22,112")));
}

TEST_CASE("index 0 table")
{
    auto found = enumerate_basic(0, 6, 4);
    const auto& table = basic_table(0);
    REQUIRE(found.size() == table.size());
    std::set<std::string> got, want;
    for (const auto& m : found) {
        got.insert(canon(m));
        CHECK(is_basic(m));
        CHECK(idx_spec(m) == 0);
    }
    for (const auto& row : table) {
        want.insert(canon(T(row.basic.c_str())));
        auto m = T(row.basic.c_str());
        CHECK(ord(m) == row.ord);
        CHECK(ord(m) + oidx(m) == row.onf_ord);
        auto onf = minimal_onf_types(m);
        REQUIRE(onf.size() == row.onf.size());
        for (std::size_t k = 0; k < onf.size(); ++k) {
            CHECK(oidx(onf[k]) == 0);
            CHECK(ord(onf[k]) == row.onf_ord);
        }
    }
    CHECK(got == want);
}

TEST_CASE("index -2 table")
{
    auto found = enumerate_basic(-2, 12, 5);
    const auto& table = basic_table(-2);
    std::set<std::string> got, want;
    for (const auto& m : found) {
        got.insert(canon(m));
        CHECK(oidx(m) > 0);
    }
    for (const auto& row : table) {
        auto m = T(row.basic.c_str());
        want.insert(canon(m));
        CHECK(ord(m) + oidx(m) == row.onf_ord);
        std::set<std::string> onf_got, onf_want;
        for (const auto& t : minimal_onf_types(m)) {
            onf_got.insert(canon(t));
            // Reducing the Okubo type once recovers the basic type.
            CHECK(canon(katz_reduce(t).final_type) == canon(m));
        }
        for (const auto& s : row.onf)
            onf_want.insert(canon(T(s.c_str())));
        CHECK(onf_got == onf_want);
    }
    CHECK(found.size() == table.size());
    CHECK(got == want);
}

TEST_CASE("no basic types of index 2")
{
    CHECK(enumerate_basic(2, 8, 5).empty());
}

TEST_CASE("enumeration does not depend on the thread count")
{
    omp_set_num_threads(1);
    const auto serial = enumerate_basic(-2, 10, 5);
    omp_set_num_threads(4);
    const auto parallel = enumerate_basic(-2, 10, 5);
    omp_set_num_threads(omp_get_num_procs());
    CHECK(serial == parallel);
}
