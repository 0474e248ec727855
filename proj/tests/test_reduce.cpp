#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/reduce.hpp"

using namespace fuchs;

namespace {

Gaussian g(const char* s) { return Gaussian::parse(s); }

OkuboSystem hypergeometric()
{
    return extend_direct(rank_one_onf(g("1/3")), {g("2"), g("5/2+i"), g("1")});
}

} // namespace

TEST_CASE("Katz reduction of matrices")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto r = reduce_katz_matrix(rigid_family_tuple(n));
        CHECK(r.reached_rank_one);
        CHECK(r.stages.size() == n);
        for (const auto& s : r.stages)
            CHECK(s.idx == 2);
    }
    auto d4 = reduce_katz_matrix(d4_basic_tuple());
    CHECK_FALSE(d4.reached_rank_one);
    REQUIRE(d4.stuck_at);
    CHECK(*d4.stuck_at == "11,11,11,11");
    CHECK(d4.stuck_type_in_tables);
}

TEST_CASE("Katz reduction of types")
{
    auto r = reduce_katz_scheme(parse_spectral_type("11,11,11"));
    CHECK(r.reached_rank_one);
    CHECK(r.stages.size() == 2);
    auto stuck = reduce_katz_scheme(parse_spectral_type("1111,211,31,31"));
    REQUIRE(stuck.stuck_at);
    CHECK(*stuck.stuck_at == "111,111,21,21");
    CHECK(stuck.stuck_type_in_tables);
}

TEST_CASE("Yokoyama reduction of matrices")
{
    auto h = reduce_yokoyama_matrix(System{hypergeometric()});
    CHECK(h.reached_rank_one);
    CHECK(h.stages.size() == 2);
    for (std::size_t n = 2; n <= 5; ++n) {
        auto r = reduce_yokoyama_matrix(System{rigid_family_tuple(n)});
        CHECK(r.reached_rank_one);
        for (const auto& s : r.stages)
            CHECK(s.idx == 2);
    }
    auto rank_one = reduce_yokoyama_matrix(System{rank_one_onf(g("1/3"))});
    CHECK(rank_one.reached_rank_one);
    CHECK(rank_one.stages.size() == 1);
}

TEST_CASE("Yokoyama reduction of a D4 system stops at its Okubo form")
{
    auto r = reduce_yokoyama_matrix(System{d4_basic_tuple()});
    CHECK_FALSE(r.reached_rank_one);
    REQUIRE(r.stuck_at);
    CHECK(*r.stuck_at == "11,11,11,11");
    CHECK(format_spectral_type(canonical_type(r.stages.back().type)) == "111,21,21,21");
    CHECK(r.stages.back().idx == 0);
}

TEST_CASE("scheme-level Yokoyama steps track the matrices")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto matrix = reduce_yokoyama_matrix(System{rigid_family_tuple(n)});
        REQUIRE(matrix.stages.front().scheme);
        auto scheme = reduce_yokoyama_scheme(*matrix.stages.front().scheme);
        CHECK(scheme.reached_rank_one);
        REQUIRE(scheme.stages.size() == matrix.stages.size());
        for (std::size_t k = 0; k < scheme.stages.size(); ++k) {
            CHECK(scheme.stages[k].rank == matrix.stages[k].rank);
            CHECK(canonical_type(scheme.stages[k].type) == canonical_type(matrix.stages[k].type));
        }
    }
}
