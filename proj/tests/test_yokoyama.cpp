#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"
#include "fuchs/yokoyama.hpp"

using namespace fuchs;

namespace {

Gaussian g(const char* s) { return Gaussian::parse(s); }

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

OkuboSystem hypergeometric()
{
    return extend_direct(rank_one_onf(g("1/3")), {g("2"), g("5/2+i"), g("1")});
}

} // namespace

TEST_CASE("extending the rank-one equation gives the Gauss hypergeometric system")
{
    auto o = hypergeometric();
    CHECK(o.rank() == 2);
    CHECK(o.blocks == std::vector<std::size_t>{1, 1});
    REQUIRE(o.scheme);
    CHECK(format_scheme(*o.scheme) == "{inf: [-5/2-i]_1 [-2]_1; 0: [0]_1 [1/3]_1; 1: [0]_1 [25/6+i]_1}");
    CHECK(is_irreducible(scf_from_onf(o)));
    CHECK(check_onf_conditions(o));
}

TEST_CASE("the extended matrix satisfies the quadratic relation")
{
    Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        auto o = random_onf(rng, {1, 1 + static_cast<std::size_t>(trial % 3)});
        const Gaussian r1 = g("1/2");
        const Gaussian r2 = trial % 2 ? g("1/2") : g("-3");
        auto e = extend_direct(o, {r1, r2, g("7")});
        CHECK((e.a.shifted(-r1) * e.a.shifted(-r2)).is_zero());
        CHECK(e.rank() == o.rank() + rank(o.a.shifted(-r1) * o.a.shifted(-r2)));
        CHECK(check_onf_conditions(e));
        CHECK(is_equivalent(scf_from_onf(e), extend_composite(o, {r1, r2, g("7")})));
        // Restriction of the new pole recovers the original matrix exactly.
        auto back = restrict(e, {r1, r2, o.p()});
        CHECK(back.a == o.a);
        CHECK(back.blocks == o.blocks);
        CHECK(back.poles == o.poles);
    }
}

TEST_CASE("restriction after E_{rho,rho} realizes the swap with infinity")
{
    Rng rng(9);
    auto o = random_onf(rng, {1, 2});
    const Gaussian rho = g("3/2");
    for (std::size_t j = 0; j < 2; ++j) {
        auto e = euler_transform(extend_direct(o, {rho, rho, g("5")}), g("1/7"));
        auto r = restrict(e, {rho + g("1/7"), rho + g("1/7"), j});
        auto swapped = swap_with_infinity(scf_from_onf(o), j);
        auto shifted = mc_via_images(swapped, rho + g("1/7"));
        CHECK(r.rank() == o.rank() + rank(o.a.shifted(-rho) * o.a.shifted(-rho)) - o.blocks[j]);
        CHECK(shifted.rank() == r.rank());
    }
}

TEST_CASE("restriction error paths")
{
    auto o = hypergeometric();
    CHECK(kind_of([&] { restrict(o, {g("1"), g("2"), 1}); }) == ErrorKind::NotQ2);
    CHECK(kind_of([&] { restrict(o, {g("2"), g("5/2+i"), 5}); }) == ErrorKind::IndexOutOfRange);
    auto rel = quadratic_relation(o.a);
    REQUIRE(rel);
    CHECK(((o.a.shifted(-rel->first)) * (o.a.shifted(-rel->second))).is_zero());
    CHECK_FALSE(quadratic_relation(Matrix::identity(2)));

    auto e = extend_direct(rank_one_onf(g("1")), {g("3"), g("2"), g("1")});
    // Block eigenvalues 1 and 3 + 2 - 1 = 4. After a shift by s the removed
    // block has 1 + s while mu1 + mu2 = 5 + 2s; they meet at s = -4.
    auto bad = euler_transform(e, g("-4"));
    CHECK(kind_of([&] { restrict(bad, {g("-1"), g("-2"), 0}); }) == ErrorKind::CRViolated);
    CHECK_NOTHROW(restrict(bad, {g("-1"), g("-2"), 1}));
}

TEST_CASE("extension error paths")
{
    auto o = rank_one_onf(g("1/3"));
    CHECK(kind_of([&] { extend_direct(o, {g("0"), g("1"), g("1")}); }) == ErrorKind::ZeroRho);
    CHECK(kind_of([&] { extend_direct(o, {g("1"), g("1"), g("0")}); }) == ErrorKind::DuplicatePole);
    CHECK(kind_of([&] { extend_direct(o, {g("1/3"), g("1"), g("1")}); }) == ErrorKind::DegenerateExtension);
    auto degenerate = extend_direct(o, {g("1/3"), g("1"), g("1")}, true);
    CHECK(degenerate.blocks == std::vector<std::size_t>{1, 0});
    OkuboSystem singular{{1, 1}, {g("0"), g("1")}, Matrix{{1, 1}, {1, 1}}, std::nullopt};
    CHECK(kind_of([&] { extend_direct(singular, {g("1"), g("2"), g("3")}); }) == ErrorKind::ConditionsFail);
}

TEST_CASE("scheme predictions for extension and restriction")
{
    RiemannScheme rank_one{{g("0")}, {{{g("-1/3"), 1}}, {{g("1/3"), 1}}}};
    auto ext = scheme_of_extension(rank_one, g("2"), g("5/2+i"), g("1"));
    CHECK(ext == *hypergeometric().scheme);
    auto back = scheme_of_restriction(ext);
    CHECK(back == rank_one);
    auto doubled = scheme_of_extension(rank_one, g("1"), g("2"), g("1"));
    CHECK(column_total(doubled.columns[0]) == 2);

    Rng rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        auto t = random_scheme_tuple(rng, 2, 3);
        std::vector<Gaussian> forbidden;
        for (const auto& part : t.scheme->columns[0])
            forbidden.push_back(*part.label);
        auto o = onf_from_scf(middle_convolution(t, pick_generic(forbidden)));
        REQUIRE(o.scheme);
        if (!check_onf_conditions(o))
            continue;
        const Gaussian r1 = -*o.scheme->columns[0][0].label;
        auto e = extend_direct(o, {r1, g("7/3"), g("100")}, true);
        REQUIRE(e.scheme);
        CHECK(*e.scheme == scheme_of_extension(*o.scheme, r1, g("7/3"), g("100")));
    }
}

TEST_CASE("restriction after extension equals the convolution formula")
{
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        auto o = random_onf(rng, {1, 1 + static_cast<std::size_t>(trial % 2)});
        const std::size_t j = static_cast<std::size_t>(trial % 2);
        auto sides = re_sides(o, j, g("1/2"), g("-4/3"));
        CHECK(sides.yokoyama.rank() == sides.predicted_rank);
        CHECK(sides.yokoyama.poles == o.poles);
        CHECK(is_equivalent(scf_from_onf(sides.yokoyama), sides.katz));

        auto twice = rere_sides(o, j, g("1/2"), g("-4/3"), g("2/5"));
        CHECK(twice.yokoyama.rank() == twice.katz.rank());
        CHECK(is_equivalent(scf_from_onf(twice.yokoyama), twice.katz));
    }
}

TEST_CASE("epsilon genericity is checked")
{
    auto o = hypergeometric();
    CHECK_NOTHROW(re_composite(o, 0, g("2"), g("5/2+i")));
    // epsilon = -rho1 makes mc_{rho1 + epsilon} trivial.
    CHECK(kind_of([&] { re_composite(o, 0, g("2"), g("5/2+i"), g("-2")); }) == ErrorKind::NotGeneric);
}

TEST_CASE("a Yokoyama step lowers the hypergeometric system to rank one")
{
    auto o = hypergeometric();
    auto step = choose_yokoyama_step(*o.scheme);
    REQUIRE(step);
    CHECK(step->d == 1);
    auto r = apply_yokoyama_step(o, *step);
    CHECK(r.rank() == 1);
    CHECK(r.p() == 2);
}

TEST_CASE("Yokoyama steps reduce the rigid family")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto t = rigid_family_tuple(n);
        std::vector<Gaussian> forbidden;
        for (const auto& part : t.scheme->columns[0])
            forbidden.push_back(*part.label);
        auto o = onf_from_scf(t);
        REQUIRE(o.scheme);
        std::size_t guard = 0;
        while (o.rank() > 1 && guard++ < 10) {
            auto step = choose_yokoyama_step(*o.scheme);
            REQUIRE(step);
            const std::size_t expected = o.rank() - static_cast<std::size_t>(step->d);
            o = apply_yokoyama_step(o, *step);
            CHECK(o.rank() == expected);
            CHECK(index_of_rigidity(scf_from_onf(o)) == 2);
            REQUIRE(o.scheme);
        }
        CHECK(o.rank() == 1);
    }
}
