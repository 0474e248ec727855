#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"

#include <numeric>

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

} // namespace

TEST_CASE("mc_0 is the identity and mc composes")
{
    Rng rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        auto t = random_irreducible_scf(rng, 1 + trial % 3, 2 + trial % 2);
        CHECK(is_equivalent(middle_convolution(t, g("0")), t));
        const Gaussian l1 = g("1/3");
        const Gaussian l2 = g("-2/7+i");
        auto lhs = middle_convolution(middle_convolution(t, l1), l2);
        auto rhs = middle_convolution(t, l1 + l2);
        CHECK(lhs.rank() == rhs.rank());
        CHECK(is_equivalent(lhs, rhs));
        // mc_{-l} undoes mc_l.
        CHECK(is_equivalent(middle_convolution(middle_convolution(t, l1), -l1), t));
    }
}

TEST_CASE("index of rigidity is invariant")
{
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = random_irreducible_scf(rng, 2 + trial % 2, 2 + trial % 2);
        const int idx = index_of_rigidity(t);
        CHECK(index_of_rigidity(middle_convolution(t, g("3/5"))) == idx);
        std::vector<Gaussian> mu(t.p(), g("1/2"));
        CHECK(index_of_rigidity(addition(t, mu)) == idx);
        CHECK(index_of_rigidity(swap_with_infinity(t, 0)) == idx);
    }
}

TEST_CASE("mc commutes with permutations of the poles")
{
    Rng rng(8);
    auto t = random_irreducible_scf(rng, 2, 3);
    const std::vector<std::size_t> sigma{2, 0, 1};
    auto a = middle_convolution(permute(t, sigma), g("2/3"));
    auto b = permute(middle_convolution(t, g("2/3")), sigma);
    CHECK(is_equivalent(a, b));
}

TEST_CASE("convolution subspaces")
{
    auto t = rigid_family_tuple(2);
    auto data = convolution(t, g("1/5"));
    CHECK(data.big_matrices.size() == 2);
    CHECK(data.big_matrices[0].rows() == 4);
    CHECK(data.k_basis.cols() == 2);
    CHECK(data.l_basis.cols() == 0);
    CHECK(data.sum_basis.cols() + data.complement_basis.cols() == 4);
}

TEST_CASE("schemes are transported through every operation")
{
    auto t = rigid_family_tuple(3);
    REQUIRE(t.scheme);
    std::vector<Gaussian> mu{g("1/7"), g("-2")};
    auto added = addition(t, mu);
    CHECK(added.scheme);
    auto swapped = swap_with_infinity(t, 1);
    REQUIRE(swapped.scheme);
    CHECK(verify_scheme(swapped, *swapped.scheme));
    auto appended = append_infinity_pole(t, g("5"));
    REQUIRE(appended.scheme);
    CHECK(appended.p() == 3);
    CHECK(format_spectral_type(spectral_type(*appended.scheme)) == "3,111,21,111");

    const Gaussian lambda = g("4/9");
    const int d = predicted_rank_drop(*t.scheme, lambda);
    auto convolved = middle_convolution(t, lambda);
    CHECK(static_cast<int>(convolved.rank()) == 3 - d);
    REQUIRE(convolved.scheme);
    CHECK(*convolved.scheme == predicted_scheme(*t.scheme, lambda));
}

TEST_CASE("mc_max walks the rigid family down to rank one")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto t = rigid_family_tuple(n);
        std::size_t steps = 0;
        while (t.rank() > 1) {
            const std::size_t before = t.rank();
            t = mc_max(t);
            REQUIRE(t.scheme);
            CHECK(t.rank() < before);
            CHECK(index_of_rigidity(t) == 2);
            ++steps;
        }
        CHECK(t.rank() == 1);
        CHECK(steps == n - 1);
    }
}

TEST_CASE("mc_max on the D4 tuple keeps the rank")
{
    auto t = d4_basic_tuple();
    REQUIRE(t.scheme);
    auto m = mc_max(t);
    CHECK(m.rank() == 2);
}

TEST_CASE("katz operation errors")
{
    auto t = rigid_family_tuple(2);
    std::vector<Gaussian> short_mu{g("1")};
    CHECK(kind_of([&] { addition(t, short_mu); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([&] { swap_with_infinity(t, 2); }) == ErrorKind::IndexOutOfRange);
    std::vector<std::size_t> bad{0, 0};
    CHECK(kind_of([&] { permute(t, bad); }) == ErrorKind::NotAPermutation);
    CHECK(kind_of([&] { append_infinity_pole(t, g("1")); }) == ErrorKind::DuplicatePole);
    SchlesingerTuple bare = t;
    bare.scheme.reset();
    CHECK(kind_of([&] { mc_max(bare); }) == ErrorKind::SchemeUnavailable);
    RiemannScheme uneven = *t.scheme;
    uneven.columns[1].push_back({g("9"), 1});
    CHECK(kind_of([&] { predicted_scheme(uneven, g("1")); }) == ErrorKind::NotNormalizable);
}

TEST_CASE("a rank-zero result is allowed")
{
    // x u' = a u convolved with lambda = -a: G_1 = 0, so L is everything.
    auto t = make_scf({g("0")}, {Matrix{{g("1/2")}}});
    auto m = middle_convolution(t, g("-1/2"));
    CHECK(m.rank() == 0);
    CHECK(m.p() == 1);
}
