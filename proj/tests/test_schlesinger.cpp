#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/schlesinger.hpp"

using namespace fuchs;

namespace {

Gaussian g(const char* s) { return Gaussian::parse(s); }

Column col(std::initializer_list<std::pair<const char*, int>> parts)
{
    Column c;
    for (auto [label, mult] : parts)
        c.push_back({g(label), mult});
    return c;
}

Matrix conjugate(const Matrix& a, const Matrix& p) { return p * a * *inverse(p); }

Matrix invertible(Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n)
            return m;
    }
}

} // namespace

TEST_CASE("make_scf validates its input")
{
    const Matrix a{{1, 0}, {0, 2}};
    CHECK_THROWS_AS(make_scf({}, {}), Error);
    CHECK_THROWS_AS(make_scf({g("0"), g("1")}, {a}), Error);
    CHECK_THROWS_AS(make_scf({g("0"), g("0")}, {a, a}), Error);
    CHECK_THROWS_AS(make_scf({g("0"), g("1")}, {a, Matrix{{1}}}), Error);
    CHECK_THROWS_AS(make_scf({g("0")}, {Matrix(2, 3)}), Error);
    try {
        make_scf({g("0"), g("0")}, {a, a});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicatePole);
    }
    auto t = make_scf({g("0"), g("1")}, {a, a});
    CHECK(residue_at_infinity(t) == Matrix{{-2, 0}, {0, -4}});
}

TEST_CASE("declared schemes must verify")
{
    const Matrix a{{1, 1}, {0, 1}};
    RiemannScheme good{{g("0")}, {col({{"-1", 2}}), col({{"1", 2}})}};
    RiemannScheme jordan{{g("0")}, {col({{"-1", 1}, {"-1", 1}}), col({{"1", 1}, {"1", 1}})}};
    CHECK_THROWS_AS(make_scf({g("0")}, {a}, good), Error);
    CHECK_NOTHROW(make_scf({g("0")}, {a}, jordan));
    RiemannScheme wrong_points{{g("5")}, jordan.columns};
    CHECK_THROWS_AS(verify_scheme(make_scf({g("0")}, {a}), wrong_points), Error);
}

TEST_CASE("conjugacy classes by kernel dimensions")
{
    const Matrix jordan{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(matches_conjugacy_class(jordan, col({{"2", 2}, {"2", 1}})));
    CHECK_FALSE(matches_conjugacy_class(jordan, col({{"2", 3}})));
    CHECK_FALSE(matches_conjugacy_class(jordan, col({{"2", 1}, {"2", 1}, {"2", 1}})));
    CHECK(matches_conjugacy_class(Matrix::scalar(3, g("2")), col({{"2", 3}})));
    CHECK_THROWS_AS(matches_conjugacy_class(jordan, col({{"2", 2}})), Error);
    CHECK_THROWS_AS(matches_conjugacy_class(jordan, Column{{std::nullopt, 3}}), Error);

    Rng rng(3);
    for (Column c : {col({{"1", 2}, {"-1", 1}}), col({{"0", 2}, {"0", 2}, {"1/2+i", 1}}), col({{"3", 1}, {"3", 1}})}) {
        Matrix l = build_L(c);
        CHECK(matches_conjugacy_class(l, c));
        CHECK(matches_conjugacy_class(conjugate(l, invertible(rng, l.rows())), c));
        CHECK(infer_column(l) == [&] {
            Column sorted = c;
            canonical_sort(sorted);
            return sorted;
        }());
    }
}

TEST_CASE("characteristic polynomial and inferred columns")
{
    const Matrix a{{0, -1}, {1, 0}};
    auto c = characteristic_polynomial(a);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == g("1"));
    CHECK(c[1] == g("0"));
    CHECK(c[2] == g("1"));
    Column cc = infer_column(a);
    CHECK(cc == col({{"-i", 1}, {"i", 1}}));
    CHECK_THROWS_AS(infer_column(Matrix{{0, 2}, {1, 0}}), Error);
    CHECK(infer_column(Matrix{{g("1/2"), 0}, {0, g("1/3")}}) == col({{"1/3", 1}, {"1/2", 1}}));
}

TEST_CASE("star conditions and irreducibility")
{
    const Matrix e11{{1, 0}, {0, 0}};
    const Matrix e22{{0, 0}, {0, 1}};
    const Matrix e12{{0, 1}, {0, 0}};
    const Matrix e21{{0, 0}, {1, 0}};
    CHECK_FALSE(is_irreducible(make_scf({g("0"), g("1")}, {e11, e22})));
    CHECK(is_irreducible(make_scf({g("0"), g("1")}, {e12, e21})));
    // Diagonal residues share ker(A_2) = span(e1) with an A_1-invariant line.
    auto diag = make_scf({g("0"), g("1")}, {e11, e22});
    CHECK_FALSE(check_star_conditions(diag).all());
    CHECK(check_star_conditions(make_scf({g("0"), g("1")}, {e12 + e11, e21})).all());
    // A single residue: the conditions reduce to invertibility.
    CHECK(check_star_conditions(make_scf({g("0")}, {Matrix{{2}}})).all());
    CHECK_FALSE(check_star_conditions(make_scf({g("0")}, {Matrix{{0}}})).all());
}

TEST_CASE("simultaneous conjugacy decided exactly")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 4;
        auto t = random_irreducible_scf(rng, n, 2 + trial % 2);
        Matrix p = invertible(rng, n);
        std::vector<Matrix> conj;
        for (const auto& a : t.matrices)
            conj.push_back(conjugate(a, p));
        CHECK(tuples_equivalent(t.matrices, conj));
        conj[0] = conj[0].shifted(g("1"));
        CHECK_FALSE(tuples_equivalent(t.matrices, conj));
    }
    // Reducible but equivalent: two non-semisimple triangular pairs.
    std::vector<Matrix> a{Matrix{{1, 1}, {0, 1}}, Matrix{{0, 0}, {0, 2}}};
    std::vector<Matrix> b{Matrix{{1, 0}, {0, 1}}, Matrix{{0, 0}, {0, 2}}};
    CHECK_FALSE(tuples_equivalent(a, b));
    Matrix q{{2, 0}, {0, 1}};
    std::vector<Matrix> c{conjugate(a[0], q), conjugate(a[1], q)};
    CHECK(tuples_equivalent(a, c));
    CHECK_FALSE(is_equivalent(make_scf({g("0"), g("1")}, a), make_scf({g("0"), g("2")}, c)));
}

TEST_CASE("index of rigidity")
{
    auto hyper = rigid_family_tuple(2);
    CHECK(index_of_rigidity(hyper) == 2);
    CHECK(format_spectral_type(spectral_type(*hyper.scheme)) == "11,11,11");
    CHECK(is_irreducible(hyper));
    auto d4 = d4_basic_tuple();
    CHECK(index_of_rigidity(d4) == 0);
    CHECK(format_spectral_type(spectral_type(*d4.scheme)) == "11,11,11,11");
    for (std::size_t n = 1; n <= 5; ++n) {
        auto t = rigid_family_tuple(n);
        CHECK(t.rank() == n);
        CHECK(index_of_rigidity(t) == 2);
        CHECK(verify_scheme(t, *t.scheme));
    }
}

TEST_CASE("infer_scheme agrees with a transported scheme")
{
    auto t = rigid_family_tuple(3);
    RiemannScheme inferred = infer_scheme(t);
    CHECK(inferred == *t.scheme);
}
