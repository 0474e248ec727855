#include "doctest.h"

#include "fuchs/error.hpp"
#include "fuchs/kernels.hpp"
#include "fuchs/linalg.hpp"

#include <random>

using namespace fuchs;

namespace {

Gaussian g(const char* s) { return Gaussian::parse(s); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 3)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Gaussian(Rational(d(rng)), Rational(d(rng) % 2));
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n)
{
    for (;;) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n)
            return m;
    }
}

Matrix e(std::size_t n, std::size_t i, std::size_t j)
{
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

} // namespace

TEST_CASE("scalar grammar round trips")
{
    for (const char* s : {"3", "-1/2", "1/2+3i", "-i", "i", "2i", "1/2-i", "0", "-3/4-5/7i"})
        CHECK(g(s).str() == s);
    CHECK(g(" 4/2 ").str() == "2");
    CHECK(g("0+1i") == Gaussian::imag_unit());
    CHECK_THROWS_AS(g("1/0"), Error);
    CHECK_THROWS_AS(g("abc"), Error);
    CHECK_THROWS_AS(g(""), Error);
    CHECK_THROWS_AS(g("1+-2i"), Error);
}

TEST_CASE("arithmetic is exact")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 200; ++t) {
        Gaussian a = Gaussian::ratio(d(rng), 1 + std::abs(d(rng)), d(rng), 1 + std::abs(d(rng)));
        Gaussian b = Gaussian::ratio(d(rng), 1 + std::abs(d(rng)), d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
    }
    CHECK_THROWS_AS(Gaussian(1) / Gaussian(0), Error);
}

TEST_CASE("exact square roots")
{
    CHECK(*exact_sqrt(g("9/4")) == g("3/2"));
    CHECK(*exact_sqrt(g("-4")) == g("2i"));
    CHECK(*exact_sqrt(g("2i")) == g("1+i"));
    CHECK(!exact_sqrt(g("2")));
    auto r = exact_sqrt(g("-5+12i"));
    REQUIRE(r);
    CHECK(*r * *r == g("-5+12i"));
}

TEST_CASE("rref")
{
    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto r = rref(Matrix{{1, 2}, {2, 4}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto z = rref(Matrix(2, 2));
    CHECK(z.reduced == Matrix(2, 2));
    CHECK(z.pivots.empty());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(rng, 4, 5);
        auto once = rref(m);
        CHECK(rref(once.reduced).reduced == once.reduced);
    }
}

TEST_CASE("rank")
{
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix{{1, g("i")}, {g("i"), -1}}) == 1);
    CHECK(rank(Matrix(3, 2)) == 0);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(rng, 3, 5) * random_matrix(rng, 5, 4);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(m.cols() == rank(m) + kernel_basis(m).cols());
    }
}

TEST_CASE("kernel and image bases")
{
    CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
    CHECK(kernel_basis(Matrix(3, 3)) == Matrix::identity(3));
    CHECK(kernel_basis(Matrix{{1, 2}}) == Matrix{{-2}, {1}});
    CHECK(image_basis(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(image_basis(Matrix(2, 2)).cols() == 0);
    CHECK(image_basis(Matrix{{1, 1}, {1, 1}}) == Matrix{{1}, {1}});
}

TEST_CASE("commutant dimension")
{
    CHECK(commutant_dim(Matrix::scalar(3, g("2+i"))) == 9);
    Matrix l211{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}};
    CHECK(commutant_dim(l211) == 6);
    Matrix nil(4, 4);
    for (std::size_t i = 0; i + 1 < 4; ++i)
        nil(i, i + 1) = 1;
    CHECK(commutant_dim(nil) == 4);
    CHECK_THROWS_AS(commutant_dim(Matrix(2, 3)), Error);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Matrix gm = random_invertible(rng, 3);
        Matrix m = random_matrix(rng, 3, 3);
        CHECK(commutant_dim(gm * m * *inverse(gm)) == commutant_dim(m));
    }
}

TEST_CASE("generated algebra dimension")
{
    CHECK(generated_algebra_dim({}, 3) == 1);
    std::vector<Matrix> d{Matrix{{1, 0}, {0, 2}}};
    CHECK(generated_algebra_dim(d, 2) == 2);
    std::vector<Matrix> nil{e(2, 0, 1), e(2, 1, 0)};
    CHECK(generated_algebra_dim(nil, 2) == 4);
    CHECK_THROWS_AS(generated_algebra_dim(nil, 3), Error);

    std::mt19937_64 rng(9);
    std::vector<Matrix> tri{Matrix{{1, 1, 0}, {0, 2, 1}, {0, 0, 3}}, Matrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}};
    std::size_t base = generated_algebra_dim(tri, 3);
    CHECK(base == 6);
    Matrix gm = random_invertible(rng, 3);
    Matrix gi = *inverse(gm);
    std::vector<Matrix> conj{gm * tri[0] * gi, gm * tri[1] * gi};
    CHECK(generated_algebra_dim(conj, 3) == base);
}

TEST_CASE("intertwiner spaces")
{
    std::vector<Matrix> id{Matrix::identity(2)};
    CHECK(solve_sylvester_space(id, id).size() == 4);

    std::vector<Matrix> a{Matrix{{1, 0}, {0, 2}}};
    std::vector<Matrix> b{Matrix{{2, 0}, {0, 1}}};
    auto sols = solve_sylvester_space(a, b);
    REQUIRE(sols.size() == 2);
    for (const auto& s : sols) {
        CHECK(s(0, 0).is_zero());
        CHECK(s(1, 1).is_zero());
        CHECK(s * a[0] == b[0] * s);
    }
    std::vector<Matrix> c{Matrix{{3, 0}, {0, 4}}};
    CHECK(solve_sylvester_space(a, c).empty());
    CHECK_THROWS_AS(solve_sylvester_space(a, std::vector<Matrix>{}), Error);
}

TEST_CASE("inverse, determinant and subspaces")
{
    Matrix m{{2, 1}, {g("i"), 1}};
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK(determinant(m) == g("2-i"));
    CHECK(!inverse(Matrix{{1, 2}, {2, 4}}));
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}).is_zero());

    Matrix u{{1, 0}, {0, 1}, {0, 0}};
    Matrix w{{0}, {1}, {1}};
    CHECK(subspace_intersection(u, w).cols() == 0);
    CHECK(subspace_sum(u, w).cols() == 3);
    Matrix w2{{1}, {1}, {0}};
    CHECK(subspace_intersection(u, w2).cols() == 1);

    Matrix a{{0, 1, 0}, {0, 0, 0}, {0, 0, 5}};
    CHECK(largest_invariant_subspace(a, Matrix{{0}, {1}, {0}}).cols() == 0);
    CHECK(largest_invariant_subspace(a, u).cols() == 2);
    CHECK(largest_invariant_subspace(a, Matrix{{0, 0}, {1, 0}, {0, 1}}).cols() == 1);
    CHECK(largest_invariant_subspace(a, Matrix::identity(3)).cols() == 3);

    Matrix basis{{1, 0}, {1, 1}, {0, 1}};
    CHECK(solve_in_basis(basis, Matrix{{2}, {5}, {3}}) == Matrix{{2}, {3}});
    CHECK_THROWS_AS(solve_in_basis(basis, Matrix{{1}, {0}, {1}}), Error);

    CHECK(complement_basis(Matrix{{1}, {1}, {0}}) == Matrix{{1, 0}, {0, 0}, {0, 1}});
}

TEST_CASE("serial and parallel kernels agree")
{
    std::mt19937_64 rng(21);
    for (std::size_t n : {3u, 12u, 40u}) {
        Matrix a = random_matrix(rng, n, n + 2);
        Matrix b = random_matrix(rng, n + 2, n);
        CHECK(kernels::serial::multiply(a, b) == kernels::omp::multiply(a, b));
        Matrix s = a, p = a;
        CHECK(kernels::serial::rref_inplace(s) == kernels::omp::rref_inplace(p));
        CHECK(s == p);
    }
}
