#include "fuchs/construct.hpp"

#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"

#include <algorithm>

namespace fuchs {

long Rng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Gaussian Rng::nonzero_rational(long num_bound, long den_bound)
{
    long k = 0;
    while (k == 0)
        k = uniform(-num_bound, num_bound);
    return Gaussian::ratio(k, uniform(1, den_bound));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.uniform(lo, hi);
    return m;
}

namespace {

std::vector<Gaussian> default_poles(std::size_t p)
{
    std::vector<Gaussian> poles;
    for (std::size_t j = 0; j < p; ++j)
        poles.emplace_back(static_cast<long>(j + 1));
    return poles;
}

constexpr int max_attempts = 10000;

} // namespace

SchlesingerTuple random_irreducible_scf(Rng& rng, std::size_t n, std::size_t p, long lo, long hi)
{
    if (p == 0 || (p == 1 && n > 1))
        throw Error(ErrorKind::InvalidArgument, "no irreducible tuple of that shape");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SchlesingerTuple t{default_poles(p), {}, std::nullopt};
        for (std::size_t j = 0; j < p; ++j)
            t.matrices.push_back(random_matrix(rng, n, n, lo, hi));
        if (is_irreducible(t) && check_star_conditions(t).all())
            return t;
    }
    throw Error(ErrorKind::Internal, "random search for an irreducible tuple gave up");
}

OkuboSystem random_onf(Rng& rng, const std::vector<std::size_t>& blocks, long lo, long hi)
{
    std::size_t n = 0;
    for (auto b : blocks)
        n += b;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        OkuboSystem o{blocks, default_poles(blocks.size()), random_matrix(rng, n, n, lo, hi), std::nullopt};
        if (check_onf_conditions(o) && is_irreducible(scf_from_onf(o)))
            return o;
    }
    throw Error(ErrorKind::Internal, "random search for an Okubo system gave up");
}

OkuboSystem rank_one_onf(const Gaussian& lambda, const Gaussian& t1)
{
    RiemannScheme s{{t1}, {{{-lambda, 1}}, {{lambda, 1}}}};
    return make_onf({1}, {t1}, Matrix{{lambda}}, s);
}

namespace {

SchlesingerTuple rank_one_tuple(std::vector<Gaussian> poles, const std::vector<Gaussian>& values)
{
    Gaussian total;
    RiemannScheme s{poles, {Column{}}};
    std::vector<Matrix> mats;
    for (const auto& v : values) {
        mats.push_back(Matrix{{v}});
        s.columns.push_back({{v, 1}});
        total += v;
    }
    s.columns[0].push_back({-total, 1});
    return make_scf(std::move(poles), std::move(mats), std::move(s));
}

} // namespace

SchlesingerTuple random_scheme_tuple(Rng& rng, std::size_t p, std::size_t max_rank)
{
    if (p < 2 || max_rank < 2)
        throw Error(ErrorKind::InvalidArgument, "need at least two poles and rank bound 2");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Gaussian> values;
        for (std::size_t j = 0; j < p; ++j)
            values.push_back(rng.nonzero_rational(9, 4));
        SchlesingerTuple t = rank_one_tuple(default_poles(p), values);
        for (int step = 0; step < 6 && t.rank() < max_rank; ++step) {
            // Either shift a pole so that one of its eigenvalues becomes 0 or
            // move it off 0 by a random amount.
            std::vector<Gaussian> mu;
            for (std::size_t j = 0; j < p; ++j) {
                const Column& c = t.scheme->columns[j + 1];
                if (rng.uniform(0, 2) == 0)
                    mu.push_back(-*c[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c.size()) - 1))].label);
                else
                    mu.push_back(rng.nonzero_rational(9, 4));
            }
            SchlesingerTuple shifted = addition(t, mu);
            if (!shifted.scheme)
                break;
            const Gaussian lambda = rng.nonzero_rational(9, 7);
            int d = 0;
            try {
                d = predicted_rank_drop(*shifted.scheme, lambda);
            } catch (const Error&) {
                break;
            }
            const long next = static_cast<long>(t.rank()) - d;
            if (next <= static_cast<long>(t.rank()) || next > static_cast<long>(max_rank))
                continue;
            SchlesingerTuple grown = middle_convolution(shifted, lambda);
            if (!grown.scheme || grown.rank() != static_cast<std::size_t>(next))
                break;
            t = std::move(grown);
        }
        if (t.rank() >= 2 && t.scheme && is_irreducible(t))
            return t;
    }
    throw Error(ErrorKind::Internal, "random search for a scheme-carrying tuple gave up");
}

SchlesingerTuple rigid_family_tuple(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "rank must be positive");
    const std::vector<Gaussian> poles{Gaussian(0), Gaussian(1)};
    SchlesingerTuple t = rank_one_tuple(poles, {Gaussian::ratio(1, 2), Gaussian::ratio(1, 3, 1, 5)});
    static const long primes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (std::size_t k = 1; k < n; ++k) {
        const long q = primes[(2 * k) % 12];
        const long r = primes[(2 * k + 1) % 12];
        if (k > 1) {
            const Gaussian c = Gaussian(-static_cast<long>(k)) + Gaussian::ratio(1, q);
            const std::vector<Gaussian> mu{c, Gaussian(0)};
            t = addition(t, mu);
        }
        const Gaussian lambda = Gaussian(static_cast<long>(k)) + Gaussian::ratio(1, r, 1, q * r);
        t = middle_convolution(t, lambda);
        if (t.rank() != k + 1 || !t.scheme)
            throw Error(ErrorKind::Internal, "rigid family step lost its scheme or rank");
    }
    if (!is_irreducible(t))
        throw Error(ErrorKind::Internal, "rigid family tuple is reducible");
    return t;
}

namespace {

std::vector<Matrix> small_vectors()
{
    std::vector<Matrix> out;
    for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= 2; ++b)
            if (a != 0 || b != 0)
                out.push_back(Matrix{{a}, {b}});
    return out;
}

bool distinct_rational_eigenvalues(const Matrix& a)
{
    try {
        Column c = infer_column(a);
        return c.size() == 2;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

SchlesingerTuple d4_basic_tuple()
{
    const auto vecs = small_vectors();
    std::vector<Matrix> residues;
    for (const auto& u : vecs)
        for (const auto& v : vecs) {
            Matrix m = u * v.transpose();
            if (!trace(m).is_zero())
                residues.push_back(std::move(m));
        }
    const std::size_t r = residues.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) {
                std::vector<Matrix> mats{residues[i], residues[j], residues[k]};
                if (!distinct_rational_eigenvalues(residue_at_infinity(mats, 2)))
                    continue;
                if (!is_irreducible(mats, 2) || index_of_rigidity(mats, 2) != 0)
                    continue;
                SchlesingerTuple t{{Gaussian(1), Gaussian(2), Gaussian(3)}, std::move(mats), std::nullopt};
                t.scheme = infer_scheme(t);
                return t;
            }
    throw Error(ErrorKind::Internal, "no D4 tuple among the small rank-1 residues");
}

} // namespace fuchs
