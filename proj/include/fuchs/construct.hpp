#pragma once

#include "fuchs/okubo.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fuchs {

// Seeded source for every generator below, so that runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi);
    // k / d with 1 <= |k| <= num_bound and 1 <= d <= den_bound.
    Gaussian nonzero_rational(long num_bound, long den_bound);

private:
    std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3);

// Integer entries in [lo, hi], resampled until irreducible with the star
// conditions. Poles are 1..p.
SchlesingerTuple random_irreducible_scf(Rng& rng, std::size_t n, std::size_t p, long lo = -3, long hi = 3);

// Integer A resampled until rank n, the block conditions and linear
// irreducibility hold. Poles are 1..p.
OkuboSystem random_onf(Rng& rng, const std::vector<std::size_t>& blocks, long lo = -3, long hi = 3);

// Irreducible tuple with a verified scheme, grown from a rank-1 tuple by
// random additions and middle convolutions; the rank ends in [2, max_rank].
SchlesingerTuple random_scheme_tuple(Rng& rng, std::size_t p, std::size_t max_rank);

// (x - t1) u' = lambda u with its scheme.
OkuboSystem rank_one_onf(const Gaussian& lambda, const Gaussian& t1 = Gaussian(0));

// Irreducible tuple of spectral type 1^n,1^n,(n-1)1 with a verified scheme,
// poles 0 and 1; every step adds a shift at t1 and convolves generically.
SchlesingerTuple rigid_family_tuple(std::size_t n);

// First tuple of rank-1 residues u v^T with small integer entries whose
// spectral type is 11,11,11,11, with distinct rational eigenvalues at
// infinity, irreducible and of index 0.
SchlesingerTuple d4_basic_tuple();

} // namespace fuchs
