#include "fuchs/okubo.hpp"

#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"

#include <algorithm>
#include <numeric>

namespace fuchs {

std::size_t OkuboSystem::offset(std::size_t j) const
{
    return std::accumulate(blocks.begin(), blocks.begin() + static_cast<long>(j), std::size_t{0});
}

Matrix OkuboSystem::block(std::size_t i, std::size_t j) const
{
    return a.block(offset(i), offset(j), blocks[i], blocks[j]);
}

OkuboSystem make_onf(std::vector<std::size_t> blocks, std::vector<Gaussian> poles, Matrix a,
                     std::optional<RiemannScheme> scheme)
{
    if (blocks.empty())
        throw Error(ErrorKind::InvalidArgument, "an Okubo system needs at least one block");
    if (blocks.size() != poles.size())
        throw Error(ErrorKind::LengthMismatch, "number of blocks and poles differ");
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "Okubo coefficient matrix is not square");
    if (std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}) != a.rows())
        throw Error(ErrorKind::SizeMismatch, "block sizes do not add up to the matrix size");
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j])
                throw Error(ErrorKind::DuplicatePole, "pole " + poles[i].str() + " repeated");
    OkuboSystem o{std::move(blocks), std::move(poles), std::move(a), std::nullopt};
    if (scheme) {
        canonicalize(*scheme);
        if (!verify_scheme(scf_from_onf(o), *scheme))
            throw Error(ErrorKind::InvalidArgument, "declared scheme does not match the system");
        o.scheme = std::move(scheme);
    }
    return o;
}

SchlesingerTuple scf_from_onf(const OkuboSystem& o)
{
    const std::size_t n = o.rank();
    SchlesingerTuple t{o.poles, {}, o.scheme};
    std::size_t off = 0;
    for (std::size_t j = 0; j < o.p(); ++j) {
        Matrix aj(n, n);
        aj.set_block(off, 0, o.a.block(off, 0, o.blocks[j], n));
        t.matrices.push_back(std::move(aj));
        off += o.blocks[j];
    }
    return t;
}

void attach_scheme_if_valid(OkuboSystem& o, std::optional<RiemannScheme> s)
{
    o.scheme.reset();
    if (!s || s->columns.size() != o.p() + 1)
        return;
    SchlesingerTuple t = scf_from_onf(o);
    attach_scheme_if_valid(t, std::move(s));
    o.scheme = std::move(t.scheme);
}

namespace {

// Concatenated image bases, or nullopt when they do not form a basis of C^n.
std::optional<std::pair<Matrix, std::vector<std::size_t>>> okubo_frame(const SchlesingerTuple& t)
{
    const std::size_t n = t.rank();
    Matrix g(n, 0);
    std::vector<std::size_t> blocks;
    for (const auto& a : t.matrices) {
        Matrix b = reduced_image_basis(a);
        blocks.push_back(b.cols());
        g = hstack(g, b);
    }
    if (g.cols() != n || rank(g) != n)
        return std::nullopt;
    return std::make_pair(std::move(g), std::move(blocks));
}

} // namespace

bool okubo_convertible(const SchlesingerTuple& t) { return okubo_frame(t).has_value(); }

OkuboSystem onf_from_scf(const SchlesingerTuple& t)
{
    auto frame = okubo_frame(t);
    if (!frame)
        throw Error(ErrorKind::NotOkuboConvertible,
                    "ranks of the residues do not add up to n with images spanning C^n "
                    "(for mc_lambda output: lambda is an eigenvalue of A_0)");
    auto& [g, blocks] = *frame;
    const std::size_t n = t.rank();
    Matrix g_inv = *inverse(g);
    OkuboSystem o{blocks, t.poles, Matrix(n, n), std::nullopt};
    std::size_t off = 0;
    for (std::size_t j = 0; j < t.p(); ++j) {
        Matrix aj = g_inv * t.matrices[j] * g;
        for (std::size_t r = 0; r < n; ++r) {
            const bool inside = r >= off && r < off + blocks[j];
            for (std::size_t c = 0; c < n; ++c) {
                if (inside)
                    o.a(r, c) = aj(r, c);
                else if (!aj(r, c).is_zero())
                    throw Error(ErrorKind::Internal, "conjugated residue leaves its block row");
            }
        }
        off += blocks[j];
    }
    attach_scheme_if_valid(o, t.scheme);
    return o;
}

namespace {

bool block_side_ok(const OkuboSystem& o, bool transposed)
{
    const std::size_t p = o.p();
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t ni = o.blocks[i];
        if (ni == 0)
            continue;
        Matrix stacked(0, ni);
        for (std::size_t v = 0; v < p; ++v) {
            if (v == i || o.blocks[v] == 0)
                continue;
            stacked = vstack(stacked, transposed ? o.block(i, v).transpose() : o.block(v, i));
        }
        Matrix w = stacked.rows() == 0 ? Matrix::identity(ni) : kernel_basis(stacked);
        Matrix aii = transposed ? o.block(i, i).transpose() : o.block(i, i);
        if (w.cols() > 0 && largest_invariant_subspace(aii, w).cols() > 0)
            return false;
    }
    return true;
}

} // namespace

bool check_onf_conditions(const OkuboSystem& o)
{
    if (rank(o.a) != o.rank())
        return false;
    // A block of size 0 is an apparent singularity and imposes nothing; with
    // a single genuine pole only the rank condition is meaningful.
    std::size_t nonempty = 0;
    for (auto b : o.blocks)
        nonempty += b > 0 ? 1 : 0;
    if (nonempty <= 1)
        return true;
    return block_side_ok(o, false) && block_side_ok(o, true);
}

OkuboSystem mc_via_images(const SchlesingerTuple& t, const Gaussian& lambda)
{
    if (lambda.is_zero())
        throw Error(ErrorKind::InvalidArgument, "the image realization of mc needs lambda != 0");
    const std::size_t n = t.rank();
    Matrix total(n, n);
    for (const auto& a : t.matrices)
        total += a;
    if (rank(total.shifted(lambda)) != n)
        throw Error(ErrorKind::EigenvalueCollision,
                    "-" + lambda.str() + " is an eigenvalue of A_1 + ... + A_p");
    if (!check_star_conditions(t).all())
        throw Error(ErrorKind::ConditionsFail, "rank and star conditions fail");

    std::vector<Matrix> bases;
    std::vector<std::size_t> blocks;
    for (const auto& a : t.matrices) {
        bases.push_back(reduced_image_basis(a));
        blocks.push_back(bases.back().cols());
    }
    const std::size_t m = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    OkuboSystem o{blocks, t.poles, Matrix(m, m), std::nullopt};
    std::size_t row = 0;
    for (std::size_t j = 0; j < t.p(); ++j) {
        std::size_t col = 0;
        for (std::size_t v = 0; v < t.p(); ++v) {
            Matrix blk = solve_in_basis(bases[j], t.matrices[j] * bases[v]);
            if (v == j)
                blk = blk.shifted(lambda);
            o.a.set_block(row, col, blk);
            col += blocks[v];
        }
        row += blocks[j];
    }
    if (t.scheme) {
        try {
            attach_scheme_if_valid(o, predicted_scheme(*t.scheme, lambda));
        } catch (const Error&) {
        }
    }
    return o;
}

OkuboSystem mc_via_images(const OkuboSystem& o, const Gaussian& lambda)
{
    if (!lambda.is_zero() && rank(o.a.shifted(lambda)) == o.rank() && !check_onf_conditions(o))
        throw Error(ErrorKind::ConditionsFail, "rank and block conditions fail");
    return mc_via_images(scf_from_onf(o), lambda);
}

OkuboSystem euler_transform(const OkuboSystem& o, const Gaussian& lambda)
{
    if (rank(o.a.shifted(lambda)) != o.rank())
        throw Error(ErrorKind::EigenvalueCollision, "-" + lambda.str() + " is an eigenvalue of A");
    if (!check_onf_conditions(o))
        throw Error(ErrorKind::ConditionsFail, "rank and block conditions fail");
    OkuboSystem out{o.blocks, o.poles, o.a.shifted(lambda), std::nullopt};
    if (o.scheme) {
        try {
            attach_scheme_if_valid(out, predicted_scheme(*o.scheme, lambda));
        } catch (const Error&) {
        }
    }
    return out;
}

Gaussian pick_generic(std::span<const Gaussian> forbidden)
{
    for (long k = 1;; ++k) {
        Gaussian c(k);
        if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end())
            return c;
    }
}

} // namespace fuchs
