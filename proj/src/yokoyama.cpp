#include "fuchs/yokoyama.hpp"

#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"

#include <algorithm>
#include <numeric>

namespace fuchs {

namespace {

Matrix quadratic_product(const Matrix& a, const Gaussian& r1, const Gaussian& r2)
{
    return a.shifted(-r1) * a.shifted(-r2);
}

std::size_t find_pole(std::span<const Gaussian> poles, const Gaussian& t)
{
    return static_cast<std::size_t>(std::find(poles.begin(), poles.end(), t) - poles.begin());
}

void rename_pole(OkuboSystem& o, std::size_t j, const Gaussian& t)
{
    o.poles[j] = t;
    if (o.scheme)
        o.scheme->poles[j] = t;
}

template <class F>
std::optional<RiemannScheme> try_scheme(F&& f)
{
    try {
        return f();
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

OkuboSystem extend_direct(const OkuboSystem& o, const ExtensionParams& params, bool allow_degenerate)
{
    if (params.rho1.is_zero() || params.rho2.is_zero())
        throw Error(ErrorKind::ZeroRho, "extension needs rho1 * rho2 != 0");
    if (find_pole(o.poles, params.t_new) != o.poles.size())
        throw Error(ErrorKind::DuplicatePole, "pole " + params.t_new.str() + " already present");
    if (!check_onf_conditions(o))
        throw Error(ErrorKind::ConditionsFail, "rank and block conditions fail");

    const std::size_t n = o.rank();
    const Matrix prod = quadratic_product(o.a, params.rho1, params.rho2);
    const Matrix b = image_basis(prod);
    const std::size_t k = b.cols();
    if (k == 0 && !allow_degenerate)
        throw Error(ErrorKind::DegenerateExtension,
                    "(A - rho1)(A - rho2) = 0, so the new pole would carry an empty block");

    // The lower half of the extended space is IM(A - rho1)(A - rho2), written
    // in the pivot columns of that product.
    Matrix hat(n + k, n + k);
    hat.set_block(0, 0, o.a);
    hat.set_block(0, n, b);
    if (k > 0) {
        hat.set_block(n, 0, -solve_in_basis(b, prod));
        Matrix lower = -o.a.shifted(-(params.rho1 + params.rho2));
        hat.set_block(n, n, solve_in_basis(b, lower * b));
    }

    OkuboSystem out{o.blocks, o.poles, std::move(hat), std::nullopt};
    out.blocks.push_back(k);
    out.poles.push_back(params.t_new);
    if (o.scheme)
        attach_scheme_if_valid(out, try_scheme([&] {
                                   return scheme_of_extension(*o.scheme, params.rho1, params.rho2, params.t_new);
                               }));
    return out;
}

SchlesingerTuple extend_composite(const OkuboSystem& o, const ExtensionParams& params)
{
    if (params.rho1.is_zero() || params.rho2.is_zero())
        throw Error(ErrorKind::ZeroRho, "extension needs rho1 * rho2 != 0");
    if (!check_onf_conditions(o))
        throw Error(ErrorKind::ConditionsFail, "rank and block conditions fail");
    SchlesingerTuple t = middle_convolution(scf_from_onf(o), -params.rho1);
    t = append_infinity_pole(t, params.t_new);
    std::vector<Gaussian> mu(t.p());
    mu.back() = params.rho2 - params.rho1;
    t = addition(t, mu);
    return middle_convolution(t, params.rho1);
}

OkuboSystem permute_blocks(const OkuboSystem& o, std::span<const std::size_t> sigma)
{
    const std::size_t p = o.p();
    std::vector<bool> seen(p, false);
    if (sigma.size() != p)
        throw Error(ErrorKind::NotAPermutation, "permutation has the wrong length");
    for (auto s : sigma) {
        if (s >= p || seen[s])
            throw Error(ErrorKind::NotAPermutation, "not a permutation of the blocks");
        seen[s] = true;
    }
    std::vector<std::size_t> rows;
    OkuboSystem out{{}, {}, Matrix(), std::nullopt};
    for (auto s : sigma) {
        out.blocks.push_back(o.blocks[s]);
        out.poles.push_back(o.poles[s]);
        const std::size_t off = o.offset(s);
        for (std::size_t r = 0; r < o.blocks[s]; ++r)
            rows.push_back(off + r);
    }
    out.a = o.a.select_rows(rows).select_columns(rows);
    if (o.scheme) {
        RiemannScheme s{out.poles, {o.scheme->columns[0]}};
        for (auto k : sigma)
            s.columns.push_back(o.scheme->columns[k + 1]);
        out.scheme = std::move(s);
    }
    return out;
}

std::optional<std::pair<Gaussian, Gaussian>> quadratic_relation(const Matrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0 || !a.is_square())
        return std::nullopt;
    // Solve a^2 = s a - q I for (s, q).
    const Matrix sq = a * a;
    Matrix sys(n * n, 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys(i * n + j, 0) = a(i, j);
            sys(i * n + j, 1) = i == j ? Gaussian(-1) : Gaussian(0);
            sys(i * n + j, 2) = sq(i, j);
        }
    if (rank(sys.block(0, 0, n * n, 2)) != 2 || rank(sys) != 2)
        return std::nullopt;
    Matrix coeff = solve_in_basis(sys.block(0, 0, n * n, 2), sys.block(0, 2, n * n, 1));
    const Gaussian s = coeff(0, 0);
    const Gaussian q = coeff(1, 0);
    auto root = exact_sqrt(s * s - Gaussian(4) * q);
    if (!root)
        return std::nullopt;
    const Gaussian half = Gaussian::ratio(1, 2);
    return std::make_pair((s + *root) * half, (s - *root) * half);
}

namespace {

std::vector<std::size_t> move_to_end(std::size_t p, std::size_t j)
{
    std::vector<std::size_t> sigma(p);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::swap(sigma[j], sigma[p - 1]);
    return sigma;
}

// The Katz pipeline for removing the last pole.
SchlesingerTuple restrict_last_composite(const OkuboSystem& o, const Gaussian& mu1, const Gaussian& mu2)
{
    SchlesingerTuple t = middle_convolution(scf_from_onf(o), -mu1);
    std::vector<Gaussian> shift(t.p());
    shift.back() = mu1 - mu2;
    t = addition(t, shift);
    t = swap_with_infinity(t, t.p() - 1);
    return middle_convolution(t, mu1);
}

void check_restriction_index(const OkuboSystem& o, std::size_t j)
{
    if (o.p() < 2)
        throw Error(ErrorKind::InvalidArgument, "restriction needs at least two poles");
    if (j >= o.p())
        throw Error(ErrorKind::IndexOutOfRange, "pole index " + std::to_string(j + 1) + " out of range");
}

} // namespace

SchlesingerTuple restrict_composite(const OkuboSystem& o, const RestrictionParams& params)
{
    check_restriction_index(o, params.j);
    const auto sigma = move_to_end(o.p(), params.j);
    return restrict_last_composite(permute_blocks(o, sigma), params.mu1, params.mu2);
}

OkuboSystem restrict(const OkuboSystem& o, const RestrictionParams& params, bool cross_check)
{
    check_restriction_index(o, params.j);
    if (!quadratic_product(o.a, params.mu1, params.mu2).is_zero())
        throw Error(ErrorKind::NotQ2, "(A - " + params.mu1.str() + ")(A - " + params.mu2.str() + ") != 0");
    if (!is_irreducible(scf_from_onf(o)))
        throw Error(ErrorKind::NotIrreducible, "restriction needs a linearly irreducible system");

    const std::size_t p = o.p();
    const OkuboSystem moved = permute_blocks(o, move_to_end(p, params.j));
    const std::size_t np = moved.blocks.back();
    const std::size_t m = moved.rank() - np;
    const Gaussian mu_sum = params.mu1 + params.mu2;
    if (rank(moved.block(p - 1, p - 1).shifted(-mu_sum)) != np)
        throw Error(ErrorKind::CRViolated,
                    mu_sum.str() + " = mu1 + mu2 is an eigenvalue of the block being removed");

    OkuboSystem out{std::vector<std::size_t>(moved.blocks.begin(), moved.blocks.end() - 1),
                    std::vector<Gaussian>(moved.poles.begin(), moved.poles.end() - 1), moved.a.block(0, 0, m, m),
                    std::nullopt};
    if (moved.scheme)
        attach_scheme_if_valid(out, try_scheme([&] {
                                   return scheme_of_restriction(*moved.scheme, params.mu1, params.mu2);
                               }));

    if (cross_check) {
        SchlesingerTuple katz = restrict_last_composite(moved, params.mu1, params.mu2);
        SchlesingerTuple mine = scf_from_onf(out);
        mine.matrices.push_back(Matrix(m, m));
        if (katz.rank() != m || !tuples_equivalent(katz.matrices, mine.matrices))
            throw Error(ErrorKind::Internal, "block deletion disagrees with the convolution pipeline");
    }
    return out;
}

namespace {

bool is_non_generic(ErrorKind k)
{
    switch (k) {
    case ErrorKind::EigenvalueCollision:
    case ErrorKind::CRViolated:
    case ErrorKind::ZeroRho:
    case ErrorKind::NotOkuboConvertible:
    case ErrorKind::ConditionsFail:
        return true;
    default:
        return false;
    }
}

// rank of (A - r1)(A - r2) plus n minus rank A_j.
std::size_t ord_after_re(const OkuboSystem& o, std::size_t j, const Gaussian& r1, const Gaussian& r2)
{
    return o.rank() + rank(quadratic_product(o.a, r1, r2)) - rank(scf_from_onf(o).matrices[j]);
}

// R_j . E_eps . E_{r1,r2} on the Okubo side, with the pole t_j restored.
OkuboSystem re_yokoyama(const OkuboSystem& o, std::size_t j, const Gaussian& r1, const Gaussian& r2,
                        const Gaussian& eps, std::vector<OkuboSystem>& stages)
{
    const Gaussian t_new = pick_generic(o.poles);
    OkuboSystem ext = extend_direct(o, {r1, r2, t_new}, true);
    stages.push_back(ext);
    OkuboSystem shifted = euler_transform(ext, eps);
    stages.push_back(shifted);
    OkuboSystem out = restrict(shifted, {r1 + eps, r2 + eps, j});
    rename_pole(out, j, o.poles[j]);
    stages.push_back(out);
    return out;
}

template <class Attempt>
CompositeSides search_epsilon(std::optional<Gaussian> epsilon, Attempt&& attempt)
{
    auto run = [&](const Gaussian& eps) -> std::optional<CompositeSides> {
        try {
            CompositeSides sides = attempt(eps);
            if (sides.katz.rank() != sides.yokoyama.rank() || !okubo_convertible(sides.katz))
                return std::nullopt;
            return sides;
        } catch (const Error& e) {
            if (is_non_generic(e.kind()))
                return std::nullopt;
            throw;
        }
    };
    if (epsilon) {
        if (auto sides = run(*epsilon))
            return std::move(*sides);
        throw Error(ErrorKind::NotGeneric, "epsilon = " + epsilon->str() + " is not generic for this system");
    }
    for (long k = 1; k <= 64; ++k)
        if (auto sides = run(Gaussian(k)))
            return std::move(*sides);
    throw Error(ErrorKind::NotGeneric, "no generic epsilon among 1..64");
}

void check_composite_input(const OkuboSystem& o, std::size_t j, const Gaussian& r1, const Gaussian& r2)
{
    if (j >= o.p())
        throw Error(ErrorKind::IndexOutOfRange, "pole index " + std::to_string(j + 1) + " out of range");
    if (r1.is_zero() || r2.is_zero())
        throw Error(ErrorKind::ZeroRho, "extension needs rho1 * rho2 != 0");
    if (!check_onf_conditions(o))
        throw Error(ErrorKind::ConditionsFail, "rank and block conditions fail");
}

void require_equivalent(const CompositeSides& sides)
{
    if (!tuples_equivalent(scf_from_onf(sides.yokoyama).matrices, sides.katz.matrices))
        throw Error(ErrorKind::Internal, "extension/restriction side disagrees with the convolution side");
}

} // namespace

CompositeSides re_sides(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                        std::optional<Gaussian> epsilon)
{
    check_composite_input(o, j, rho1, rho2);
    SchlesingerTuple prefix = middle_convolution(scf_from_onf(o), -rho1);
    prefix = swap_with_infinity(prefix, j);
    std::vector<Gaussian> mu(o.p());
    mu[j] = rho2 - rho1;
    prefix = addition(prefix, mu);
    const std::size_t predicted = ord_after_re(o, j, rho1, rho2);

    return search_epsilon(epsilon, [&](const Gaussian& eps) {
        if ((rho1 + eps).is_zero())
            throw Error(ErrorKind::ZeroRho, "rho1 + epsilon = 0");
        CompositeSides sides{OkuboSystem{}, SchlesingerTuple{}, eps, predicted, {}};
        sides.yokoyama = re_yokoyama(o, j, rho1, rho2, eps, sides.stages);
        sides.katz = middle_convolution(prefix, rho1 + eps);
        return sides;
    });
}

OkuboSystem re_composite(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                         std::optional<Gaussian> epsilon)
{
    CompositeSides sides = re_sides(o, j, rho1, rho2, epsilon);
    require_equivalent(sides);
    return std::move(sides.yokoyama);
}

CompositeSides rere_sides(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                          const Gaussian& rho3, std::optional<Gaussian> epsilon)
{
    check_composite_input(o, j, rho1, rho2);
    SchlesingerTuple prefix = middle_convolution(scf_from_onf(o), -rho1);
    std::vector<Gaussian> mu(o.p());
    mu[j] = rho1 + rho3;
    prefix = addition(prefix, mu);

    return search_epsilon(epsilon, [&](const Gaussian& eps) {
        if ((rho1 + eps).is_zero())
            throw Error(ErrorKind::ZeroRho, "rho1 + epsilon = 0");
        CompositeSides sides{OkuboSystem{}, SchlesingerTuple{}, eps, 0, {}};
        OkuboSystem first = re_yokoyama(o, j, rho1, rho2, eps, sides.stages);
        const Gaussian s1 = rho1 + eps;
        const Gaussian s2 = rho1 + rho2 + rho3 + eps;
        sides.predicted_rank = ord_after_re(first, j, s1, s2);
        sides.yokoyama = re_yokoyama(first, j, s1, s2, Gaussian(0), sides.stages);
        sides.katz = middle_convolution(prefix, rho1 + eps);
        return sides;
    });
}

OkuboSystem rere_composite(const OkuboSystem& o, std::size_t j, const Gaussian& rho1, const Gaussian& rho2,
                           const Gaussian& rho3, std::optional<Gaussian> epsilon)
{
    CompositeSides sides = rere_sides(o, j, rho1, rho2, rho3, epsilon);
    require_equivalent(sides);
    return std::move(sides.yokoyama);
}

namespace {

void require_labels(const RiemannScheme& s)
{
    for (const auto& c : s.columns)
        for (const auto& part : c)
            if (!part.label)
                throw Error(ErrorKind::SchemeUnavailable, "scheme entries need eigenvalue labels");
}

// Largest part with the given label, skipping index `skip`; c.size() if none.
std::size_t largest_with_label(const Column& c, const Gaussian& label, std::size_t skip)
{
    std::size_t best = c.size();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (k != skip && *c[k].label == label && (best == c.size() || c[k].mult > c[best].mult))
            best = k;
    return best;
}

int mult_at(const Column& c, std::size_t k) { return k < c.size() ? c[k].mult : 0; }

} // namespace

RiemannScheme scheme_of_extension(const RiemannScheme& s, const Gaussian& rho1, const Gaussian& rho2,
                                  std::optional<Gaussian> t_new)
{
    require_labels(s);
    if (s.columns.size() < 2)
        throw Error(ErrorKind::NotONFShape, "scheme has no finite pole");
    const int n = column_total(s.columns[0]);
    for (const auto& c : s.columns)
        if (column_total(c) != n)
            throw Error(ErrorKind::NotONFShape, "columns of the scheme have different totals");

    const std::size_t p = s.columns.size() - 1;
    std::vector<int> block(p);
    int block_total = 0;
    for (std::size_t j = 0; j < p; ++j) {
        const Column& c = s.columns[j + 1];
        block[j] = n - mult_at(c, largest_with_label(c, Gaussian(0), c.size()));
        block_total += block[j];
    }
    if (block_total != n)
        throw Error(ErrorKind::NotONFShape, "the [0] entries at the poles do not describe Okubo blocks");

    const Column& inf = s.columns[0];
    const std::size_t i1 = largest_with_label(inf, -rho1, inf.size());
    const std::size_t i2 = largest_with_label(inf, -rho2, i1);
    for (std::size_t k = 0; k < inf.size(); ++k)
        if (k != i1 && k != i2 && (*inf[k].label == -rho1 || *inf[k].label == -rho2))
            throw Error(ErrorKind::SchemeUnavailable,
                        "non-semisimple data at rho1 or rho2; the extended scheme is not determined");
    const int m1 = mult_at(inf, i1);
    const int m2 = mult_at(inf, i2);
    const int n_hat = 2 * n - m1 - m2;

    RiemannScheme out;
    out.poles = s.poles;
    out.poles.push_back(t_new ? *t_new : pick_generic(s.poles));
    out.columns.push_back({{-rho1, n - m2}, {-rho2, n - m1}});
    for (std::size_t j = 0; j < p; ++j) {
        const Column& c = s.columns[j + 1];
        const std::size_t top = largest_with_label(c, Gaussian(0), c.size());
        Column col{{Gaussian(0), n_hat - block[j]}};
        for (std::size_t k = 0; k < c.size(); ++k)
            if (k != top)
                col.push_back(c[k]);
        out.columns.push_back(std::move(col));
    }
    Column fresh{{Gaussian(0), n}};
    for (std::size_t k = 0; k < inf.size(); ++k)
        if (k != i1 && k != i2)
            fresh.push_back({rho1 + rho2 + *inf[k].label, inf[k].mult});
    out.columns.push_back(std::move(fresh));
    canonicalize(out);
    return out;
}

RiemannScheme scheme_of_restriction(const RiemannScheme& s, const Gaussian& mu1, const Gaussian& mu2)
{
    require_labels(s);
    if (s.columns.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "restriction needs at least two poles");
    const int n = column_total(s.columns[0]);
    const Column& inf = s.columns[0];
    const std::size_t i1 = largest_with_label(inf, -mu1, inf.size());
    const std::size_t i2 = largest_with_label(inf, -mu2, i1);
    for (std::size_t k = 0; k < inf.size(); ++k)
        if (k != i1 && k != i2)
            throw Error(ErrorKind::NotQ2, "the residue at infinity has more than two eigenvalue blocks");

    const Column& last = s.columns.back();
    const std::size_t top = largest_with_label(last, Gaussian(0), last.size());
    const int np = n - mult_at(last, top);
    const int m1 = mult_at(inf, i1) - np;
    const int m2 = mult_at(inf, i2) - np;
    if (m1 < 0 || m2 < 0)
        throw Error(ErrorKind::NotQ2, "multiplicities at infinity are smaller than the removed block");

    RiemannScheme out;
    out.poles.assign(s.poles.begin(), s.poles.end() - 1);
    Column new_inf{{-mu1, m1}, {-mu2, m2}};
    for (std::size_t k = 0; k < last.size(); ++k) {
        if (k == top)
            continue;
        if (*last[k].label == mu1 + mu2)
            throw Error(ErrorKind::CRViolated, "mu1 + mu2 is an eigenvalue at the removed pole");
        new_inf.push_back({*last[k].label - mu1 - mu2, last[k].mult});
    }
    out.columns.push_back(std::move(new_inf));
    for (std::size_t j = 1; j + 1 < s.columns.size(); ++j) {
        Column col = s.columns[j];
        const std::size_t z = largest_with_label(col, Gaussian(0), col.size());
        if (z == col.size()) {
            if (np != 0)
                throw Error(ErrorKind::NegativePart, "a pole has no [0] entry to shrink");
        } else {
            col[z].mult -= np;
            if (col[z].mult < 0)
                throw Error(ErrorKind::NegativePart, "restriction would leave a negative multiplicity");
        }
        out.columns.push_back(std::move(col));
    }
    canonicalize(out);
    return out;
}

RiemannScheme scheme_of_restriction(const RiemannScheme& s)
{
    require_labels(s);
    if (s.columns.empty())
        throw Error(ErrorKind::InvalidArgument, "empty scheme");
    Column inf = s.columns[0];
    std::erase_if(inf, [](const Part& part) { return part.mult == 0; });
    if (inf.size() != 2)
        throw Error(ErrorKind::NotQ2, "the residue at infinity must have exactly two eigenvalue blocks");
    return scheme_of_restriction(s, -*inf[0].label, -*inf[1].label);
}

std::optional<YokoyamaStep> choose_yokoyama_step(const RiemannScheme& s)
{
    require_labels(s);
    Column inf = s.columns.at(0);
    std::erase_if(inf, [](const Part& part) { return part.mult == 0; });
    canonical_sort(inf);
    if (inf.size() < 2)
        return std::nullopt;
    std::optional<YokoyamaStep> best;
    for (std::size_t j = 1; j < s.columns.size(); ++j) {
        const Column& c = s.columns[j];
        const std::size_t top = largest_with_label(c, Gaussian(0), c.size());
        std::size_t second = c.size();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (k != top && c[k].mult > 0 && (second == c.size() || canonical_before(c[k], c[second])))
                second = k;
        if (second == c.size())
            continue;
        const int d = inf[0].mult - mult_at(c, top) + c[second].mult;
        if (d > 0 && (!best || d > best->d))
            best = YokoyamaStep{j - 1, -*inf[0].label, -*inf[1].label, -*c[second].label, d};
    }
    return best;
}

OkuboSystem apply_yokoyama_step(const OkuboSystem& o, const YokoyamaStep& step, std::optional<Gaussian> epsilon)
{
    return rere_composite(o, step.j, step.rho1, step.rho2, step.rho3, epsilon);
}

} // namespace fuchs
