#include "fuchs/schlesinger.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

namespace fuchs {

SchlesingerTuple make_scf(std::vector<Gaussian> poles, std::vector<Matrix> matrices,
                          std::optional<RiemannScheme> scheme)
{
    if (matrices.empty())
        throw Error(ErrorKind::InvalidArgument, "a system needs at least one pole");
    if (poles.size() != matrices.size())
        throw Error(ErrorKind::LengthMismatch, "number of poles and residues differ");
    const std::size_t n = matrices.front().rows();
    for (const auto& m : matrices) {
        if (!m.is_square())
            throw Error(ErrorKind::NonSquare, "residue matrix is not square");
        if (m.rows() != n)
            throw Error(ErrorKind::SizeMismatch, "residue matrices of different sizes");
    }
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j])
                throw Error(ErrorKind::DuplicatePole, "pole " + poles[i].str() + " repeated");
    SchlesingerTuple t{std::move(poles), std::move(matrices), std::nullopt};
    if (scheme) {
        canonicalize(*scheme);
        if (!verify_scheme(t, *scheme))
            throw Error(ErrorKind::InvalidArgument, "declared scheme does not match the residues");
        t.scheme = std::move(scheme);
    }
    return t;
}

Matrix residue_at_infinity(std::span<const Matrix> mats, std::size_t n)
{
    Matrix s(n, n);
    for (const auto& m : mats)
        s += m;
    return -s;
}

Matrix residue_at_infinity(const SchlesingerTuple& t) { return residue_at_infinity(t.matrices, t.rank()); }

bool StarConditions::all() const
{
    return std::all_of(star.begin(), star.end(), [](bool b) { return b; }) &&
           std::all_of(starstar.begin(), starstar.end(), [](bool b) { return b; });
}

namespace {

std::vector<bool> star_side(std::span<const Matrix> mats)
{
    const std::size_t p = mats.size();
    std::vector<bool> out(p, true);
    if (p == 0)
        return out;
    const std::size_t n = mats[0].rows();
    if (p == 1) {
        out[0] = rank(mats[0]) == n;
        return out;
    }
    for (std::size_t i = 0; i < p; ++i) {
        Matrix stacked(0, n);
        for (std::size_t v = 0; v < p; ++v)
            if (v != i)
                stacked = vstack(stacked, mats[v]);
        Matrix w = kernel_basis(stacked);
        out[i] = w.cols() == 0 || largest_invariant_subspace(mats[i], w).cols() == 0;
    }
    return out;
}

} // namespace

StarConditions check_star_conditions(std::span<const Matrix> mats)
{
    std::vector<Matrix> transposed;
    for (const auto& m : mats)
        transposed.push_back(m.transpose());
    return {star_side(mats), star_side(transposed)};
}

StarConditions check_star_conditions(const SchlesingerTuple& t) { return check_star_conditions(t.matrices); }

bool is_irreducible(std::span<const Matrix> mats, std::size_t n)
{
    return generated_algebra_dim(mats, n) == n * n;
}

bool is_irreducible(const SchlesingerTuple& t) { return is_irreducible(t.matrices, t.rank()); }

namespace {

Matrix combination(std::span<const Matrix> basis, std::span<const long> coeffs)
{
    Matrix g(basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0)
            g += basis[i] * Gaussian(coeffs[i]);
    return g;
}

} // namespace

bool tuples_equivalent(std::span<const Matrix> a, std::span<const Matrix> b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    const std::size_t n = a[0].rows();
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].rows() != n || b[j].rows() != n)
            return false;
    if (std::equal(a.begin(), a.end(), b.begin()))
        return true;
    if (n == 0)
        return true;

    auto hom = solve_sylvester_space(a, b);
    if (hom.empty())
        return false;
    // Isomorphic modules have Hom(a,b), End(a) and End(b) of equal dimension.
    if (solve_sylvester_space(a, a).size() != hom.size() || solve_sylvester_space(b, b).size() != hom.size())
        return false;

    const std::size_t k = hom.size();
    std::vector<long> c(k);
    // det of a generic combination is a nonzero polynomial of degree n iff
    // some invertible intertwiner exists. A few pseudo-random points settle
    // the common case; the grid {0..n}^k is exhaustive for degree n.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int trial = 0; trial < 6; ++trial) {
        for (auto& x : c) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            x = static_cast<long>((state >> 33) % 201) - 100;
        }
        if (rank(combination(hom, c)) == n)
            return true;
    }
    std::fill(c.begin(), c.end(), 0);
    for (;;) {
        if (rank(combination(hom, c)) == n)
            return true;
        std::size_t pos = 0;
        while (pos < k && c[pos] == static_cast<long>(n)) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == k)
            return false;
        ++c[pos];
    }
}

bool is_equivalent(const SchlesingerTuple& a, const SchlesingerTuple& b)
{
    if (a.p() != b.p() || a.rank() != b.rank() || a.poles != b.poles)
        return false;
    return tuples_equivalent(a.matrices, b.matrices);
}

int index_of_rigidity(std::span<const Matrix> mats, std::size_t n)
{
    const long p = static_cast<long>(mats.size());
    long total = static_cast<long>(commutant_dim(residue_at_infinity(mats, n)));
    for (const auto& m : mats)
        total += static_cast<long>(commutant_dim(m));
    return static_cast<int>(total - (p - 1) * static_cast<long>(n * n));
}

int index_of_rigidity(const SchlesingerTuple& t) { return index_of_rigidity(t.matrices, t.rank()); }

bool matches_conjugacy_class(const Matrix& m, Column parts)
{
    if (!m.is_square())
        throw Error(ErrorKind::NonSquare, "conjugacy class of a non-square matrix");
    std::erase_if(parts, [](const Part& p) { return p.mult == 0; });
    canonical_sort(parts);
    if (column_total(parts) != static_cast<int>(m.rows()))
        throw Error(ErrorKind::PartitionSizeMismatch,
                    "multiplicities sum to " + std::to_string(column_total(parts)) + ", matrix has size " +
                        std::to_string(m.rows()));
    Matrix product = Matrix::identity(m.rows());
    std::size_t expected = 0;
    for (const auto& part : parts) {
        if (!part.label)
            throw Error(ErrorKind::SchemeUnavailable, "conjugacy class needs eigenvalue labels");
        product = product * m.shifted(-*part.label);
        expected += static_cast<std::size_t>(part.mult);
        if (m.rows() - rank(product) != expected)
            return false;
    }
    return true;
}

Matrix build_L(Column parts)
{
    std::erase_if(parts, [](const Part& p) { return p.mult == 0; });
    canonical_sort(parts);
    const std::size_t n = static_cast<std::size_t>(column_total(parts));
    Matrix l(n, n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].label)
            throw Error(ErrorKind::SchemeUnavailable, "normal form needs eigenvalue labels");
        const std::size_t mi = static_cast<std::size_t>(parts[i].mult);
        for (std::size_t k = 0; k < mi; ++k)
            l(offset + k, offset + k) = *parts[i].label;
        if (i + 1 < parts.size()) {
            const std::size_t next = static_cast<std::size_t>(parts[i + 1].mult);
            for (std::size_t k = 0; k < std::min(mi, next); ++k)
                l(offset + k, offset + mi + k) = 1;
        }
        offset += mi;
    }
    return l;
}

bool verify_scheme(const SchlesingerTuple& t, const RiemannScheme& s)
{
    if (s.poles != t.poles || s.columns.size() != t.p() + 1)
        throw Error(ErrorKind::PointMismatch, "scheme points do not match the poles of the system");
    const int n = static_cast<int>(t.rank());
    for (const auto& c : s.columns)
        if (column_total(c) != n)
            return false;
    if (!matches_conjugacy_class(residue_at_infinity(t), s.columns[0]))
        return false;
    for (std::size_t j = 0; j < t.p(); ++j)
        if (!matches_conjugacy_class(t.matrices[j], s.columns[j + 1]))
            return false;
    return true;
}

void attach_scheme_if_valid(SchlesingerTuple& t, std::optional<RiemannScheme> s)
{
    t.scheme.reset();
    if (!s || s->columns.size() != t.p() + 1)
        return;
    s->poles = t.poles;
    canonicalize(*s);
    if (verify_scheme(t, *s))
        t.scheme = std::move(s);
}

std::vector<Gaussian> characteristic_polynomial(const Matrix& a)
{
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier recursion.
    const std::size_t n = a.rows();
    std::vector<Gaussian> c(n + 1);
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + Matrix::scalar(n, c[n - k + 1]);
        c[n - k] = -trace(a * m) / Gaussian(static_cast<long>(k));
    }
    return c;
}

namespace {

using Poly = std::vector<Gaussian>; // lowest degree first

void trim(Poly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * Gaussian(static_cast<long>(k)));
    trim(d);
    return d;
}

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Gaussian lead_inv = Gaussian(1) / b.back();
    for (std::size_t k = a.size() - 1;; --k) {
        const Gaussian f = a[k] * lead_inv;
        const std::size_t shift = k + 1 - b.size();
        q[shift] = f;
        if (!f.is_zero())
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i].sub_mul(f, b[i]);
        if (shift == 0)
            break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

Poly monic(Poly p)
{
    trim(p);
    const Gaussian inv = Gaussian(1) / p.back();
    for (auto& c : p)
        c *= inv;
    return p;
}

Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Gaussian evaluate(const Poly& coeffs, const Gaussian& x)
{
    Gaussian v;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        v = v * x + coeffs[k];
    return v;
}

using Cx = std::complex<long double>;

Cx to_cx(const Gaussian& z) { return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())}; }

// Approximate roots of a monic polynomial with simple roots (Durand-Kerner,
// then a few Newton steps).
std::vector<Cx> approximate_roots(const Poly& p)
{
    const std::size_t d = p.size() - 1;
    std::vector<Cx> c;
    for (const auto& x : p)
        c.push_back(to_cx(x));
    auto eval = [&](Cx x) {
        Cx v = 0;
        for (std::size_t k = c.size(); k-- > 0;)
            v = v * x + c[k];
        return v;
    };
    auto deriv = [&](Cx x) {
        Cx v = 0;
        for (std::size_t k = c.size(); k-- > 1;)
            v = v * x + c[k] * static_cast<long double>(k);
        return v;
    };
    long double radius = 1;
    for (std::size_t k = 0; k < d; ++k)
        radius = std::max(radius, 1 + std::abs(c[k]));
    std::vector<Cx> z(d);
    const Cx seed(0.4L, 0.9L);
    for (std::size_t k = 0; k < d; ++k)
        z[k] = radius * std::pow(seed, static_cast<long double>(k + 1)) / std::abs(std::pow(seed, static_cast<long double>(k + 1)));
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < d; ++i) {
            Cx denom = 1;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            if (std::abs(denom) == 0)
                denom = 1e-30L;
            const Cx step = eval(z[i]) / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (change < 1e-17L)
            break;
    }
    for (auto& x : z)
        for (int k = 0; k < 5; ++k) {
            const Cx dv = deriv(x);
            if (std::abs(dv) == 0)
                break;
            x -= eval(x) / dv;
        }
    return z;
}

Rational round_to(long double x, const mpz_class& den)
{
    const double hi = static_cast<double>(x);
    const double lo = static_cast<double>(x - hi);
    mpf_class scaled(hi, 256);
    scaled += mpf_class(lo, 256);
    scaled *= mpf_class(den, 256);
    mpz_class num(floor(scaled + 0.5));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Distinct Gaussian-rational roots of p, found exactly; nullopt when some
// root is not a Gaussian rational.
std::optional<std::vector<Gaussian>> rational_roots(const Poly& p)
{
    Poly s = monic(p);
    Poly dp = derivative(s);
    if (!dp.empty())
        s = monic(divmod(s, gcd(s, dp)).first);
    std::vector<Gaussian> roots;
    if (s.size() <= 1)
        return roots;
    mpz_class den = 1;
    for (const auto& c : s) {
        den = lcm(den, c.re().get_den());
        den = lcm(den, c.im().get_den());
    }
    // The roots are algebraic integers over den, so den * root is a Gaussian
    // integer when it lies in the field at all.
    for (const Cx& z : approximate_roots(s)) {
        Gaussian cand(round_to(z.real(), den), round_to(z.imag(), den));
        if (!evaluate(s, cand).is_zero())
            return std::nullopt;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
    }
    if (roots.size() != s.size() - 1)
        return std::nullopt;
    return roots;
}

} // namespace

Column infer_column(const Matrix& a)
{
    const std::size_t n = a.rows();
    auto roots = rational_roots(characteristic_polynomial(a));
    if (!roots)
        throw Error(ErrorKind::SchemeUnavailable, "eigenvalues are not all Gaussian rationals");
    Column col;
    std::size_t found = 0;
    for (const auto& lambda : *roots) {
        Matrix shift = a.shifted(-lambda);
        Matrix power = Matrix::identity(n);
        std::size_t prev = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            power = power * shift;
            std::size_t dim = n - rank(power);
            if (dim == prev)
                break;
            col.push_back({lambda, static_cast<int>(dim - prev)});
            found += dim - prev;
            prev = dim;
        }
    }
    if (found != n)
        throw Error(ErrorKind::SchemeUnavailable, "eigenvalues are not all Gaussian rationals");
    canonical_sort(col);
    if (!matches_conjugacy_class(a, col))
        throw Error(ErrorKind::SchemeUnavailable, "Jordan data not expressible in the canonical order");
    return col;
}

RiemannScheme infer_scheme(const SchlesingerTuple& t)
{
    RiemannScheme s{t.poles, {}};
    s.columns.push_back(infer_column(residue_at_infinity(t)));
    for (const auto& m : t.matrices)
        s.columns.push_back(infer_column(m));
    return s;
}

} // namespace fuchs
