#include "fuchs/katz.hpp"

#include "fuchs/error.hpp"

#include <algorithm>

namespace fuchs {

SchlesingerTuple addition(const SchlesingerTuple& t, std::span<const Gaussian> mu)
{
    if (mu.size() != t.p())
        throw Error(ErrorKind::LengthMismatch, "addition needs one shift per pole");
    SchlesingerTuple out{t.poles, {}, std::nullopt};
    Gaussian total;
    for (std::size_t j = 0; j < t.p(); ++j) {
        out.matrices.push_back(t.matrices[j].shifted(mu[j]));
        total += mu[j];
    }
    if (t.scheme) {
        RiemannScheme s = *t.scheme;
        for (auto& part : s.columns[0])
            if (part.label)
                *part.label -= total;
        for (std::size_t j = 0; j < t.p(); ++j)
            for (auto& part : s.columns[j + 1])
                if (part.label)
                    *part.label += mu[j];
        attach_scheme_if_valid(out, std::move(s));
    }
    return out;
}

ConvolutionData convolution(const SchlesingerTuple& t, const Gaussian& lambda)
{
    const std::size_t n = t.rank();
    const std::size_t p = t.p();
    const std::size_t big = n * p;
    ConvolutionData data;

    Matrix sum(big, big);
    for (std::size_t j = 0; j < p; ++j) {
        Matrix g(big, big);
        for (std::size_t v = 0; v < p; ++v)
            g.set_block(j * n, v * n, v == j ? t.matrices[v].shifted(lambda) : t.matrices[v]);
        sum += g;
        data.big_matrices.push_back(std::move(g));
    }

    std::vector<Matrix> kernels;
    for (const auto& a : t.matrices)
        kernels.push_back(kernel_basis(a));
    std::size_t kdim = 0;
    for (const auto& k : kernels)
        kdim += k.cols();
    data.k_basis = Matrix(big, kdim);
    std::size_t col = 0;
    for (std::size_t j = 0; j < p; ++j) {
        data.k_basis.set_block(j * n, col, kernels[j]);
        col += kernels[j].cols();
    }

    data.l_basis = kernel_basis(sum);
    data.sum_basis = subspace_sum(data.k_basis, data.l_basis);
    data.complement_basis = ::fuchs::complement_basis(data.sum_basis);
    return data;
}

namespace {

std::optional<RiemannScheme> try_predict(const std::optional<RiemannScheme>& s, const Gaussian& lambda)
{
    if (!s)
        return std::nullopt;
    try {
        return predicted_scheme(*s, lambda);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

SchlesingerTuple middle_convolution(const SchlesingerTuple& t, const Gaussian& lambda)
{
    ConvolutionData data = convolution(t, lambda);
    const std::size_t big = t.rank() * t.p();
    const std::size_t s = data.sum_basis.cols();
    const std::size_t m = big - s;

    Matrix q = hstack(data.sum_basis, data.complement_basis);
    auto q_inv = inverse(q);
    if (!q_inv)
        throw Error(ErrorKind::Internal, "quotient basis is not invertible");
    Matrix project = q_inv->block(s, 0, m, big);

    SchlesingerTuple out{t.poles, {}, std::nullopt};
    for (const auto& g : data.big_matrices)
        out.matrices.push_back(project * (g * data.complement_basis));
    attach_scheme_if_valid(out, try_predict(t.scheme, lambda));
    return out;
}

SchlesingerTuple swap_with_infinity(const SchlesingerTuple& t, std::size_t j)
{
    if (j >= t.p())
        throw Error(ErrorKind::IndexOutOfRange, "pole index " + std::to_string(j + 1) + " out of range");
    SchlesingerTuple out = t;
    out.matrices[j] = residue_at_infinity(t);
    if (out.scheme)
        std::swap(out.scheme->columns[0], out.scheme->columns[j + 1]);
    return out;
}

SchlesingerTuple permute(const SchlesingerTuple& t, std::span<const std::size_t> sigma)
{
    const std::size_t p = t.p();
    std::vector<bool> seen(p, false);
    if (sigma.size() != p)
        throw Error(ErrorKind::NotAPermutation, "permutation has the wrong length");
    for (auto s : sigma) {
        if (s >= p || seen[s])
            throw Error(ErrorKind::NotAPermutation, "not a permutation of the poles");
        seen[s] = true;
    }
    SchlesingerTuple out{{}, {}, std::nullopt};
    for (std::size_t k = 0; k < p; ++k) {
        out.poles.push_back(t.poles[sigma[k]]);
        out.matrices.push_back(t.matrices[sigma[k]]);
    }
    if (t.scheme) {
        RiemannScheme s{out.poles, {t.scheme->columns[0]}};
        for (std::size_t k = 0; k < p; ++k)
            s.columns.push_back(t.scheme->columns[sigma[k] + 1]);
        out.scheme = std::move(s);
    }
    return out;
}

SchlesingerTuple append_infinity_pole(const SchlesingerTuple& t, const Gaussian& t_new)
{
    if (std::find(t.poles.begin(), t.poles.end(), t_new) != t.poles.end())
        throw Error(ErrorKind::DuplicatePole, "pole " + t_new.str() + " already present");
    SchlesingerTuple out = t;
    out.poles.push_back(t_new);
    out.matrices.push_back(residue_at_infinity(t));
    if (out.scheme) {
        out.scheme->poles = out.poles;
        out.scheme->columns.push_back(out.scheme->columns[0]);
        out.scheme->columns[0] = Column{{Gaussian(0), static_cast<int>(t.rank())}};
    }
    return out;
}

namespace {

// Index of the largest part carrying `label`, inserting a 0-multiplicity
// part when the label is absent.
std::size_t top_with_label(Column& c, const Gaussian& label)
{
    std::size_t best = c.size();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].label)
            throw Error(ErrorKind::SchemeUnavailable, "scheme entries need eigenvalue labels");
        if (*c[k].label == label && (best == c.size() || c[k].mult > c[best].mult))
            best = k;
    }
    if (best == c.size())
        c.push_back({label, 0});
    return best;
}

struct Normalized {
    std::vector<Column> columns;
    std::vector<std::size_t> tops;
    int d = 0;
};

Normalized normalize(const RiemannScheme& s, const Gaussian& lambda)
{
    if (s.columns.empty())
        throw Error(ErrorKind::NotNormalizable, "empty scheme");
    Normalized out{s.columns, {}, 0};
    const int n = column_total(s.columns[0]);
    for (const auto& c : s.columns)
        if (column_total(c) != n)
            throw Error(ErrorKind::NotNormalizable, "columns of the scheme have different totals");
    const int p = static_cast<int>(s.columns.size()) - 1;
    int sum = 0;
    for (std::size_t j = 0; j < out.columns.size(); ++j) {
        std::size_t k = top_with_label(out.columns[j], j == 0 ? lambda : Gaussian(0));
        out.tops.push_back(k);
        sum += out.columns[j][k].mult;
    }
    out.d = sum - (p - 1) * n;
    return out;
}

} // namespace

int predicted_rank_drop(const RiemannScheme& s, const Gaussian& lambda) { return normalize(s, lambda).d; }

RiemannScheme predicted_scheme(const RiemannScheme& s, const Gaussian& lambda)
{
    Normalized norm = normalize(s, lambda);
    RiemannScheme out{s.poles, std::move(norm.columns)};
    for (std::size_t j = 0; j < out.columns.size(); ++j) {
        for (std::size_t k = 0; k < out.columns[j].size(); ++k) {
            Part& part = out.columns[j][k];
            if (k == norm.tops[j]) {
                part.mult -= norm.d;
                if (part.mult < 0)
                    throw Error(ErrorKind::NegativePart, "middle convolution would leave a negative multiplicity");
                part.label = j == 0 ? -lambda : Gaussian(0);
            } else if (j == 0) {
                *part.label -= lambda;
            } else {
                *part.label += lambda;
            }
        }
    }
    canonicalize(out);
    return out;
}

SchlesingerTuple mc_max(const SchlesingerTuple& t)
{
    if (!t.scheme)
        throw Error(ErrorKind::SchemeUnavailable, "mc_max needs a declared Riemann scheme");
    if (!is_irreducible(t))
        throw Error(ErrorKind::NotIrreducible, "mc_max needs an irreducible tuple");
    // Canonical order puts the first maximal part of each column in front.
    const auto& cols = t.scheme->columns;
    std::vector<Gaussian> mu;
    Gaussian lambda = *cols[0].front().label;
    for (std::size_t j = 1; j < cols.size(); ++j) {
        mu.push_back(-*cols[j].front().label);
        lambda += *cols[j].front().label;
    }
    return middle_convolution(addition(t, mu), lambda);
}

} // namespace fuchs
