#include "fuchs/verify.hpp"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"
#include "fuchs/okubo.hpp"
#include "fuchs/spectral.hpp"
#include "fuchs/yokoyama.hpp"

#include <algorithm>

namespace fuchs {

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.passed; }));
}

const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names{
        "mc_zero_identity", "mc_composition", "idx_invariance",  "mc_permutation",
        "mc_by_images",     "onf_conditions", "extension_forms", "restrict_extend",
        "re_identity",      "rere_identity",  "okubo_convertible", "katz_inequality",
    };
    return names;
}

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t p)
{
    std::vector<std::size_t> sigma(p);
    for (std::size_t k = 0; k < p; ++k)
        sigma[k] = k;
    for (std::size_t k = p; k > 1; --k)
        std::swap(sigma[k - 1], sigma[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
    return sigma;
}

// lambda with rank(A_1 + ... + A_p + lambda) = n, so that mc is visible on
// the images of the residues.
Gaussian image_generic(const SchlesingerTuple& t, Gaussian lambda)
{
    const Matrix a0 = residue_at_infinity(t);
    while (lambda.is_zero() || rank(a0.shifted(-lambda)) != t.rank())
        lambda += Gaussian::ratio(1, 3);
    return lambda;
}

std::vector<std::size_t> random_blocks(Rng& rng, std::size_t bound)
{
    const std::size_t p = static_cast<std::size_t>(rng.uniform(2, std::min<long>(3, static_cast<long>(bound))));
    std::vector<std::size_t> blocks;
    std::size_t total = 0;
    for (std::size_t k = 0; k < p; ++k) {
        const std::size_t room = bound - total - (p - k - 1);
        const std::size_t b = room <= 1 ? 1 : static_cast<std::size_t>(rng.uniform(1, std::min<long>(2, static_cast<long>(room))));
        blocks.push_back(b);
        total += b;
    }
    return blocks;
}

class Instance {
public:
    Instance(std::uint64_t seed, std::size_t bound, const McFunction& mc)
        : rng_(seed), bound_(std::max<std::size_t>(bound, 2)), mc_(mc)
    {
        const std::size_t n = static_cast<std::size_t>(rng_.uniform(1, static_cast<long>(bound_)));
        const std::size_t p = static_cast<std::size_t>(rng_.uniform(2, 3));
        t_ = random_irreducible_scf(rng_, n, p);
        lambda1_ = rng_.nonzero_rational(5, 4);
        lambda2_ = rng_.nonzero_rational(5, 4);
        o_ = random_onf(rng_, random_blocks(rng_, std::min<std::size_t>(bound_, 4)));
        rho1_ = rng_.nonzero_rational(5, 3);
        rho2_ = rng_.nonzero_rational(5, 3);
        rho3_ = rng_.nonzero_rational(5, 3);
        j_ = static_cast<std::size_t>(rng_.uniform(0, static_cast<long>(o_.p()) - 1));
    }

    Outcome run(const std::string& name)
    {
        if (name == "mc_zero_identity")
            return is_equivalent(mc_(t_, Gaussian(0)), t_) ? pass() : fail("mc_0(A) is not equivalent to A");
        if (name == "mc_composition") {
            auto lhs = mc_(mc_(t_, lambda1_), lambda2_);
            auto rhs = mc_(t_, lambda1_ + lambda2_);
            if (lhs.rank() != rhs.rank())
                return fail("ranks " + std::to_string(lhs.rank()) + " and " + std::to_string(rhs.rank()));
            return is_equivalent(lhs, rhs) ? pass() : fail("mc_l2 . mc_l1 differs from mc_(l1+l2)");
        }
        if (name == "idx_invariance")
            return idx_invariance();
        if (name == "mc_permutation") {
            const auto sigma = random_permutation(rng_, t_.p());
            auto a = mc_(permute(t_, sigma), lambda1_);
            auto b = permute(mc_(t_, lambda1_), sigma);
            return is_equivalent(a, b) ? pass() : fail("mc does not commute with the pole permutation");
        }
        if (name == "mc_by_images") {
            const Gaussian lambda = image_generic(t_, lambda1_);
            auto im = mc_via_images(t_, lambda);
            for (std::size_t j = 0; j < t_.p(); ++j)
                if (im.blocks[j] != rank(t_.matrices[j]))
                    return fail("block " + std::to_string(j + 1) + " differs from dim IM A_j");
            return is_equivalent(scf_from_onf(im), mc_(t_, lambda)) ? pass()
                                                                    : fail("mc on images disagrees with mc");
        }
        if (name == "onf_conditions")
            return onf_conditions();
        if (name == "extension_forms")
            return extension_forms();
        if (name == "restrict_extend") {
            auto e = extend_direct(o_, {rho1_, rho2_, Gaussian(100)}, true);
            auto back = restrict(e, {rho1_, rho2_, o_.p()});
            return back.a == o_.a && back.blocks == o_.blocks && back.poles == o_.poles
                       ? pass()
                       : fail("restriction of the new pole does not return the original system");
        }
        if (name == "re_identity") {
            auto sides = re_sides(o_, j_, rho1_, rho2_);
            if (sides.yokoyama.rank() != sides.predicted_rank)
                return fail("rank " + std::to_string(sides.yokoyama.rank()) + ", predicted " +
                            std::to_string(sides.predicted_rank));
            return is_equivalent(scf_from_onf(sides.yokoyama), sides.katz)
                       ? pass("epsilon " + sides.epsilon.str())
                       : fail("R E and the convolution pipeline differ");
        }
        if (name == "rere_identity") {
            auto sides = rere_sides(o_, j_, rho1_, rho2_, rho3_);
            return is_equivalent(scf_from_onf(sides.yokoyama), sides.katz)
                       ? pass("epsilon " + sides.epsilon.str())
                       : fail("R E R E and the convolution pipeline differ");
        }
        if (name == "okubo_convertible")
            return okubo_convertibility();
        if (name == "katz_inequality")
            return katz_inequality();
        throw Error(ErrorKind::InvalidArgument, "unknown identity " + name);
    }

private:
    Outcome idx_invariance()
    {
        const int idx = index_of_rigidity(t_);
        const int after_mc = index_of_rigidity(mc_(t_, lambda1_));
        std::vector<Gaussian> mu(t_.p());
        for (auto& m : mu)
            m = rng_.nonzero_rational(3, 2);
        const int after_add = index_of_rigidity(addition(t_, mu));
        const std::size_t j = static_cast<std::size_t>(rng_.uniform(0, static_cast<long>(t_.p()) - 1));
        const int after_swap = index_of_rigidity(swap_with_infinity(t_, j));
        if (after_mc == idx && after_add == idx && after_swap == idx)
            return pass("idx " + std::to_string(idx));
        return fail("idx " + std::to_string(idx) + " became " + std::to_string(after_mc) + "/" +
                    std::to_string(after_add) + "/" + std::to_string(after_swap));
    }

    Outcome onf_conditions()
    {
        const std::size_t n = o_.rank();
        for (int attempt = 0; attempt < 50; ++attempt) {
            OkuboSystem x{o_.blocks, o_.poles, random_matrix(rng_, n, n, 0, 1), std::nullopt};
            if (rank(x.a) != n)
                continue;
            const bool onf = check_onf_conditions(x);
            const bool star = check_star_conditions(scf_from_onf(x)).all();
            return onf == star ? pass(onf ? "conditions hold" : "conditions fail")
                               : fail("block conditions and star conditions disagree");
        }
        return pass("no invertible sample");
    }

    Outcome extension_forms()
    {
        Gaussian r2 = rho2_;
        for (int attempt = 0; attempt < 8; ++attempt, r2 += Gaussian(1)) {
            OkuboSystem e;
            try {
                e = extend_direct(o_, {rho1_, r2, Gaussian(100)});
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::DegenerateExtension)
                    continue;
                throw;
            }
            if (!(e.a.shifted(-rho1_) * e.a.shifted(-r2)).is_zero())
                return fail("the extended matrix misses the quadratic relation");
            return is_equivalent(scf_from_onf(e), extend_composite(o_, {rho1_, r2, Gaussian(100)}))
                       ? pass()
                       : fail("direct and convolution extensions differ");
        }
        return pass("every rho2 tried was degenerate");
    }

    Outcome okubo_convertibility()
    {
        auto s = random_scheme_tuple(rng_, t_.p(), bound_);
        std::vector<Gaussian> labels;
        for (const auto& part : s.scheme->columns[0])
            labels.push_back(*part.label);
        for (const auto& lambda : labels) {
            if (lambda.is_zero())
                continue;
            if (okubo_convertible(mc_(s, lambda)))
                return fail("mc at eigenvalue " + lambda.str() + " of A_0 is of Okubo type");
        }
        const Gaussian generic = pick_generic(labels);
        return okubo_convertible(mc_(s, generic)) ? pass()
                                                  : fail("mc at non-eigenvalue " + generic.str() + " is not of Okubo type");
    }

    Outcome katz_inequality()
    {
        auto s = random_scheme_tuple(rng_, t_.p(), bound_);
        const PartitionTuple m = spectral_type(*s.scheme);
        try {
            return lemma_ineq_holds(m) ? pass(format_spectral_type(m))
                                       : fail("inequality fails on " + format_spectral_type(m));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PreconditionFail)
                return pass("precondition not met for " + format_spectral_type(m));
            throw;
        }
    }

    Rng rng_;
    std::size_t bound_;
    const McFunction& mc_;
    SchlesingerTuple t_;
    OkuboSystem o_;
    Gaussian lambda1_, lambda2_, rho1_, rho2_, rho3_;
    std::size_t j_ = 0;
};

std::vector<IdentityCheck> run_instance(std::size_t k, const VerifyOptions& options, const McFunction& mc)
{
    const auto& names = identity_names();
    std::vector<IdentityCheck> out;
    const std::uint64_t seed = options.seed * 1000003ULL + k;
    try {
        Instance inst(seed, options.size_bound, mc);
        for (const auto& name : names) {
            IdentityCheck c{k, name, false, {}};
            try {
                auto r = inst.run(name);
                c.passed = r.passed;
                c.detail = std::move(r.detail);
            } catch (const std::exception& e) {
                c.detail = e.what();
            }
            out.push_back(std::move(c));
        }
    } catch (const std::exception& e) {
        out.push_back({k, "instance_generation", false, e.what()});
    }
    return out;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& options)
{
    const McFunction mc = options.mc ? options.mc : McFunction(middle_convolution);
    std::vector<std::vector<IdentityCheck>> per_instance(options.count);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(options.count); ++k)
        per_instance[static_cast<std::size_t>(k)] = run_instance(static_cast<std::size_t>(k), options, mc);
    VerifyReport report;
    for (auto& v : per_instance)
        for (auto& c : v)
            report.checks.push_back(std::move(c));
    return report;
}

} // namespace fuchs
