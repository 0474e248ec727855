#include "fuchs/reduce.hpp"

#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"

namespace fuchs {

namespace {

const RiemannScheme& ensure_scheme(std::optional<RiemannScheme>& slot, const SchlesingerTuple& t)
{
    if (!slot)
        slot = infer_scheme(t);
    return *slot;
}

ReductionStage stage_of(const SchlesingerTuple& t, std::string note)
{
    ReductionStage s{t.rank(), index_of_rigidity(t), t.scheme, {}, std::move(note)};
    if (s.scheme)
        s.type = spectral_type(*s.scheme);
    return s;
}

bool in_tables(const PartitionTuple& basic)
{
    const auto canon = canonical_type(basic);
    for (int idx : {0, -2})
        for (const auto& row : basic_table(idx))
            if (canonical_type(parse_spectral_type(row.basic)) == canon)
                return true;
    return false;
}

void mark_stuck(ReductionReport& r, const PartitionTuple& type)
{
    // Okubo-type terminals are named by the basic type they come from.
    const PartitionTuple basic = is_basic(type) ? type : katz_reduce(type).final_type;
    r.stuck_at = format_spectral_type(canonical_type(basic));
    r.stuck_type_in_tables = in_tables(basic);
}

RiemannScheme add_at_pole(RiemannScheme s, std::size_t j, const Gaussian& mu)
{
    for (auto& part : s.columns.at(0))
        *part.label -= mu;
    for (auto& part : s.columns.at(j + 1))
        *part.label += mu;
    canonicalize(s);
    return s;
}

} // namespace

ReductionReport reduce_katz_matrix(const SchlesingerTuple& input)
{
    ReductionReport r;
    SchlesingerTuple t = input;
    ensure_scheme(t.scheme, t);
    r.stages.push_back(stage_of(t, "input"));
    while (t.rank() > 1) {
        const PartitionTuple type = spectral_type(ensure_scheme(t.scheme, t));
        if (d_max(type) <= 0) {
            mark_stuck(r, type);
            return r;
        }
        t = mc_max(t);
        ensure_scheme(t.scheme, t);
        r.stages.push_back(stage_of(t, "mc_max"));
    }
    r.reached_rank_one = t.rank() == 1;
    return r;
}

ReductionReport reduce_katz_scheme(const PartitionTuple& m)
{
    ReductionReport r;
    auto stage = [](const PartitionTuple& t, std::string note) {
        return ReductionStage{static_cast<std::size_t>(ord(t)), idx_spec(t), std::nullopt, t, std::move(note)};
    };
    r.stages.push_back(stage(m, "input"));
    const auto reduced = katz_reduce(m);
    for (const auto& step : reduced.steps)
        r.stages.push_back(stage(step, "partial_max"));
    r.reached_rank_one = ord(reduced.final_type) == 1;
    if (!r.reached_rank_one)
        mark_stuck(r, reduced.final_type);
    return r;
}

ReductionReport reduce_yokoyama_matrix(const System& s)
{
    ReductionReport r;
    OkuboSystem o;
    if (const auto* t = std::get_if<SchlesingerTuple>(&s)) {
        r.stages.push_back(stage_of(*t, "input"));
        if (okubo_convertible(*t)) {
            o = onf_from_scf(*t);
        } else {
            const Matrix a0 = residue_at_infinity(*t);
            Gaussian lambda(1);
            while (rank(a0.shifted(-lambda)) != t->rank())
                lambda += Gaussian(1);
            o = mc_via_images(*t, lambda);
            r.stages.push_back(stage_of(scf_from_onf(o), "mc_" + lambda.str() + " to Okubo form"));
        }
    } else {
        o = std::get<OkuboSystem>(s);
        r.stages.push_back(stage_of(scf_from_onf(o), "input"));
    }
    if (!o.scheme)
        o.scheme = infer_scheme(scf_from_onf(o));
    r.stages.back().scheme = o.scheme;
    r.stages.back().type = spectral_type(*o.scheme);

    while (o.rank() > 1) {
        const auto step = choose_yokoyama_step(*o.scheme);
        if (!step) {
            mark_stuck(r, spectral_type(*o.scheme));
            return r;
        }
        o = apply_yokoyama_step(o, *step);
        if (!o.scheme)
            o.scheme = infer_scheme(scf_from_onf(o));
        r.stages.push_back(stage_of(scf_from_onf(o), "R E R E at pole " + std::to_string(step->j + 1) + ", d = " +
                                                          std::to_string(step->d)));
    }
    r.reached_rank_one = o.rank() == 1;
    return r;
}

RiemannScheme scheme_after_yokoyama_step(const RiemannScheme& s, const YokoyamaStep& step, const Gaussian& epsilon)
{
    RiemannScheme u = predicted_scheme(s, -step.rho1);
    u = add_at_pole(u, step.j, step.rho1 + step.rho3);
    return predicted_scheme(u, step.rho1 + epsilon);
}

ReductionReport reduce_yokoyama_scheme(const RiemannScheme& input)
{
    ReductionReport r;
    RiemannScheme s = input;
    canonicalize(s);
    auto stage = [](const RiemannScheme& x, std::string note) {
        const PartitionTuple t = spectral_type(x);
        return ReductionStage{static_cast<std::size_t>(ord(t)), idx_spec(t), x, t, std::move(note)};
    };
    r.stages.push_back(stage(s, "input"));
    while (ord(spectral_type(s)) > 1) {
        const auto step = choose_yokoyama_step(s);
        if (!step) {
            mark_stuck(r, spectral_type(s));
            return r;
        }
        const int target = ord(spectral_type(s)) - step->d;
        std::optional<RiemannScheme> next;
        // The scheme analogue of the epsilon search: rho1 + eps must avoid 0
        // and the eigenvalues at infinity of the intermediate scheme.
        for (int e = 1; e <= 64 && !next; ++e) {
            const Gaussian eps(e);
            const Gaussian lambda = step->rho1 + eps;
            if (lambda.is_zero())
                continue;
            RiemannScheme u = add_at_pole(predicted_scheme(s, -step->rho1), step->j, step->rho1 + step->rho3);
            bool collides = false;
            for (const auto& part : u.columns[0])
                collides = collides || (part.mult > 0 && *part.label == lambda);
            if (collides)
                continue;
            RiemannScheme candidate = predicted_scheme(u, lambda);
            if (ord(spectral_type(candidate)) == target)
                next = std::move(candidate);
        }
        if (!next)
            throw Error(ErrorKind::NotGeneric, "no epsilon in 1..64 gives a generic Yokoyama step");
        s = std::move(*next);
        r.stages.push_back(stage(s, "R E R E at pole " + std::to_string(step->j + 1) + ", d = " +
                                        std::to_string(step->d)));
    }
    r.reached_rank_one = ord(spectral_type(s)) == 1;
    return r;
}

} // namespace fuchs
