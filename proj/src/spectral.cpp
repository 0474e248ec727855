#include "fuchs/spectral.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fuchs {

int ord(const PartitionTuple& m)
{
    if (m.columns.empty())
        return 0;
    const int n = column_total(m.columns[0]);
    for (const auto& c : m.columns)
        if (column_total(c) != n)
            throw Error(ErrorKind::InconsistentColumns, "columns of the spectral type have different sums");
    return n;
}

int idx_spec(const PartitionTuple& m)
{
    const int n = ord(m);
    const int p = static_cast<int>(m.columns.size()) - 1;
    int squares = 0;
    for (const auto& c : m.columns)
        for (const auto& part : c)
            squares += part.mult * part.mult;
    return squares - (p - 1) * n * n;
}

int d_tau(const PartitionTuple& m, const std::vector<std::size_t>& tau)
{
    const int n = ord(m);
    const int p = static_cast<int>(m.columns.size()) - 1;
    int sum = 0;
    for (std::size_t j = 0; j < m.columns.size() && j < tau.size(); ++j)
        if (tau[j] < m.columns[j].size())
            sum += m.columns[j][tau[j]].mult;
    return sum - (p - 1) * n;
}

std::vector<std::size_t> tau_max(const PartitionTuple& m)
{
    std::vector<std::size_t> tau;
    for (const auto& c : m.columns) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < c.size(); ++k)
            if (c[k].mult > c[best].mult)
                best = k;
        tau.push_back(best);
    }
    return tau;
}

int d_max(const PartitionTuple& m) { return d_tau(m, tau_max(m)); }

namespace {

bool fully_labelled(const PartitionTuple& m)
{
    for (const auto& c : m.columns)
        for (const auto& part : c)
            if (!part.label)
                return false;
    return true;
}

} // namespace

PartitionTuple partial_max(const PartitionTuple& m)
{
    const int d = d_max(m);
    const auto tau = tau_max(m);
    PartitionTuple out = m;
    const bool labelled = fully_labelled(m) && !m.columns.empty();

    // mc_max first shifts the chosen eigenvalue at each pole to 0 and then
    // convolves with lambda = (chosen label at infinity) + sum of the others.
    Gaussian lambda;
    if (labelled)
        for (std::size_t j = 0; j < m.columns.size(); ++j)
            if (tau[j] < m.columns[j].size())
                lambda += *m.columns[j][tau[j]].label;

    for (std::size_t j = 0; j < out.columns.size(); ++j) {
        Column& c = out.columns[j];
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k == tau[j]) {
                c[k].mult -= d;
                if (c[k].mult < 0)
                    throw Error(ErrorKind::NegativePart, "d_max exceeds the largest part of a column");
            }
            if (!labelled)
                continue;
            const Gaussian chosen = *m.columns[j][tau[j]].label;
            if (j == 0)
                c[k].label = k == tau[j] ? -lambda : *c[k].label - chosen;
            else
                c[k].label = k == tau[j] ? Gaussian(0) : *c[k].label - chosen + lambda;
        }
        std::erase_if(c, [](const Part& part) { return part.mult == 0; });
        canonical_sort(c);
    }
    return out;
}

KatzReduction katz_reduce(const PartitionTuple& m)
{
    KatzReduction r{m, {}};
    while (ord(r.final_type) > 1 && d_max(r.final_type) > 0) {
        r.final_type = partial_max(r.final_type);
        r.steps.push_back(r.final_type);
    }
    return r;
}

namespace {

int column_max(const Column& c)
{
    int best = 0;
    for (const auto& part : c)
        best = std::max(best, part.mult);
    return best;
}

// Sum over j != k of the column maxima, for each k.
std::vector<int> max_sums(const PartitionTuple& m)
{
    int total = 0;
    for (const auto& c : m.columns)
        total += column_max(c);
    std::vector<int> out;
    for (const auto& c : m.columns)
        out.push_back(total - column_max(c));
    return out;
}

} // namespace

int oidx(const PartitionTuple& m)
{
    const int p = static_cast<int>(m.columns.size()) - 1;
    const auto sums = max_sums(m);
    const int best = sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
    return (p - 1) * ord(m) - best;
}

bool is_basic(const PartitionTuple& m) { return d_max(m) <= 0; }

bool lemma_ineq_holds(const PartitionTuple& m)
{
    const int d = d_max(m);
    if (d <= 0)
        throw Error(ErrorKind::PreconditionFail, "the inequality needs d_max(m) > 0");
    PartitionTuple next;
    try {
        next = partial_max(m);
    } catch (const Error&) {
        throw Error(ErrorKind::PreconditionFail, "partial_max(m) is not a spectral type");
    }
    if (d_max(next) <= 0)
        throw Error(ErrorKind::PreconditionFail, "the inequality needs d_max(partial_max(m)) > 0");
    int lhs = 0;
    for (Column c : m.columns) {
        canonical_sort(c);
        const int m1 = c.empty() ? 0 : c[0].mult;
        const int m2 = c.size() > 1 ? c[1].mult : 0;
        lhs += std::max(0, d - (m1 - m2));
    }
    return lhs > d;
}

namespace {

std::vector<int> sorted_parts(const Column& c)
{
    std::vector<int> parts;
    for (const auto& part : c)
        if (part.mult > 0)
            parts.push_back(part.mult);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

Column to_column(const std::vector<int>& parts)
{
    Column c;
    for (int v : parts)
        c.push_back({std::nullopt, v});
    return c;
}

} // namespace

PartitionTuple canonical_type(const PartitionTuple& m)
{
    const int n = ord(m);
    std::vector<std::vector<int>> cols;
    for (const auto& c : m.columns) {
        auto parts = sorted_parts(c);
        if (parts.size() == 1 && parts[0] == n)
            continue;
        cols.push_back(std::move(parts));
    }
    std::sort(cols.begin(), cols.end());
    PartitionTuple out;
    for (const auto& parts : cols)
        out.columns.push_back(to_column(parts));
    return out;
}

std::vector<PartitionTuple> minimal_onf_types(const PartitionTuple& m)
{
    const int extra = oidx(m);
    const auto sums = max_sums(m);
    if (sums.empty())
        return {};
    const int best = *std::max_element(sums.begin(), sums.end());
    std::vector<PartitionTuple> out;
    for (std::size_t k = 0; k < m.columns.size(); ++k) {
        if (sums[k] != best)
            continue;
        std::vector<std::vector<int>> cols;
        for (std::size_t j = 0; j < m.columns.size(); ++j) {
            auto parts = sorted_parts(m.columns[j]);
            if (j == k)
                parts.push_back(extra);
            else
                parts[0] += extra;
            std::sort(parts.rbegin(), parts.rend());
            cols.push_back(std::move(parts));
        }
        PartitionTuple t;
        for (const auto& parts : cols)
            t.columns.push_back(to_column(parts));
        t = canonical_type(t);
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const PartitionTuple& a, const PartitionTuple& b) {
        return format_spectral_type(a) < format_spectral_type(b);
    });
    return out;
}

namespace {

void partitions_into(int n, int largest, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, largest); part >= 1; --part) {
        current.push_back(part);
        partitions_into(n - part, part, current, out);
        current.pop_back();
    }
}

struct Candidate {
    std::vector<int> parts;
    int squares = 0;
    int largest = 0;
};

struct Search {
    const std::vector<Candidate>& cands;
    std::vector<int> suffix_min_sq, suffix_max_sq, suffix_min_largest;
    int n = 0;
    int columns = 0;
    int square_target = 0;
    int max_budget = 0;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> found;

    void run(std::size_t depth, std::size_t start, int squares, int maxima)
    {
        const int remaining = columns - static_cast<int>(depth);
        if (remaining == 0) {
            if (squares == square_target && maxima <= max_budget)
                found.push_back(chosen);
            return;
        }
        for (std::size_t i = start; i < cands.size(); ++i) {
            const int r = remaining - 1;
            const int sq = squares + cands[i].squares;
            const int mx = maxima + cands[i].largest;
            if (sq + r * suffix_min_sq[i] > square_target || sq + r * suffix_max_sq[i] < square_target)
                continue;
            if (mx + r * suffix_min_largest[i] > max_budget)
                continue;
            chosen.push_back(i);
            run(depth + 1, i, sq, mx);
            chosen.pop_back();
        }
    }
};

int gcd_of(const std::vector<const Candidate*>& cols)
{
    int g = 0;
    for (const auto* c : cols)
        for (int v : c->parts)
            g = std::gcd(g, v);
    return g;
}

} // namespace

std::vector<PartitionTuple> enumerate_basic(int target_idx, int max_ord, int max_points)
{
    std::vector<PartitionTuple> result;
    for (int n = 2; n <= max_ord; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> current;
        partitions_into(n, n, current, parts);
        std::vector<Candidate> cands;
        for (auto& p : parts) {
            if (p.size() == 1)
                continue;
            int sq = 0;
            for (int v : p)
                sq += v * v;
            cands.push_back({p, sq, p[0]});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.parts < b.parts; });
        const std::size_t c = cands.size();
        std::vector<int> smin(c + 1, 1 << 29), smax(c + 1, 0), lmin(c + 1, 1 << 29);
        for (std::size_t i = c; i-- > 0;) {
            smin[i] = std::min(smin[i + 1], cands[i].squares);
            smax[i] = std::max(smax[i + 1], cands[i].squares);
            lmin[i] = std::min(lmin[i + 1], cands[i].largest);
        }
        for (int k = 3; k <= max_points; ++k) {
            const int target = target_idx + (k - 2) * n * n;
            std::vector<std::vector<std::vector<std::size_t>>> per_first(c);
#pragma omp parallel for schedule(dynamic)
            for (long first = 0; first < static_cast<long>(c); ++first) {
                Search s{cands, smin, smax, lmin, n, k, target, (k - 2) * n, {}, {}};
                const auto f = static_cast<std::size_t>(first);
                s.chosen.push_back(f);
                const int r = k - 1;
                if (cands[f].squares + r * smin[f] <= target && cands[f].squares + r * smax[f] >= target &&
                    cands[f].largest + r * lmin[f] <= s.max_budget)
                    s.run(1, f, cands[f].squares, cands[f].largest);
                per_first[f] = std::move(s.found);
            }
            for (const auto& group : per_first)
                for (const auto& idx : group) {
                    std::vector<const Candidate*> cols;
                    for (auto i : idx)
                        cols.push_back(&cands[i]);
                    if (gcd_of(cols) != 1)
                        continue;
                    PartitionTuple t;
                    for (const auto* col : cols)
                        t.columns.push_back(to_column(col->parts));
                    result.push_back(std::move(t));
                }
        }
    }
    std::stable_sort(result.begin(), result.end(), [](const PartitionTuple& a, const PartitionTuple& b) {
        const int oa = ord(a), ob = ord(b);
        if (oa != ob)
            return oa < ob;
        return format_spectral_type(a) < format_spectral_type(b);
    });
    return result;
}

const std::vector<TableRow>& basic_table(int idx)
{
    static const std::vector<TableRow> zero{
        {"11,11,11,11", 2, 3, {"111,21,21,21"}},
        {"111,111,111", 3, 4, {"1111,211,211"}},
        {"1111,1111,22", 4, 5, {"11111,2111,32"}},
        {"111111,222,33", 6, 7, {"1111111,322,43"}},
    };
    static const std::vector<TableRow> minus_two{
        {"11,11,11,11,11", 2, 4, {"211,31,31,31,31"}},
        {"111,111,21,21", 3, 4, {"1111,211,31,31"}},
        {"1111,22,22,31", 4, 5, {"11111,32,32,41"}},
        {"1111,1111,211", 4, 5, {"11111,2111,311"}},
        {"211,22,22,22", 4, 6, {"2211,42,42,42", "222,411,42,42"}},
        {"11111,221,221", 5, 6, {"111111,321,321"}},
        {"11111,11111,32", 5, 6, {"111111,21111,42"}},
        {"111111,2211,33", 6, 7, {"1111111,3211,43"}},
        {"2211,222,222", 6, 8, {"22211,422,422", "2222,422,4211"}},
        {"11111111,332,44", 8, 9, {"111111111,432,54"}},
        {"22211,2222,44", 8, 10, {"222211,4222,64", "22222,42211,64"}},
        {"22222,3331,55", 10, 12, {"222222,5331,75"}},
        {"2222211,444,66", 12, 14, {"22222211,644,86"}},
    };
    if (idx == 0)
        return zero;
    if (idx == -2)
        return minus_two;
    throw Error(ErrorKind::InvalidArgument, "only the index 0 and -2 tables are built in");
}

TableComparison compare_with_table(int idx, int max_ord, int max_points)
{
    TableComparison out;
    const auto& table = basic_table(idx);
    auto canon = [](const std::string& text) { return canonical_type(parse_spectral_type(text)); };
    std::set<std::string> seen;
    for (const auto& m : enumerate_basic(idx, max_ord, max_points)) {
        const PartitionTuple c = canonical_type(m);
        TableRowCheck check{format_spectral_type(c), ord(m), ord(m) + oidx(m), {}, "not in table"};
        seen.insert(check.basic);
        const TableRow* row = nullptr;
        for (const auto& r : table)
            if (canon(r.basic) == c)
                row = &r;
        bool onf_hit = false;
        for (const auto& t : minimal_onf_types(m)) {
            check.onf.push_back(format_spectral_type(t));
            if (row)
                for (const auto& listed : row->onf)
                    onf_hit = onf_hit || canon(listed) == t;
        }
        if (row)
            check.status = row->ord == check.ord && row->onf_ord == check.onf_ord && onf_hit ? "matched" : "mismatch";
        out.matched = out.matched && check.status == "matched";
        out.rows.push_back(std::move(check));
    }
    for (const auto& r : table) {
        const std::string basic = format_spectral_type(canon(r.basic));
        if (!seen.count(basic)) {
            out.matched = false;
            out.rows.push_back({basic, r.ord, r.onf_ord, r.onf, "missing from enumeration"});
        }
    }
    return out;
}

} // namespace fuchs
