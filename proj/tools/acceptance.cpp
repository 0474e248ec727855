// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exit status 0 iff every criterion passes.

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"
#include "fuchs/reduce.hpp"
#include "fuchs/spectral.hpp"
#include "fuchs/verify.hpp"
#include "fuchs/yokoyama.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace fuchs;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::ostringstream notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes << " [failed: " << what << "]";
        }
    }
};

Gaussian g(const char* s) { return Gaussian::parse(s); }

// One verification run feeds criteria 2 to 5.
const VerifyReport& identity_run()
{
    static const VerifyReport report = [] {
        VerifyOptions options;
        options.seed = 1;
        options.count = 50;
        options.size_bound = 4;
        return run_verify(options);
    }();
    return report;
}

void tally(Verdict& v, const std::vector<std::string>& names, std::size_t minimum)
{
    for (const auto& name : names) {
        std::size_t total = 0, ok = 0;
        for (const auto& c : identity_run().checks)
            if (c.identity == name) {
                ++total;
                ok += c.passed;
                if (!c.passed)
                    v.notes << " [" << name << " instance " << c.instance << ": " << c.detail << "]";
            }
        v.notes << " " << name << " " << ok << "/" << total << " (shared seeded run)";
        v.require(total >= minimum && ok == total, name);
    }
}

Verdict hypergeometric_extension()
{
    Verdict v;
    struct Case {
        const char *lambda, *rho1, *rho2;
    };
    for (const Case c : {Case{"1/3", "2", "5/2+i"}, Case{"-2/5", "7/3", "-1/4"}, Case{"1/2+i", "3", "1/7"}}) {
        const Gaussian lambda = g(c.lambda), r1 = g(c.rho1), r2 = g(c.rho2);
        const Gaussian t1(0), t2(1);
        auto e = extend_direct(rank_one_onf(lambda, t1), {r1, r2, t2});
        RiemannScheme expected{{t1, t2},
                               {{{-r1, 1}, {-r2, 1}}, {{Gaussian(0), 1}, {lambda, 1}}, {{Gaussian(0), 1}, {r1 + r2 - lambda, 1}}}};
        canonicalize(expected);
        v.require(e.rank() == 2, "rank 2");
        v.require(e.scheme && *e.scheme == expected, "scheme equality");
        v.require(verify_scheme(scf_from_onf(e), expected), "scheme verified on the matrix");
        if (e.scheme)
            v.notes << " " << format_scheme(*e.scheme);
    }
    return v;
}

Verdict identity_suite()
{
    Verdict v;
    tally(v, {"mc_zero_identity", "mc_composition", "idx_invariance", "mc_permutation"}, 50);
    return v;
}

Verdict yokoyama_katz()
{
    Verdict v;
    tally(v, {"extension_forms", "restrict_extend", "re_identity", "rere_identity"}, 20);
    return v;
}

Verdict mc_by_images()
{
    Verdict v;
    tally(v, {"mc_by_images"}, 20);
    return v;
}

Verdict okubo_criterion()
{
    Verdict v;
    tally(v, {"okubo_convertible"}, 20);
    // Both directions on every eigenvalue at infinity of a few fixed tuples.
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        auto t = rigid_family_tuple(n);
        std::vector<Gaussian> labels;
        for (const auto& part : t.scheme->columns[0])
            labels.push_back(*part.label);
        for (const auto& lambda : labels) {
            v.require(!okubo_convertible(middle_convolution(t, lambda)), "eigenvalue " + lambda.str());
            ++checked;
        }
        v.require(okubo_convertible(middle_convolution(t, pick_generic(labels))), "generic lambda");
        ++checked;
    }
    v.notes << " rigid family checks " << checked;
    return v;
}

Verdict tables()
{
    Verdict v;
    const std::vector<int> expected0{3, 4, 5, 7};
    const std::vector<int> expected2{4, 4, 5, 5, 6, 6, 6, 7, 8, 9, 10, 12, 14};
    for (const auto& [idx, max_ord, max_points, expected] :
         {std::tuple{0, 6, 4, expected0}, std::tuple{-2, 12, 5, expected2}}) {
        const auto found = enumerate_basic(idx, max_ord, max_points);
        const auto cmp = compare_with_table(idx, max_ord, max_points);
        std::multiset<int> got, want(expected.begin(), expected.end());
        for (const auto& m : found)
            got.insert(ord(m) + oidx(m));
        v.require(found.size() == expected.size(), "count for index " + std::to_string(idx));
        v.require(cmp.matched, "table rows for index " + std::to_string(idx));
        v.require(got == want, "ONF ranks for index " + std::to_string(idx));
        v.notes << " idx " << idx << ": " << found.size() << " types";
    }
    return v;
}

PartitionTuple rigid_type(std::size_t n)
{
    const std::string ones(n, '1');
    return parse_spectral_type(ones + "," + ones + "," + std::to_string(n - 1) + "1");
}

Verdict reduction()
{
    Verdict v;
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto m = rigid_type(n);
        v.require(ord(katz_reduce(m).final_type) == 1, "katz_reduce " + format_spectral_type(m));
        const auto r = reduce_yokoyama_matrix(System{rigid_family_tuple(n)});
        v.require(r.reached_rank_one, "yokoyama rank 1 from " + format_spectral_type(m));
        for (const auto& s : r.stages)
            v.require(s.idx == 2, "idx 2 at every stage");
        v.notes << " " << format_spectral_type(m) << ": " << r.stages.size() - 1 << " steps";
    }
    return v;
}

Verdict d4_bridge()
{
    Verdict v;
    const auto t = d4_basic_tuple();
    const PartitionTuple type = spectral_type(*t.scheme);
    v.require(format_spectral_type(canonical_type(type)) == "11,11,11,11", "basic type 11,11,11,11");
    v.require(is_basic(type) && index_of_rigidity(t) == 0, "basic with idx 0");
    std::vector<Gaussian> labels;
    for (const auto& part : t.scheme->columns[0])
        labels.push_back(*part.label);
    const Gaussian lambda = pick_generic(labels);
    const auto m = middle_convolution(t, lambda);
    v.require(okubo_convertible(m), "mc_lambda is of Okubo type");
    const RiemannScheme s = m.scheme ? *m.scheme : infer_scheme(m);
    v.require(verify_scheme(m, s), "scheme verified");
    const std::string result = format_spectral_type(canonical_type(spectral_type(s)));
    v.require(result == "111,21,21,21", "type 111,21,21,21");
    v.notes << " lambda " << lambda.str() << " gives rank " << m.rank() << " type " << result;
    return v;
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        std::function<Verdict()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "hypergeometric extension", hypergeometric_extension, 1},
        {2, "identity suite", identity_suite, 300},
        {3, "Yokoyama/Katz equivalence", yokoyama_katz, 300},
        {4, "mc on images", mc_by_images, 300},
        {5, "Okubo convertibility of mc", okubo_criterion, 300},
        {6, "table reproduction", tables, 600},
        {7, "reduction to rank one", reduction, 300},
        {8, "D4 bridge", d4_bridge, 300},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.notes << " [exception: " << e.what() << "]";
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            v.pass = false;
            v.notes << " [over the " << c.limit_seconds << " s limit]";
        }
        all = all && v.pass;
        std::cout << "criterion " << c.number << " (" << c.name << "): " << (v.pass ? "PASS" : "FAIL") << " in "
                  << seconds << " s." << v.notes.str() << std::endl;
    }
    std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << std::endl;
    return all ? 0 : 1;
}
