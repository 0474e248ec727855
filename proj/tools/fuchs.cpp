// Command-line front end for the fuchs library.

#include "fuchs/error.hpp"
#include "fuchs/io.hpp"
#include "fuchs/reduce.hpp"
#include "fuchs/spectral.hpp"
#include "fuchs/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace fuchs;

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string ops;
    std::string script;
    std::string mode = "katz";
    std::string level = "matrix";
    std::string which = "all";
    std::string type;
    std::string to;
    std::string declared;
    std::uint64_t seed = 1;
    std::size_t count = 10;
    std::size_t bound = 4;
    int idx = 0;
    int max_ord = 6;
    int max_points = 4;
    bool json = false;
};

Json describe(const System& s)
{
    Json j{{"form", std::holds_alternative<OkuboSystem>(s) ? "onf" : "scf"},
           {"rank", system_rank(s)},
           {"idx", system_idx(s)}};
    if (const auto& scheme = system_scheme(s))
        j["scheme"] = format_scheme(*scheme);
    return j;
}

void emit(const Options& opt, const Json& report)
{
    if (!opt.output.empty())
        write_json_file(opt.output, report);
}

int cmd_apply(Options opt)
{
    std::vector<Op> ops;
    if (!opt.script.empty()) {
        const Json script = read_json_file(opt.script);
        const auto is_text = [&](const char* key) { return script.contains(key) && script.at(key).is_string(); };
        if (!script.is_object() || !is_text("input") || !script.contains("ops") || !script.at("ops").is_array())
            throw Error(ErrorKind::Parse, "a script holds \"input\", \"ops\" and optionally \"output\"");
        opt.input = script.at("input").get<std::string>();
        if (is_text("output") && opt.output.empty())
            opt.output = script.at("output").get<std::string>();
        for (const auto& j : script.at("ops"))
            ops.push_back(op_from_json(j));
    } else if (!opt.ops.empty()) {
        ops = read_ops(opt.ops);
    }
    if (opt.input.empty() || opt.output.empty())
        throw Error(ErrorKind::InvalidArgument, "apply needs --input and --output (or a --script)");

    System s = system_from_json(read_json_file(opt.input));
    std::ofstream log(opt.output + ".log.jsonl");
    for (std::size_t k = 0; k < ops.size(); ++k) {
        Op resolved;
        try {
            s = apply_op(s, ops[k], &resolved);
        } catch (const Error& e) {
            throw Error(e.kind(), "op " + std::to_string(k + 1) + " (" + op_name(ops[k]) + "): " + e.detail());
        }
        Json line = to_json(resolved);
        line["after"] = describe(s);
        log << line.dump() << '\n';
        std::cout << "op " << k + 1 << " " << op_name(ops[k]) << ": rank " << system_rank(s) << ", idx "
                  << system_idx(s) << '\n';
    }
    write_json_file(opt.output, to_json(s));
    return 0;
}

Json stage_json(const ReductionStage& s)
{
    Json j{{"rank", s.rank}, {"idx", s.idx}, {"type", format_spectral_type(s.type)}, {"note", s.note}};
    if (s.scheme)
        j["scheme"] = format_scheme(*s.scheme);
    return j;
}

// A reduction input is a system file, a bare scheme file or a --type string.
struct ReduceInput {
    std::optional<System> system;
    std::optional<RiemannScheme> scheme;
    std::optional<PartitionTuple> type;
};

ReduceInput load_reduce_input(const Options& opt)
{
    ReduceInput in;
    if (!opt.type.empty()) {
        in.type = parse_spectral_type(opt.type);
        return in;
    }
    if (opt.input.empty())
        throw Error(ErrorKind::InvalidArgument, "reduce needs --input or --type");
    const Json j = read_json_file(opt.input);
    if (j.is_object() && j.contains("points")) {
        in.scheme = scheme_from_json(j);
        return in;
    }
    in.system = system_from_json(j);
    if (const auto& s = system_scheme(*in.system))
        in.scheme = *s;
    return in;
}

RiemannScheme scheme_of(ReduceInput& in)
{
    if (!in.scheme) {
        if (!in.system)
            throw Error(ErrorKind::SchemeUnavailable, "a bare spectral type has no eigenvalue labels");
        in.scheme = infer_scheme(std::visit(
            [](const auto& v) {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, OkuboSystem>)
                    return scf_from_onf(v);
                else
                    return v;
            },
            *in.system));
    }
    return *in.scheme;
}

int cmd_reduce(const Options& opt)
{
    ReduceInput in = load_reduce_input(opt);
    ReductionReport r;
    if (opt.level == "matrix") {
        if (!in.system)
            throw Error(ErrorKind::InvalidArgument, "matrix level needs a system file");
        if (opt.mode == "katz") {
            const System& s = *in.system;
            r = reduce_katz_matrix(std::holds_alternative<OkuboSystem>(s) ? scf_from_onf(std::get<OkuboSystem>(s))
                                                                          : std::get<SchlesingerTuple>(s));
        } else {
            r = reduce_yokoyama_matrix(*in.system);
        }
    } else if (opt.mode == "katz") {
        r = reduce_katz_scheme(in.type ? *in.type : PartitionTuple{scheme_of(in).columns});
    } else {
        r = reduce_yokoyama_scheme(scheme_of(in));
    }

    Json report{{"mode", opt.mode}, {"level", opt.level}, {"stages", Json::array()}};
    for (std::size_t k = 0; k < r.stages.size(); ++k) {
        const auto& s = r.stages[k];
        report["stages"].push_back(stage_json(s));
        std::cout << "stage " << k << ": rank " << s.rank << ", idx " << s.idx << ", type "
                  << format_spectral_type(s.type);
        if (!s.note.empty())
            std::cout << " [" << s.note << "]";
        std::cout << '\n';
    }
    report["reached_rank_one"] = r.reached_rank_one;
    if (r.reached_rank_one)
        std::cout << "reached rank 1\n";
    if (r.stuck_at) {
        report["stuck_at"] = *r.stuck_at;
        report["stuck_type_in_tables"] = r.stuck_type_in_tables;
        std::cout << "stopped at basic type " << *r.stuck_at
                  << (r.stuck_type_in_tables ? " (listed in the index 0 / -2 tables)" : "") << '\n';
    }
    emit(opt, report);
    return 0;
}

int cmd_verify(const Options& opt)
{
    VerifyOptions v;
    v.seed = opt.seed;
    v.count = opt.count;
    v.size_bound = opt.bound;
    const auto report = run_verify(v);

    Json out{{"seed", opt.seed}, {"count", opt.count}, {"bound", opt.bound}, {"checks", Json::array()}};
    for (const auto& c : report.checks) {
        out["checks"].push_back(
            {{"instance", c.instance}, {"identity", c.identity}, {"passed", c.passed}, {"detail", c.detail}});
        if (!c.passed || opt.json)
            std::cout << (c.passed ? "pass " : "FAIL ") << "instance " << c.instance << " " << c.identity << ": "
                      << c.detail << '\n';
    }
    for (const auto& name : identity_names()) {
        std::size_t total = 0, ok = 0;
        for (const auto& c : report.checks)
            if (c.identity == name) {
                ++total;
                ok += c.passed;
            }
        std::cout << name << ": " << ok << "/" << total << '\n';
    }
    out["failures"] = report.failures();
    emit(opt, out);
    std::cout << (report.all_passed() ? "all identities hold" : "identity failures: " +
                                                                     std::to_string(report.failures()))
              << '\n';
    return report.all_passed() ? 0 : 3;
}

int cmd_tables(const Options& opt)
{
    struct Bounds {
        const char* name;
        int idx, max_ord, max_points;
    };
    const std::vector<Bounds> bounds{{"idx0", 0, 6, 4}, {"idx-2", -2, 12, 5}};
    Json report = Json::object();
    bool all = true;
    bool any = false;
    for (const auto& s : bounds) {
        if (opt.which != "all" && opt.which != s.name)
            continue;
        any = true;
        const auto check = compare_with_table(s.idx, s.max_ord, s.max_points);
        std::cout << "index " << s.idx << " (ord <= " << s.max_ord << ", <= " << s.max_points << " points)\n";
        std::size_t matched = 0;
        Json rows = Json::array();
        for (const auto& row : check.rows) {
            std::cout << "  " << row.basic << " | ord " << row.ord << " | " << row.onf_ord << " |";
            for (const auto& a : row.onf)
                std::cout << " " << a;
            std::cout << " | " << row.status << '\n';
            matched += row.status == "matched";
            rows.push_back(
                {{"basic", row.basic}, {"ord", row.ord}, {"onf_ord", row.onf_ord}, {"onf", row.onf}, {"status", row.status}});
        }
        std::cout << "  " << matched << " rows matched" << (check.matched ? "" : ", table MISMATCH") << '\n';
        report[s.name] = {{"matched", check.matched}, {"rows", rows}};
        all = all && check.matched;
    }
    if (!any)
        throw Error(ErrorKind::InvalidArgument, "--which takes idx0, idx-2 or all");
    emit(opt, report);
    return all ? 0 : 3;
}

System load_system(const Options& opt)
{
    if (opt.input.empty())
        throw Error(ErrorKind::InvalidArgument, "--input is required");
    return system_from_json(read_json_file(opt.input));
}

int cmd_idx(const Options& opt)
{
    if (!opt.type.empty()) {
        const auto m = parse_spectral_type(opt.type);
        std::cout << "idx " << idx_spec(m) << "\nord " << ord(m) << "\nd_max " << d_max(m) << "\noidx " << oidx(m)
                  << "\nbasic " << (is_basic(m) ? "yes" : "no") << '\n';
        return 0;
    }
    const System s = load_system(opt);
    std::cout << "idx " << system_idx(s) << "\nrank " << system_rank(s) << '\n';
    return 0;
}

int cmd_scheme(const Options& opt)
{
    const System s = load_system(opt);
    const SchlesingerTuple t = std::holds_alternative<OkuboSystem>(s) ? scf_from_onf(std::get<OkuboSystem>(s))
                                                                     : std::get<SchlesingerTuple>(s);
    if (!opt.declared.empty()) {
        const RiemannScheme declared = scheme_from_json(read_json_file(opt.declared));
        const bool ok = verify_scheme(t, declared);
        std::cout << (ok ? "scheme verified" : "scheme does NOT match the residues") << '\n';
        return ok ? 0 : 3;
    }
    const RiemannScheme scheme = t.scheme ? *t.scheme : infer_scheme(t);
    std::cout << format_scheme(scheme) << '\n' << "type " << format_spectral_type(spectral_type(scheme)) << '\n';
    emit(opt, to_json(scheme));
    return 0;
}

int cmd_convert(const Options& opt)
{
    const System s = load_system(opt);
    std::string to = opt.to;
    if (to.empty())
        to = std::holds_alternative<OkuboSystem>(s) ? "scf" : "onf";
    System out;
    if (to == "onf")
        out = apply_op(s, OpToOnf{});
    else if (to == "scf")
        out = apply_op(s, OpToScf{});
    else
        throw Error(ErrorKind::InvalidArgument, "--to takes onf or scf");
    if (opt.output.empty())
        std::cout << to_json(out).dump(2) << '\n';
    else
        write_json_file(opt.output, to_json(out));
    return 0;
}

int cmd_enumerate(const Options& opt)
{
    const auto found = enumerate_basic(opt.idx, opt.max_ord, opt.max_points);
    Json rows = Json::array();
    for (const auto& m : found) {
        const int o = ord(m);
        std::cout << format_spectral_type(m) << " | ord " << o << " | onf ord " << o + oidx(m) << '\n';
        rows.push_back({{"type", format_spectral_type(m)}, {"ord", o}, {"onf_ord", o + oidx(m)}});
    }
    std::cout << found.size() << " basic types\n";
    emit(opt, rows);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Katz middle convolution and Yokoyama extension/restriction on Fuchsian systems"};
    app.require_subcommand(1);
    Options opt;

    auto* apply = app.add_subcommand("apply", "apply an operation log to a system");
    apply->add_option("--input", opt.input, "SCF or ONF file");
    apply->add_option("--ops", opt.ops, "operations, JSON lines or a JSON array");
    apply->add_option("--script", opt.script, "JSON object with input, ops and output");
    apply->add_option("--output", opt.output, "result file; a .log.jsonl sidecar is written next to it");

    auto* reduce = app.add_subcommand("reduce", "reduce to rank one, reporting every step");
    reduce->add_option("--input", opt.input, "system or scheme file");
    reduce->add_option("--type", opt.type, "spectral type such as 11,11,11 (katz scheme level)");
    reduce->add_option("--mode", opt.mode)->check(CLI::IsMember({"katz", "yokoyama"}));
    reduce->add_option("--level", opt.level)->check(CLI::IsMember({"matrix", "scheme"}));
    reduce->add_option("--output", opt.output, "JSON report");

    auto* verify = app.add_subcommand("verify", "check the operator identities on seeded random instances");
    verify->add_option("--seed", opt.seed);
    verify->add_option("--count", opt.count);
    verify->add_option("--bound", opt.bound, "maximal rank of the instances");
    verify->add_option("--output", opt.output, "JSON report");
    verify->add_flag("--verbose", opt.json, "print every check");

    auto* tables = app.add_subcommand("tables", "reproduce the basic-type tables");
    tables->add_option("--which", opt.which)->check(CLI::IsMember({"idx0", "idx-2", "all"}));
    tables->add_option("--output", opt.output, "JSON report");

    auto* idx = app.add_subcommand("idx", "index of rigidity of a system or a spectral type");
    idx->add_option("--input", opt.input);
    idx->add_option("--type", opt.type);

    auto* scheme = app.add_subcommand("scheme", "print the Riemann scheme or verify a declared one");
    scheme->add_option("--input", opt.input);
    scheme->add_option("--verify", opt.declared, "scheme file to check against the residues");
    scheme->add_option("--output", opt.output);

    auto* convert = app.add_subcommand("convert", "convert between Schlesinger and Okubo form");
    convert->add_option("--input", opt.input);
    convert->add_option("--output", opt.output);
    convert->add_option("--to", opt.to)->check(CLI::IsMember({"onf", "scf"}));

    auto* enumerate = app.add_subcommand("enumerate", "list indivisible basic spectral types");
    enumerate->add_option("--idx", opt.idx);
    enumerate->add_option("--max-ord", opt.max_ord);
    enumerate->add_option("--max-points", opt.max_points);
    enumerate->add_option("--output", opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(apply))
            return cmd_apply(opt);
        if (app.got_subcommand(reduce))
            return cmd_reduce(opt);
        if (app.got_subcommand(verify))
            return cmd_verify(opt);
        if (app.got_subcommand(tables))
            return cmd_tables(opt);
        if (app.got_subcommand(idx))
            return cmd_idx(opt);
        if (app.got_subcommand(scheme))
            return cmd_scheme(opt);
        if (app.got_subcommand(convert))
            return cmd_convert(opt);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
