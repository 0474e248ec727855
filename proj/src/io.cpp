#include "fuchs/io.hpp"

#include "fuchs/error.hpp"
#include "fuchs/katz.hpp"
#include "fuchs/yokoyama.hpp"

#include <fstream>
#include <sstream>

namespace fuchs {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array())
        parse_error(std::string("field \"") + key + "\" is not an array");
    return v;
}

std::size_t count_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

// Indices in files start at 1.
std::size_t index_from_json(const Json& j, const char* what)
{
    const std::size_t k = count_from_json(j, what);
    if (k == 0)
        parse_error(std::string(what) + " is 1-based, got 0");
    return k - 1;
}

std::vector<Gaussian> gaussians_from_json(const Json& j)
{
    if (!j.is_array())
        parse_error("expected an array of scalars");
    std::vector<Gaussian> out;
    for (const auto& v : j)
        out.push_back(gaussian_from_json(v));
    return out;
}

Json gaussians_to_json(const std::vector<Gaussian>& v)
{
    Json out = Json::array();
    for (const auto& z : v)
        out.push_back(to_json(z));
    return out;
}

std::optional<RiemannScheme> optional_scheme(const Json& j)
{
    if (!j.contains("scheme") || j.at("scheme").is_null())
        return std::nullopt;
    return scheme_from_json(j.at("scheme"));
}

// Wraps a decoder so that library exceptions surface as parse errors while
// our own validation errors pass through unchanged.
template <class F>
auto decode(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        parse_error(e.what());
    }
}

} // namespace

Json to_json(const Gaussian& z) { return z.str(); }

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RiemannScheme& s)
{
    Json points = Json::array({"inf"});
    for (const auto& t : s.poles)
        points.push_back(to_json(t));
    Json columns = Json::array();
    for (const auto& c : s.columns) {
        Json col = Json::array();
        for (const auto& part : c)
            col.push_back({{"value", part.label ? to_json(*part.label) : Json()}, {"mult", part.mult}});
        columns.push_back(std::move(col));
    }
    return {{"points", points}, {"columns", columns}};
}

Json to_json(const SchlesingerTuple& t)
{
    Json mats = Json::array();
    for (const auto& m : t.matrices)
        mats.push_back(to_json(m));
    Json out{{"poles", gaussians_to_json(t.poles)}, {"matrices", mats}};
    if (t.scheme)
        out["scheme"] = to_json(*t.scheme);
    return out;
}

Json to_json(const OkuboSystem& o)
{
    Json out{{"blocks", o.blocks}, {"poles", gaussians_to_json(o.poles)}, {"A", to_json(o.a)}};
    if (o.scheme)
        out["scheme"] = to_json(*o.scheme);
    return out;
}

Json to_json(const System& s)
{
    return std::visit([](const auto& v) { return to_json(v); }, s);
}

Gaussian gaussian_from_json(const Json& j)
{
    if (j.is_string())
        return Gaussian::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Gaussian(j.get<long long>());
    parse_error("scalars are written as strings such as \"-1/2+3i\" or as integers");
}

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_array())
        parse_error("a matrix is an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            parse_error("matrix rows have different lengths");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = gaussian_from_json(j.at(i).at(k));
    }
    return m;
}

RiemannScheme scheme_from_json(const Json& j)
{
    return decode([&] {
        const Json& points = array_field(j, "points");
        if (points.empty() || points.at(0) != "inf")
            parse_error("the first scheme point must be \"inf\"");
        RiemannScheme s;
        for (std::size_t k = 1; k < points.size(); ++k)
            s.poles.push_back(gaussian_from_json(points.at(k)));
        const Json& columns = array_field(j, "columns");
        if (columns.size() != points.size())
            throw Error(ErrorKind::PointMismatch, "scheme has " + std::to_string(columns.size()) + " columns for " +
                                                      std::to_string(points.size()) + " points");
        for (const auto& col : columns) {
            if (!col.is_array())
                parse_error("a scheme column is an array of {value, mult}");
            Column c;
            for (const auto& part : col) {
                const int mult = static_cast<int>(count_from_json(field(part, "mult"), "mult"));
                c.push_back({gaussian_from_json(field(part, "value")), mult});
            }
            s.columns.push_back(std::move(c));
        }
        canonicalize(s);
        return s;
    });
}

SchlesingerTuple scf_from_json(const Json& j)
{
    return decode([&] {
        auto poles = gaussians_from_json(array_field(j, "poles"));
        std::vector<Matrix> mats;
        for (const auto& m : array_field(j, "matrices"))
            mats.push_back(matrix_from_json(m));
        return make_scf(std::move(poles), std::move(mats), optional_scheme(j));
    });
}

OkuboSystem onf_from_json(const Json& j)
{
    return decode([&] {
        std::vector<std::size_t> blocks;
        for (const auto& b : array_field(j, "blocks"))
            blocks.push_back(count_from_json(b, "block size"));
        auto poles = gaussians_from_json(array_field(j, "poles"));
        return make_onf(std::move(blocks), std::move(poles), matrix_from_json(field(j, "A")), optional_scheme(j));
    });
}

System system_from_json(const Json& j)
{
    if (!j.is_object())
        parse_error("a system file holds a JSON object");
    if (j.contains("blocks"))
        return onf_from_json(j);
    return scf_from_json(j);
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        parse_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        parse_error(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

namespace {

struct OpEncoder {
    Json operator()(const OpMc& op) const { return {{"op", "mc"}, {"lambda", to_json(op.lambda)}}; }
    Json operator()(const OpAdd& op) const { return {{"op", "add"}, {"mu", gaussians_to_json(op.mu)}}; }
    Json operator()(const OpSwapInf& op) const { return {{"op", "swapinf"}, {"j", op.j + 1}}; }
    Json operator()(const OpPerm& op) const
    {
        Json sigma = Json::array();
        for (auto k : op.sigma)
            sigma.push_back(k + 1);
        return {{"op", "perm"}, {"sigma", sigma}};
    }
    Json operator()(const OpExtend& op) const
    {
        return {{"op", "extend"}, {"rho1", to_json(op.rho1)}, {"rho2", to_json(op.rho2)}, {"t", to_json(op.t)}};
    }
    Json operator()(const OpRestrict& op) const
    {
        Json out{{"op", "restrict"}, {"j", op.j + 1}};
        if (op.mu1 && op.mu2) {
            out["mu1"] = to_json(*op.mu1);
            out["mu2"] = to_json(*op.mu2);
        }
        return out;
    }
    Json operator()(const OpEuler& op) const { return {{"op", "euler"}, {"lambda", to_json(op.lambda)}}; }
    Json operator()(const OpToOnf&) const { return {{"op", "onf"}}; }
    Json operator()(const OpToScf&) const { return {{"op", "scf"}}; }
};

} // namespace

Json to_json(const Op& op) { return std::visit(OpEncoder{}, op); }

std::string op_name(const Op& op) { return to_json(op).at("op").get<std::string>(); }

Op op_from_json(const Json& j)
{
    return decode([&]() -> Op {
        const Json& name = field(j, "op");
        if (!name.is_string())
            parse_error("\"op\" must be a string");
        const std::string op = name.get<std::string>();
        if (op == "mc")
            return OpMc{gaussian_from_json(field(j, "lambda"))};
        if (op == "add")
            return OpAdd{gaussians_from_json(field(j, "mu"))};
        if (op == "swapinf")
            return OpSwapInf{index_from_json(field(j, "j"), "j")};
        if (op == "perm") {
            OpPerm p;
            for (const auto& k : array_field(j, "sigma"))
                p.sigma.push_back(index_from_json(k, "sigma entry"));
            return p;
        }
        if (op == "extend")
            return OpExtend{gaussian_from_json(field(j, "rho1")), gaussian_from_json(field(j, "rho2")),
                            gaussian_from_json(field(j, "t"))};
        if (op == "restrict") {
            OpRestrict r{index_from_json(field(j, "j"), "j"), std::nullopt, std::nullopt};
            if (j.contains("mu1") != j.contains("mu2"))
                parse_error("restrict takes both mu1 and mu2 or neither");
            if (j.contains("mu1")) {
                r.mu1 = gaussian_from_json(j.at("mu1"));
                r.mu2 = gaussian_from_json(j.at("mu2"));
            }
            return r;
        }
        if (op == "euler")
            return OpEuler{gaussian_from_json(field(j, "lambda"))};
        if (op == "onf")
            return OpToOnf{};
        if (op == "scf")
            return OpToScf{};
        parse_error("unknown op \"" + op + "\"");
    });
}

std::vector<Op> read_ops(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        parse_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::vector<Op> ops;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Json arr = decode([&] { return Json::parse(text); });
        for (const auto& j : arr)
            ops.push_back(op_from_json(j));
        return ops;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const std::exception& e) {
            parse_error(path.string() + ":" + std::to_string(number) + ": " + e.what());
        }
        ops.push_back(op_from_json(j));
    }
    return ops;
}

namespace {

SchlesingerTuple as_scf(const System& s)
{
    if (const auto* o = std::get_if<OkuboSystem>(&s))
        return scf_from_onf(*o);
    return std::get<SchlesingerTuple>(s);
}

OkuboSystem as_onf(const System& s)
{
    if (const auto* t = std::get_if<SchlesingerTuple>(&s)) {
        if (!okubo_convertible(*t))
            throw Error(ErrorKind::NotOkuboConvertible,
                        "the residues are not of Okubo type: the sum of ranks of A_j differs from n or A_0 is singular");
        return onf_from_scf(*t);
    }
    return std::get<OkuboSystem>(s);
}

OkuboSystem apply_restrict(const OkuboSystem& o, OpRestrict& op)
{
    if (op.mu1 && op.mu2)
        return restrict(o, {*op.mu1, *op.mu2, op.j});
    auto rel = quadratic_relation(o.a);
    if (!rel)
        throw Error(ErrorKind::NotQ2, "A satisfies no quadratic relation (A - mu1)(A - mu2) = 0");
    // The relation only fixes the unordered pair; take the first order whose
    // cross-check passes.
    try {
        auto out = restrict(o, {rel->first, rel->second, op.j});
        op.mu1 = rel->first;
        op.mu2 = rel->second;
        return out;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Internal || rel->first == rel->second)
            throw;
    }
    auto out = restrict(o, {rel->second, rel->first, op.j});
    op.mu1 = rel->second;
    op.mu2 = rel->first;
    return out;
}

} // namespace

System apply_op(const System& s, const Op& op, Op* resolved)
{
    Op done = op;
    System out = std::visit(
        [&](auto& v) -> System {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, OpMc>)
                return middle_convolution(as_scf(s), v.lambda);
            else if constexpr (std::is_same_v<T, OpAdd>)
                return addition(as_scf(s), v.mu);
            else if constexpr (std::is_same_v<T, OpSwapInf>)
                return swap_with_infinity(as_scf(s), v.j);
            else if constexpr (std::is_same_v<T, OpPerm>) {
                if (const auto* o = std::get_if<OkuboSystem>(&s))
                    return permute_blocks(*o, v.sigma);
                return permute(std::get<SchlesingerTuple>(s), v.sigma);
            } else if constexpr (std::is_same_v<T, OpExtend>)
                return extend_direct(as_onf(s), {v.rho1, v.rho2, v.t});
            else if constexpr (std::is_same_v<T, OpRestrict>)
                return apply_restrict(as_onf(s), v);
            else if constexpr (std::is_same_v<T, OpEuler>)
                return euler_transform(as_onf(s), v.lambda);
            else if constexpr (std::is_same_v<T, OpToOnf>)
                return as_onf(s);
            else
                return as_scf(s);
        },
        done);
    if (resolved)
        *resolved = std::move(done);
    return out;
}

std::size_t system_rank(const System& s)
{
    return std::visit([](const auto& v) { return v.rank(); }, s);
}

int system_idx(const System& s) { return index_of_rigidity(as_scf(s)); }

const std::optional<RiemannScheme>& system_scheme(const System& s)
{
    return std::visit([](const auto& v) -> const std::optional<RiemannScheme>& { return v.scheme; }, s);
}

} // namespace fuchs
