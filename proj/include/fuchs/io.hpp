#pragma once

#include "fuchs/okubo.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace fuchs {

using Json = nlohmann::ordered_json;

// A file holds either form; ONF files are recognised by their "blocks" key.
using System = std::variant<SchlesingerTuple, OkuboSystem>;

Json to_json(const Gaussian& z);
Json to_json(const Matrix& m);
Json to_json(const RiemannScheme& s);
Json to_json(const SchlesingerTuple& t);
Json to_json(const OkuboSystem& o);
Json to_json(const System& s);

// All readers throw Error(Parse) on malformed input. Validation errors of the
// decoded objects keep their own kinds.
Gaussian gaussian_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
RiemannScheme scheme_from_json(const Json& j);
SchlesingerTuple scf_from_json(const Json& j);
OkuboSystem onf_from_json(const Json& j);
System system_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// Operation log entries. Pole indices are 1-based in files, as in the
// mathematical notation; the structs store them 0-based.
struct OpMc { Gaussian lambda; };
struct OpAdd { std::vector<Gaussian> mu; };
struct OpSwapInf { std::size_t j = 0; };
struct OpPerm { std::vector<std::size_t> sigma; };
struct OpExtend { Gaussian rho1, rho2, t; };
// mu1, mu2 default to the roots of the quadratic relation of A.
struct OpRestrict {
    std::size_t j = 0;
    std::optional<Gaussian> mu1, mu2;
};
struct OpEuler { Gaussian lambda; };
struct OpToOnf {};
struct OpToScf {};

using Op = std::variant<OpMc, OpAdd, OpSwapInf, OpPerm, OpExtend, OpRestrict, OpEuler, OpToOnf, OpToScf>;

Json to_json(const Op& op);
Op op_from_json(const Json& j);
std::string op_name(const Op& op);

// Reads JSON lines (blank lines skipped) or a single JSON array.
std::vector<Op> read_ops(const std::filesystem::path& path);

// Applies one operation, converting between the two forms when the
// operation needs the other one. `resolved` receives the op with every
// defaulted parameter filled in, so that replaying it is deterministic.
System apply_op(const System& s, const Op& op, Op* resolved = nullptr);

std::size_t system_rank(const System& s);
int system_idx(const System& s);
const std::optional<RiemannScheme>& system_scheme(const System& s);

} // namespace fuchs
