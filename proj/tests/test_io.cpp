#include "doctest.h"

#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/io.hpp"
#include "fuchs/katz.hpp"

using namespace fuchs;

namespace {

Gaussian g(const char* s) { return Gaussian::parse(s); }

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("Schlesinger files round trip")
{
    auto t = rigid_family_tuple(3);
    const Json j = to_json(t);
    CHECK(j.at("scheme").at("points").at(0) == "inf");
    auto back = scf_from_json(j);
    CHECK(back.poles == t.poles);
    CHECK(back.matrices == t.matrices);
    CHECK(back.scheme == t.scheme);
    CHECK(to_json(back) == j);
    CHECK(std::holds_alternative<SchlesingerTuple>(system_from_json(j)));
}

TEST_CASE("Okubo files round trip")
{
    auto o = rank_one_onf(g("1/3"));
    const Json j = to_json(o);
    CHECK(j.dump() ==
          R"({"blocks":[1],"poles":["0"],"A":[["1/3"]],"scheme":{"points":["inf","0"],"columns":[[{"value":"-1/3","mult":1}],[{"value":"1/3","mult":1}]]}})");
    auto back = std::get<OkuboSystem>(system_from_json(j));
    CHECK(back.a == o.a);
    CHECK(back.scheme == o.scheme);
}

TEST_CASE("malformed files are parse errors")
{
    CHECK(kind_of([] { system_from_json(Json::parse(R"({"poles":["0"]})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { system_from_json(Json::parse(R"({"poles":["x"],"matrices":[[["1"]]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { system_from_json(Json::parse(R"({"poles":["0"],"matrices":[[["1","2"],["3"]]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { system_from_json(Json::parse("[1]")); }) == ErrorKind::Parse);
    // Decoding succeeds but the declared scheme is wrong.
    const auto bad = Json::parse(
        R"({"poles":["0"],"matrices":[[["1"]]],"scheme":{"points":["inf","0"],"columns":[[{"value":"2","mult":1}],[{"value":"1","mult":1}]]}})");
    CHECK(kind_of([&] { system_from_json(bad); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { op_from_json(Json::parse(R"({"op":"twist"})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { op_from_json(Json::parse(R"({"op":"swapinf","j":0})")); }) == ErrorKind::Parse);
}

TEST_CASE("operations encode with 1-based indices")
{
    const std::vector<Json> lines{
        Json::parse(R"({"op":"mc","lambda":"1/2+i"})"),
        Json::parse(R"({"op":"add","mu":["1","-2/3"]})"),
        Json::parse(R"({"op":"swapinf","j":2})"),
        Json::parse(R"({"op":"perm","sigma":[2,1]})"),
        Json::parse(R"({"op":"extend","rho1":"2","rho2":"5/2+i","t":"1"})"),
        Json::parse(R"({"op":"restrict","j":1})"),
        Json::parse(R"({"op":"restrict","j":1,"mu1":"1","mu2":"2"})"),
        Json::parse(R"({"op":"euler","lambda":"3"})"),
        Json::parse(R"({"op":"onf"})"),
        Json::parse(R"({"op":"scf"})"),
    };
    for (const auto& j : lines)
        CHECK(to_json(op_from_json(j)) == j);
    CHECK(std::get<OpSwapInf>(op_from_json(lines[2])).j == 1);
}

TEST_CASE("the extension pipeline produces the hypergeometric system")
{
    System s = rank_one_onf(g("1/3"));
    Op resolved;
    s = apply_op(s, OpExtend{g("2"), g("5/2+i"), g("1")}, &resolved);
    CHECK(system_rank(s) == 2);
    REQUIRE(system_scheme(s));
    CHECK(format_scheme(*system_scheme(s)) == "{inf: [-5/2-i]_1 [-2]_1; 0: [0]_1 [1/3]_1; 1: [0]_1 [25/6+i]_1}");
    CHECK(system_idx(s) == 2);

    // Restricting the new pole with the roots read off A recovers the input.
    auto back = apply_op(s, OpRestrict{1, std::nullopt, std::nullopt}, &resolved);
    const auto& r = std::get<OpRestrict>(resolved);
    REQUIRE(r.mu1);
    CHECK((*r.mu1 + *r.mu2) == g("9/2+i"));
    CHECK(std::get<OkuboSystem>(back).a == Matrix{{g("1/3")}});
}

TEST_CASE("mc at an eigenvalue at infinity cannot be brought to Okubo form")
{
    auto t = rigid_family_tuple(2);
    const Gaussian lambda = *t.scheme->columns[0][0].label;
    System s = apply_op(System{t}, OpMc{lambda});
    CHECK(kind_of([&] { apply_op(s, OpToOnf{}); }) == ErrorKind::NotOkuboConvertible);
    System ok = apply_op(System{t}, OpMc{g("1/7")});
    CHECK(std::holds_alternative<OkuboSystem>(apply_op(ok, OpToOnf{})));
}
