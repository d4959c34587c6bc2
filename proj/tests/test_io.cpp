#include "dicrit/error.hpp"
#include "dicrit/io/commands.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dicrit;
using io::Json;
using dicrit::testing::P;

namespace {

ParseError parse_error_of(auto&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error raised");
    return ParseError("", "");
}

Json run(const std::string& c, const std::string& a, const std::string& input, io::Options o = {})
{
    return io::run_command(c, a, Json::parse(input), o);
}

}  // namespace

TEST_CASE("polynomial literal")
{
    auto p = io::parse_polynomial(Json::parse(
        R"({"vars":["x","y"],"field":{"type":"Q"},"terms":[{"c":"−1","e":[3,0]},{"c":"1","e":[0,2]}]})"));
    CHECK(p.poly == P("y^2-x^3"));
    p = io::parse_polynomial(Json::parse(R"({"vars":["x","y"],"field":{"type":"Fp","p":7},"terms":[{"c":"1/2","e":[1,0]}]})"));
    CHECK(p.poly.field()->characteristic() == 7);
    CHECK(p.poly.coefficient({1, 0}) == algebra::Scalar::from_int(p.poly.field(), 4));
    auto back = io::parse_polynomial(io::polynomial_to_json(P("y^2-x^3/2"), {"x", "y"}));
    CHECK(back.poly == P("y^2-x^3/2"));
    CHECK(io::parse_polynomial(Json::parse(R"({"vars":["x","y"],"expr":"(x+y)^2"})")).poly == P("x^2+2*x*y+y^2"));
}

TEST_CASE("parse errors name the offending field")
{
    auto e = parse_error_of([] { io::parse_monomial_ideal(Json::parse(R"({"gens":[[1,0]]})")); });
    CHECK(e.field() == "vars");
    CHECK(e.reason() == "required");
    e = parse_error_of([] { io::parse_field(Json::parse(R"({"type":"Fp","p":4})")); });
    CHECK(e.field() == "p");
    CHECK(e.reason() == "not prime");
    e = parse_error_of(
        [] { io::parse_polynomial(Json::parse(R"({"vars":["x"],"terms":[{"c":"1","e":[1,2]}]})")); });
    CHECK(e.field() == "e");
    e = parse_error_of([] { io::parse_polynomial(Json::parse(R"({"vars":["x"],"terms":[{"c":"abc","e":[1]}]})")); });
    CHECK(e.field() == "c");
    e = parse_error_of([] { io::parse_text("{not json"); });
    CHECK(e.field() == "input");
    e = parse_error_of([] { run("mono", "nope", R"({"vars":["x"],"gens":[[1]]})"); });
    CHECK(e.field() == "action");
}

TEST_CASE("valuation literals")
{
    auto Q = algebra::Field::rationals();
    auto v = io::parse_divisorial(Json::parse(R"({"type":"monomial","w":[2,3]})"), Q);
    CHECK(v.monomial_weights() == std::make_pair(2, 3));
    auto w = io::parse_divisorial(Json::parse(R"({"type":"qdt","steps":[{"chart":0,"center":"0"},{"chart":1,"center":"0"}]})"), Q);
    CHECK(v == w);
    CHECK(io::divisorial_to_json(v)["weights"] == Json::array({2, 3}));
    CHECK(parse_error_of([&] { io::parse_valuation(Json::parse(R"({"type":"monomial","w":[2,4]})"), Q); }).field() == "w");
}

TEST_CASE("command payloads")
{
    auto r = run("mono", "rees-vals", R"({"vars":["x","y"],"gens":[[2,0],[1,1],[0,3]]})");
    CHECK(r["rees_valuations"] == Json::parse("[[[1,1],2],[[2,1],3]]"));

    r = run("pencil", "dicriticals",
            R"({"a":{"vars":["x","y"],"expr":"y"},"b":{"vars":["x","y"],"expr":"x"}})");
    REQUIRE(r["dicriticals"].size() == 1);
    CHECK(r["dicriticals"][0]["class"] == "sharp");
    CHECK(r["dicriticals"][0]["residue"]["num"] == Json::array({"0", "1"}));

    r = run("example83", "", R"({"m":3,"forms":"X,Y"})");
    CHECK(r["count"] == 2);

    r = run("gauss", "eval",
            R"({"valuation":{"type":"monomial","w":[1,1]},
                "element":{"components":[{"n":-1,"f":{"vars":["x","y"],"expr":"x"}},
                                         {"n":0,"f":{"vars":["x","y"],"expr":"y^2"}}]}})");
    CHECK(r["value"] == 1);

    r = run("mono", "closure", R"({"vars":["x","y"],"gens":[[2,0],[0,3]]})");
    CHECK(r["closure"]["gens"] == Json::parse("[[2,0],[1,2],[0,3]]"));

    r = run("pencil", "construct-b", R"({"U":[{"type":"monomial","w":[1,1]},{"type":"monomial","w":[1,2]}],"n":[1,1]})");
    CHECK(r["s"] == 1);
    CHECK(r["b"]["text"] == "x*y");

    r = run("pencil", "verify-reduction",
            R"({"J":{"a":{"vars":["x","y"],"expr":"x^3"},"b":{"vars":["x","y"],"expr":"y^3"}},
                "U":[{"type":"monomial","w":[1,1]}],"n":[2],"t":1})");
    CHECK(r["holds"] == false);
}

TEST_CASE("identical requests give identical payloads")
{
    const std::string in = R"({"ideal":{"vars":["x","y"],"gens":[[2,0],[1,1],[0,2]]}})";
    io::Options o;
    o.seed = 5;
    CHECK(run("mono", "reduction", in, o).dump() == run("mono", "reduction", in, o).dump());
}
