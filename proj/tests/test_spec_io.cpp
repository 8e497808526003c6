#include "doctest.h"

#include "semiwalk/error.hpp"
#include "semiwalk/families.hpp"
#include "semiwalk/semigroup.hpp"
#include "semiwalk/spec_io.hpp"

using namespace semiwalk;

namespace {

ErrorCode code_of(const std::string& json, bool checked = true) {
    try {
        parse_spec(json, checked);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error for " << json);
    return ErrorCode::Unavailable;
}

}  // namespace

TEST_CASE("table specification") {
    // right-zero band: xy = y
    const LoadedSpec L = parse_spec(R"({
        "kind": "table",
        "generators": ["x", "y"],
        "table": [[0, 1], [0, 1]],
        "generator_elements": [0, 1],
        "labels": ["r0", "r1"]
    })");
    CHECK_FALSE(L.family);
    CHECK(L.semigroup.size() == 2);
    CHECK(L.semigroup.generator_names() == std::vector<std::string>{"x", "y"});
    CHECK(L.semigroup.label(L.semigroup.generator(0)) == "r0");
    CHECK(L.semigroup.product(L.semigroup.parse("xy")) == L.semigroup.generator(1));
}

TEST_CASE("transformation specification keeps map order") {
    const LoadedSpec L = parse_spec(R"({
        "kind": "transformations",
        "states": 3,
        "maps": {"b": [0, 0, 0], "a": [1, 2, 2]}
    })");
    const Semigroup& S = L.semigroup;
    CHECK(S.generator_names() == std::vector<std::string>{"b", "a"});
    // b and ab are constant 0, ba is constant 1, aa and baa are constant 2
    CHECK(S.size() == 4);
    CHECK(S.product(S.parse("ab")) == S.generator(0));
}

TEST_CASE("family specification") {
    const LoadedSpec a = parse_spec(R"({"kind": "family", "family": "rees_zp", "n": 2, "p": 2})");
    const LoadedSpec b = parse_spec(R"({"kind": "family", "family": "rees_zp:2,2"})");
    REQUIRE(a.family);
    REQUIRE(b.family);
    CHECK(a.family->name == "rees_zp:2,2");
    CHECK(isomorphic(a.semigroup, b.semigroup));
    CHECK(isomorphic(a.semigroup, rees_zp(2, 2)));
    CHECK(parse_spec(R"({"kind": "family", "family": "klein"})").semigroup.size() == klein().size());
}

TEST_CASE("malformed specifications") {
    CHECK(code_of("{") == ErrorCode::Parse);
    CHECK(code_of("[1, 2]") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "groupoid"})") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "table", "generators": ["a"]})") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "table", "generators": ["a"], "table": [[0, 1]]})") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "table", "generators": ["a"], "table": [[3]]})") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "family", "family": "nope"})") == ErrorCode::Parse);
    CHECK(code_of(R"({"kind": "family", "family": "tsetlin", "n": "3"})") == ErrorCode::Parse);
    CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), Error);
}

TEST_CASE("non-associative tables") {
    const std::string bad = R"({"kind": "table", "generators": ["a", "b"], "table": [[1, 0], [0, 0]]})";
    CHECK(code_of(bad) == ErrorCode::NotAssociative);
    const LoadedSpec L = parse_spec(bad, false);
    CHECK(L.semigroup.size() == 2);
    CHECK_FALSE(L.semigroup.is_associative());
}
