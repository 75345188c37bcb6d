#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "hamfix/json_io.hpp"

using namespace hamfix;

namespace {

Json cp2_json() {
    return Json::parse(R"({
      "half_dim": 2, "relative_fano": true, "fano": true,
      "components": [
        {"id": "a", "kind": "point", "H": -3, "weights": [1, 2]},
        {"id": "b", "kind": "point", "H": "0", "weights": [-1, 1]},
        {"id": "c", "kind": "point", "H": 3, "weights": [-2, -1]}
      ],
      "edges": [{"bottom": "a", "top": "c", "weight": 2}]
    })");
}

}  // namespace

TEST_CASE("rationals accept integers and p/q strings only") {
    CHECK(rational_from_json(Json(3)) == 3);
    CHECK(rational_from_json(Json("-6/4")) == make_rational(-3, 2));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), StructuralError);
    CHECK_THROWS_AS(rational_from_json(Json("x")), StructuralError);
    CHECK_THROWS_AS(rational_from_json(Json(true)), StructuralError);
    CHECK(to_json(make_rational(6, -4)) == Json("-3/2"));
    CHECK(to_json(Rational(5)) == Json("5"));
}

TEST_CASE("fixed point data reads strictly") {
    auto d = fixed_point_data_from_json(cp2_json());
    CHECK(d.half_dim == 2);
    CHECK(d.relative_fano);
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[2].weights == std::vector<int>{-2, -1});
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].weight == 2);

    auto extra = cp2_json();
    extra["colour"] = "red";
    CHECK_THROWS_AS(fixed_point_data_from_json(extra), StructuralError);
    auto extra_comp = cp2_json();
    extra_comp["components"][0]["mass"] = 1;
    CHECK_THROWS_AS(fixed_point_data_from_json(extra_comp), StructuralError);
    auto floaty = cp2_json();
    floaty["components"][0]["H"] = -3.0;
    CHECK_THROWS_AS(fixed_point_data_from_json(floaty), StructuralError);
    auto no_dim = cp2_json();
    no_dim.erase("half_dim");
    CHECK_THROWS_AS(fixed_point_data_from_json(no_dim), StructuralError);
    auto bad_kind = cp2_json();
    bad_kind["components"][1]["kind"] = "line";
    CHECK_THROWS_AS(fixed_point_data_from_json(bad_kind), StructuralError);
}

TEST_CASE("fixed point data round trips") {
    for (const auto& entry : delpezzo_catalog()) {
        for (const auto& xi : primitive_directions(2, 2)) {
            if (!is_generic(entry.polytope, xi)) continue;
            auto d = fixed_data_from_polytope(entry.polytope, xi);
            auto j = to_json(d);
            CHECK(to_json(fixed_point_data_from_json(j)) == j);
        }
    }
    auto g = support::four_surfaces(2);
    g.components[0].area = make_rational(7, 3);
    g.components[1].fibre_class = true;
    g.edges.push_back({"bottom", "top", 2, std::vector<std::array<int, 2>>{{1, -2}}});
    auto j = to_json(g);
    CHECK(j["components"][0]["area"] == "7/3");
    auto back = fixed_point_data_from_json(j);
    CHECK(back.components[0].area == make_rational(7, 3));
    CHECK(back.components[1].fibre_class);
    REQUIRE(back.edges.back().interior.has_value());
    CHECK(to_json(back) == j);
}

TEST_CASE("polytopes read and round trip") {
    auto P = polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[1,0],[0,1],[-1,-1]]})"));
    CHECK(P.vertices().size() == 3);
    CHECK(polytope_from_json(to_json(P)).vertices() == P.vertices());
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0,0],[1,1],[2,2]]})")),
                    StructuralError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0,0],[1,0.5],[0,1]]})")),
                    StructuralError);
}

TEST_CASE("documents accept wrapped and bare forms") {
    auto bare = parse_document(cp2_json());
    CHECK(bare.kind == PayloadKind::fixed_point_data);
    auto wrapped = parse_document(wrap_document(PayloadKind::fixed_point_data, cp2_json()));
    CHECK(wrapped.kind == PayloadKind::fixed_point_data);
    CHECK(wrapped.payload == bare.payload);
    CHECK(parse_document(Json::parse(R"({"dim": 2, "vertices": [[1,0],[0,1],[-1,-1]]})")).kind ==
          PayloadKind::polytope);
    Json req = {{"fixed_point_data", cp2_json()}, {"cycle", {"a", "b"}}};
    CHECK(parse_document(req).kind == PayloadKind::suite_request);
    auto sr = suite_request_from_json(req);
    REQUIRE(sr.cycle.has_value());
    CHECK(sr.cycle->size() == 2);

    Json bad_version = {{"schema_version", "2"}, {"fixed_point_data", cp2_json()}};
    CHECK_THROWS_AS(parse_document(bad_version), StructuralError);
    Json two = {{"schema_version", "1"}, {"fixed_point_data", cp2_json()}, {"polytope", Json::object()}};
    CHECK_THROWS_AS(parse_document(two), StructuralError);
    CHECK_THROWS_AS(parse_document(Json::parse(R"({"what": 1})")), StructuralError);
    CHECK_THROWS_AS(parse_document(Json::array()), StructuralError);
}

TEST_CASE("reports serialise with status and witnesses") {
    Report r;
    r.pass("a");
    r.fail("b", "too big", {"p", "q"});
    r.inconclusive("c", "skipped");
    auto j = to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["violations"] == 1);
    REQUIRE(j["findings"].size() == 3);
    CHECK(j["findings"][1]["witnesses"] == Json::array({"p", "q"}));
    CHECK(j["findings"][2]["status"] == "inconclusive");
}

TEST_CASE("serialisation is deterministic") {
    auto d = fixed_data_from_polytope(catalog_entry("Bl3CP2").polytope, CircleDirection({1, 2}));
    CHECK(to_json(d).dump() == to_json(fixed_data_from_polytope(catalog_entry("Bl3CP2").polytope,
                                                               CircleDirection({1, 2})))
                                   .dump());
    auto dh = dh_function_toric(catalog_entry("CP2").polytope, CircleDirection({1, 2}));
    auto j = to_json(dh);
    CHECK(j["breakpoints"].front() == "-3");
    CHECK(j["breakpoints"].back() == "3");
}
