#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamfix/cli.hpp"
#include "hamfix/json_io.hpp"

#include <cstdlib>
#include <sstream>

using namespace hamfix;

namespace {

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("HAMFIX_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> failing(const Json& report) {
    std::vector<std::string> out;
    for (const auto& f : report["findings"])
        if (f["status"] == "fail") out.push_back(f["check"]);
    return out;
}

}  // namespace

TEST_CASE("localize 4d on projective plane data") {
    auto r = call({"localize", "4d", fixture("cp2_xi12.json")});
    CHECK(r.code == 0);
    CHECK(r.json() == Json::parse(R"({"sum": "0"})"));
}

TEST_CASE("validate reports violations with exit 1") {
    CHECK(call({"validate", fixture("cp2_xi12.json")}).code == 0);
    auto r = call({"validate", fixture("duplicate_minimum.json")});
    CHECK(r.code == 1);
    CHECK(failing(r.json()["report"]) == std::vector<std::string>{"unique-minimum"});
    CHECK(r.json()["report"]["violations"] == 1);
}

TEST_CASE("structural and usage errors exit 2") {
    auto unknown = call({"validate", fixture("unknown_key.json")});
    CHECK(unknown.code == 2);
    CHECK(unknown.json()["error"]["kind"] == "structural");
    CHECK_FALSE(unknown.err.empty());
    CHECK(call({"validate", fixture("square.json")}).code == 2);
    CHECK(call({"validate", fixture("no_such_file.json")}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"dh", "toric", "CP2", "--xi", "2,4"}).code == 2);
    CHECK(call({"toric", "scan", "Bl9CP2"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("normalize and chi-y") {
    auto n = call({"normalize", fixture("cp2_xi12.json")});
    CHECK(n.code == 0);
    CHECK(n.json()["constant"] == "0");
    auto c = call({"chi-y", fixture("cp2_xi12.json")});
    CHECK(c.code == 0);
    CHECK(c.json()["chi_y"]["text"] == "1 - t + t^2");
}

TEST_CASE("dh and toric scans") {
    auto dh = call({"dh", "toric", "CP2", "--xi", "1,2"});
    CHECK(dh.code == 0);
    CHECK(dh.json()["dh"]["breakpoints"] == Json::parse(R"(["-3", "0", "3"])"));
    auto space = call({"dh", "toric", fixture("simplex3.json"), "--xi", "1,2,4"});
    CHECK(space.code == 0);
    CHECK(space.json()["dh"]["breakpoints"] == Json::parse(R"(["-7", "-3", "1", "9"])"));
    CHECK_FALSE(space.json().contains("report"));
    auto scan = call({"toric", "scan", "CP2"});
    CHECK(scan.code == 0);
    CHECK(scan.json()["items"].size() == 4);
    auto square = call({"toric", "scan", fixture("square.json"), "--bound", "2"});
    CHECK(square.code == 0);
    CHECK(square.json()["items"].size() == 8);
}

TEST_CASE("enumeration respects its bounds") {
    auto r = call({"enumerate-04"});
    CHECK(r.code == 0);
    int best = 0;
    auto doc = r.json();
    for (const auto& row : doc["rows"]) {
        CHECK(row["total"].get<int>() <= 8);
        CHECK(row["b2"].get<int>() <= 9);
        best = std::max(best, row["total"].get<int>());
    }
    CHECK(best == 8);
}

TEST_CASE("fano6 suite on fixtures") {
    auto good = call({"fano6", "suite", fixture("product_genus2.json")});
    CHECK(good.code == 0);
    CHECK(good.json()["witness_c1"] == -2);
    CHECK(good.json().contains("cycle"));

    auto wide = call({"fano6", "suite", fixture("wide_points.json")});
    CHECK(wide.code == 1);
    CHECK(failing(wide.json()["report"]) == std::vector<std::string>{"isolated-weights"});

    auto low = call({"fano6", "suite", fixture("low_sphere.json")});
    CHECK(low.code == 1);
    CHECK(failing(low.json()["report"]) == std::vector<std::string>{"sphere-height"});
}

TEST_CASE("fano6 graph and abc") {
    auto g = call({"fano6", "graph", fixture("product_genus2.json")});
    CHECK(g.code == 0);
    CHECK(g.json()["graph"]["min"] == "bottom");
    auto abc = call({"fano6", "abc", fixture("cp2_xi12.json")});
    CHECK(abc.code == 1);
    CHECK(failing(abc.json()["report"]) == std::vector<std::string>{"hypothesis.fourfold-minimum"});
}

TEST_CASE("pretty output parses to the same document") {
    auto plain = call({"localize", "4d", fixture("cp2_xi12.json")});
    auto pretty = call({"localize", "4d", fixture("cp2_xi12.json"), "--pretty"});
    CHECK(pretty.out != plain.out);
    CHECK(pretty.json() == plain.json());
}

TEST_CASE("output is byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"toric", "scan", "Bl3CP2", "--bound", "2"},
             {"fano6", "suite", fixture("product_genus2.json")},
             {"enumerate-04"}}) {
        CHECK(call(args).out == call(args).out);
    }
}
