#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hamfix;
using support::point;
using support::surface;

namespace {

FixedPointData cp3() {
    auto P = LatticePolytope::from_points(3, {{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
    return fixed_data_from_polytope(P, CircleDirection({1, 2, 4}));
}

FixedPointData polygon_data(const std::string& name, IntVec xi) {
    return fixed_data_from_polytope(catalog_entry(name).polytope, CircleDirection(xi));
}

}  // namespace

TEST_CASE("equivariant c1 of a bundle over the sphere") {
    CHECK(c1_equivariant_sphere(1, {-1}, {1}) == 2);
    CHECK(c1_equivariant_sphere(1, {0}, {0}) == 0);
    CHECK_THROWS_AS(c1_equivariant_sphere(2, {0}, {1}), InconsistentDataError);
    CHECK_THROWS(c1_equivariant_sphere(1, {0, 1}, {1}));
}

TEST_CASE("c1 is unchanged by swapping poles and negating weights") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> w(-6, 6), k(1, 4), r(1, 3);
    int checked = 0;
    while (checked < 200) {
        int kk = k(rng);
        std::vector<int> a, b;
        for (int i = 0, n = r(rng); i < n; ++i) {
            a.push_back(w(rng));
            b.push_back(w(rng));
        }
        long diff = 0;
        for (size_t i = 0; i < a.size(); ++i) diff += b[i] - a[i];
        if (diff % kk != 0) continue;
        std::vector<int> na, nb;
        for (int x : a) na.push_back(-x);
        for (int x : b) nb.push_back(-x);
        CHECK(c1_equivariant_sphere(kk, a, b) == c1_equivariant_sphere(kk, nb, na));
        ++checked;
    }
}

TEST_CASE("local terms") {
    CHECK(alpha(point("p", 0, {1, 1, -1})) == -1);
    CHECK(alpha(point("p", 0, {-1, -1, 2})) == 0);
    CHECK(alpha(point("p", 0, {1, 2, 4})) == make_rational(7, 8));
    CHECK(beta(surface("s", 0, {1, -1}, 1, {0, 0})) == 0);
    CHECK(beta(surface("s", 0, {-1, 2}, 2, {1, 0})) == 0);
    CHECK(beta(surface("s", 0, {1, -1}, 0, {3, -7})) == -2 - 3 + 7);
    CHECK_THROWS_AS(alpha(point("p", 0, {1, 1})), PreconditionError);
    CHECK_THROWS_AS(beta(point("p", 0, {1, 1, 1})), PreconditionError);
}

TEST_CASE("six-dimensional sum on the projective space") {
    auto d = cp3();
    std::vector<Rational> alphas;
    for (const auto& c : d.components) alphas.push_back(alpha(c));
    CHECK(alphas == std::vector<Rational>{make_rational(7, 8), -1, make_rational(-1, 4), make_rational(3, 8)});
    CHECK(abbv_sum_6d(d) == 0);
}

TEST_CASE("six-dimensional sum on the cube") {
    auto P = LatticePolytope::from_points(3, {{-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1},
                                              {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}, {1, 1, 1}});
    auto d = fixed_data_from_polytope(P, CircleDirection({1, 2, 4}));
    CHECK(d.components.size() == 8);
    CHECK(abbv_sum_6d(d) == 0);
}

TEST_CASE("a lone point does not localise to zero") {
    FixedPointData d;
    d.half_dim = 3;
    d.components = {point("p", 0, {1, 1, 1})};
    CHECK(abbv_sum_6d(d) == 3);
    FixedComponent f;
    f.id = "f";
    f.kind = ComponentKind::fourfold;
    f.weights = {1};
    d.components.push_back(f);
    CHECK_THROWS_AS(abbv_sum_6d(d), PreconditionError);
}

TEST_CASE("four-dimensional sum") {
    auto d = polygon_data("CP2", {1, 2});
    CHECK(abbv_sum_4d(d) == 0);

    FixedPointData two;
    two.half_dim = 2;
    two.components = {surface("a", -1, {1}, 0, {5}), surface("b", 1, {-1}, 0, {-5})};
    CHECK(abbv_sum_4d(two) == 0);

    FixedPointData one;
    one.half_dim = 2;
    one.components = {point("p", 0, {1, 1})};
    CHECK(abbv_sum_4d(one) == 1);
}

TEST_CASE("four-dimensional sum vanishes on every polygon and direction") {
    for (const auto& e : delpezzo_catalog())
        for (const auto& xi : primitive_directions(2, 5)) CHECK(abbv_sum_4d(fixed_data_from_polytope(e.polytope, xi)) == 0);
}

TEST_CASE("weight-sum normalisation") {
    FixedPointData d;
    d.half_dim = 2;
    d.relative_fano = true;
    d.components = {point("min", 3, {1, 1}), point("max", 7, {-1, -1})};
    auto n = weight_sum_normalize(d);
    CHECK(n.constant == -5);
    CHECK(n.data.components[0].H == -2);
    CHECK(n.data.components[1].H == 2);

    d.components = {point("min", -2, {1, 1}), point("max", 1, {-1, -1})};
    try {
        weight_sum_normalize(d);
        FAIL("expected a mismatch");
    } catch (const WeightSumMismatch& e) {
        CHECK(e.constant() == 0);
        REQUIRE(e.residuals().size() == 1);
        CHECK(e.residuals()[0].first == "max");
        CHECK(e.residuals()[0].second == 1);
    }

    d.relative_fano = false;
    CHECK_THROWS_AS(weight_sum_normalize(d), PreconditionError);
}

TEST_CASE("normalisation undoes any shift") {
    std::mt19937 rng(17);
    auto base = cp3();
    for (int i = 0; i < 50; ++i) {
        Rational c = support::random_rational(rng, -10, 10);
        auto n = weight_sum_normalize(shifted(base, c));
        CHECK(n.constant == -c);
        for (size_t k = 0; k < base.components.size(); ++k) CHECK(n.data.components[k].H == base.components[k].H);
    }
}

TEST_CASE("converse check only looks at index 0 and 2") {
    CHECK(check_converse_fano(polygon_data("CP2", {1, 2})).passed());

    FixedPointData d;
    d.half_dim = 3;
    d.components = {point("min", -7, {1, 2, 4}), point("mid", 5, {1, -1, -1}), point("top", 10, {-1, -1, -1})};
    // mid and top have two and three negative weights, so their wrong H is out of scope
    CHECK(check_converse_fano(d).passed());
    d.components[0].H = -6;
    Report r = check_converse_fano(d);
    REQUIRE(r.violation_count() == 1);
    CHECK(r.violations()[0].witnesses == std::vector<std::string>{"min"});
}

TEST_CASE("gradient sphere areas") {
    FixedPointData d;
    d.half_dim = 2;
    d.components = {point("a", -3, {1, 2}), point("b", 1, {-2, 1})};
    GradientEdge e{"a", "b", 2, {}};
    CHECK(gradient_sphere_area(e, d) == 2);
    d.components[1].H = 0;
    e.weight = 1;
    CHECK(gradient_sphere_area(e, d) == 3);
}

TEST_CASE("toric gradient spheres have the lattice length as area") {
    for (const auto& entry : delpezzo_catalog()) {
        for (const auto& xi : primitive_directions(2, 3)) {
            auto d = fixed_data_from_polytope(entry.polytope, xi);
            for (const auto& e : d.edges) {
                Rational area = gradient_sphere_area(e, d);
                CHECK(area * e.weight == d.at(e.top).H - d.at(e.bottom).H);
                CHECK(area >= 1);
                CHECK(area <= 3);
            }
        }
    }
}

TEST_CASE("chi_y") {
    CHECK(chi_y(cp3()) == Polynomial({1, -1, 1, -1}));
    CHECK(chi_y(polygon_data("CP2", {1, 2})) == Polynomial({1, -1, 1}));

    FixedPointData d = support::four_surfaces(3);
    CHECK(chi_y(d).coefficient(0) == -2);

    FixedComponent f;
    f.id = "f";
    f.kind = ComponentKind::fourfold;
    f.weights = {1};
    FixedPointData with_fourfold;
    with_fourfold.half_dim = 3;
    with_fourfold.components = {f, point("max", 3, {-1, -1, -1})};
    CHECK_THROWS_AS(chi_y(with_fourfold), PreconditionError);
    with_fourfold.components[0].b2 = 4;
    CHECK(chi_y(with_fourfold) == Polynomial({1, -4, 1}) + Polynomial({0, 0, 0, -1}));
}

TEST_CASE("chi_y of polygon data counts vertices") {
    for (const auto& e : delpezzo_catalog()) {
        long V = static_cast<long>(e.polytope.vertices().size());
        for (const auto& xi : primitive_directions(2, 4))
            CHECK(chi_y(fixed_data_from_polytope(e.polytope, xi)) == Polynomial({1, -(V - 2), 1}));
    }
}

TEST_CASE("Todd genus and c1c2") {
    auto t = todd_and_c1c2(cp3());
    CHECK(t.todd == 1);
    CHECK(t.c1c2 == 24);

    auto g = todd_and_c1c2(support::four_surfaces(2));
    CHECK(g.todd == -1);
    CHECK(g.c1c2 == -24);

    auto more = cp3();
    more.components.push_back(point("extra", 100, {-1, 2, -3}));
    CHECK(todd_and_c1c2(more).todd == 1);
    CHECK_THROWS_AS(todd_and_c1c2(polygon_data("CP2", {1, 2})), PreconditionError);
}

TEST_CASE("Euler pairing at an isolated minimum") {
    CHECK(euler_pairing_at_min(1, 1) == -1);
    CHECK(euler_pairing_at_min(1, 2) == make_rational(-1, 2));
    CHECK(euler_pairing_at_min(3, 5) == make_rational(-1, 15));
}
