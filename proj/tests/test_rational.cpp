#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamfix/polynomial.hpp"
#include "hamfix/rational.hpp"
#include "hamfix/report.hpp"

#include <random>

using namespace hamfix;

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(3, 6) == make_rational(1, 2));
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts p and p/q only") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    for (const char* bad : {"", "1.5", "+1", "1/", "/2", "1/0", "a", "1/-2", " 1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("integer helpers") {
    CHECK(is_integer(make_rational(6, 3)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK(to_long(make_rational(-12, 4)) == -3);
    CHECK_THROWS_AS(to_long(make_rational(1, 2)), std::invalid_argument);
}

TEST_CASE("round trip through text") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        long q = d(rng);
        if (q == 0) continue;
        Rational r = make_rational(d(rng), q);
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("polynomial basics") {
    Polynomial p({1, -1, 1});
    CHECK(p.degree() == 2);
    CHECK(p.to_string("y") == "1 - y + y^2");
    CHECK(p(2) == 3);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial(std::vector<Rational>{0, 0}).is_zero());
    CHECK(Polynomial::shifted_power(2, 3) == Polynomial({-8, 12, -6, 1}));
    CHECK(Polynomial::monomial(make_rational(1, 2), 3).coefficient(3) == make_rational(1, 2));
    CHECK(Polynomial::monomial(5, 2).coefficient(7) == 0);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9), deg(0, 4);
    auto random_poly = [&] {
        std::vector<Rational> cs;
        for (long i = 0, n = deg(rng); i <= n; ++i) cs.push_back(make_rational(c(rng), 1 + std::abs(c(rng))));
        return Polynomial(cs);
    };
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(), b = random_poly(), e = random_poly();
        CHECK(a * (b + e) == a * b + a * e);
        CHECK(a - a == Polynomial());
        Rational x = make_rational(c(rng), 1 + std::abs(c(rng)));
        CHECK((a * b)(x) == a(x) * b(x));
        CHECK((a + b)(x) == a(x) + b(x));
    }
}

TEST_CASE("report status") {
    Report r;
    CHECK(r.overall() == Status::pass);
    r.pass("a");
    r.inconclusive("b", "missing data");
    CHECK(r.overall() == Status::inconclusive);
    CHECK(r.passed());
    r.fail("c", "broken", {"x"});
    CHECK(r.overall() == Status::fail);
    CHECK(r.violation_count() == 1);
    CHECK(r.find("c")->witnesses == std::vector<std::string>{"x"});
    CHECK(r.find("zzz") == nullptr);
    Report s;
    s.append(r);
    CHECK(s.findings().size() == 3);
}
