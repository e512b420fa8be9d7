#include <doctest.h>

#include <random>

#include "subduction/surd.hpp"

using namespace subduction;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, -5).den() == 1);
    CHECK(Rational(28, 96) == Rational(7, 24));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational overflow is reported") {
    Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * Rational(3), std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX / 2) * Rational(1, 3), std::overflow_error);
}

TEST_CASE("surd_sqrt canonical forms") {
    CHECK(surd_sqrt(Rational(1, 3)) == SurdSum::term(Rational(1, 3), 3));
    CHECK(surd_sqrt(Rational(4, 9)) == SurdSum(Rational(2, 3)));
    CHECK(surd_sqrt(Rational(28, 96)) == SurdSum::term(Rational(1, 12), 42));
    CHECK(surd_sqrt(Rational(0)).is_zero());
    CHECK_THROWS_AS(surd_sqrt(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("surd products and sums") {
    SurdSum a = SurdSum::term(Rational(1, 3), 3);
    CHECK(a * a == SurdSum(Rational(1, 3)));
    SurdSum b = SurdSum::term(Rational(-1, 8), 2);
    CHECK(a * b == SurdSum::term(Rational(-1, 24), 6));
    CHECK(SurdSum(Rational(1, 96)) + SurdSum(Rational(27, 96)) == SurdSum(Rational(7, 24)));
    CHECK(SurdSum::term(1, 6) * SurdSum::term(1, 10) == SurdSum::term(2, 15));
    CHECK((a - a).is_zero());
}

TEST_CASE("surd division by single terms") {
    SurdSum one(1);
    SurdSum r = one / (SurdSum(4) * surd_sqrt(18));
    CHECK(r == SurdSum::term(Rational(1, 24), 2));
    CHECK_THROWS_AS(one / (SurdSum(1) + SurdSum::term(1, 2)), std::domain_error);
}

TEST_CASE("surd floats") {
    CHECK(SurdSum::term(Rational(1, 3), 3).to_double() == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(SurdSum(Rational(7, 24)).to_double() == doctest::Approx(0.2916666666666667));
    CHECK(SurdSum::term(Rational(-1, 24), 6).to_double() == doctest::Approx(-0.10206207261596575).epsilon(1e-12));
}

TEST_CASE("surd text round trip") {
    SurdSum x = SurdSum(Rational(-3, 7)) + SurdSum::term(Rational(-1, 24), 6) + SurdSum::term(Rational(5, 2), 2);
    CHECK(x.to_string() == "-3/7 + 5/2*sqrt(2) - 1/24*sqrt(6)");
    CHECK(SurdSum::parse(x.to_string()) == x);
    CHECK(SurdSum::parse("-1/24*sqrt(6)") == SurdSum::term(Rational(-1, 24), 6));
    CHECK(SurdSum::parse("sqrt(8)") == SurdSum::term(2, 2));
    CHECK(SurdSum::parse("0").is_zero());
    CHECK_THROWS(SurdSum::parse("1/2*sqr(3)"));
}

TEST_CASE("random ring axioms and square roots") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> rad(1, 30);
    auto rand_surd = [&] {
        SurdSum s;
        for (int t = 0; t < 3; ++t) s += SurdSum::term(Rational(num(rng), den(rng)), rad(rng));
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        SurdSum a = rand_surd();
        SurdSum b = rand_surd();
        SurdSum c = rand_surd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(SurdSum::parse(a.to_string()) == a);
    }
    std::uniform_int_distribution<int> big(0, 9999);
    std::uniform_int_distribution<int> bigd(1, 9999);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational x(big(rng), bigd(rng));
        SurdSum r = surd_sqrt(x);
        CHECK(r * r == SurdSum(x));
    }
}
