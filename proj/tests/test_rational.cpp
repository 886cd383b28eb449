#include <catch2/catch_amalgamated.hpp>

#include "stieltjes/generators.hpp"
#include "stieltjes/rational.hpp"

using namespace stieltjes;

namespace {

Rational random_rational(Lcg& rng, long bound = 50) {
    return make_rational(rng.range(-bound, bound), rng.range(1, bound));
}

}  // namespace

TEST_CASE("make_rational produces canonical form") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(num(make_rational(2, 4)) == 1);
    CHECK(den(make_rational(2, 4)) == 2);

    CHECK(make_rational(0, 5) == Rational(0));
    CHECK(den(make_rational(0, 5)) == 1);

    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(num(make_rational(3, -6)) == -1);
    CHECK(den(make_rational(3, -6)) == 2);

    CHECK_THROWS_AS(make_rational(1, 0), domain_error);
    CHECK_THROWS_WITH(make_rational(1, 0), Catch::Matchers::ContainsSubstring("division by zero"));
}

TEST_CASE("string round trip") {
    CHECK(to_string(make_rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-3/9") == make_rational(-1, 3));
    CHECK(rational_from_string("42") == Rational(42));
    CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rational_from_string("a/b"), parse_error);
    CHECK_THROWS_AS(rational_from_string("1/-2"), parse_error);
    CHECK_THROWS_AS(rational_from_string(""), parse_error);

    Lcg rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational q = random_rational(rng, 1000);
        CHECK(rational_from_string(to_string(q)) == q);
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    Lcg rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!is_zero(a)) CHECK(a * (Rational(1) / a) == 1);
        CHECK(a + (-a) == 0);
    }
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(Rational(1)) == "1.00000000000000000e0");
    CHECK(decimal_string(make_rational(1, 2160), 10) == "4.629629629e-4");
    CHECK(decimal_string(make_rational(-123, 10), 5) == "-1.2300e1");
    CHECK(decimal_string(make_rational(999, 1000), 3) == "9.99e-1");
    CHECK(decimal_string(Rational(1000), 4) == "1.000e3");
}

TEST_CASE("complex rational arithmetic") {
    ComplexRational a(Rational(1), Rational(2));
    ComplexRational b(Rational(3), Rational(-1));
    CHECK(a * b == ComplexRational(Rational(5), Rational(5)));
    CHECK(a + b == ComplexRational(Rational(4), Rational(1)));
    CHECK((a / b) * b == a);
    CHECK(conj(a) == ComplexRational(Rational(1), Rational(-2)));
    CHECK_THROWS_AS(a / ComplexRational(Rational(0)), domain_error);

    Lcg rng(3);
    for (int i = 0; i < 100; ++i) {
        ComplexRational z(random_rational(rng), random_rational(rng));
        ComplexRational w(random_rational(rng), random_rational(rng));
        if (!(w == ComplexRational(Rational(0)))) CHECK((z / w) * w == z);
        CHECK(z * w == w * z);
    }
}
