#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "stieltjes/forward.hpp"
#include "stieltjes/generators.hpp"

using namespace stieltjes;

namespace {

DiscreteMeasure dirac(std::vector<std::pair<long, long>> points) {
    DiscreteMeasure mu;
    for (auto [l, m] : points) mu.points.push_back({Rational(l), Rational(m)});
    return mu;
}

Polynomial poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

StringData make_string(std::optional<Rational> length, std::vector<Rational> x,
                       std::vector<Rational> omega, std::vector<Rational> upsilon) {
    StringData sd;
    sd.terminated = true;
    sd.length = std::move(length);
    sd.x = std::move(x);
    sd.omega_w = std::move(omega);
    sd.upsilon_w = std::move(upsilon);
    Rational running(0);
    for (const auto& w : sd.omega_w) {
        running += w;
        sd.cumulative_w.push_back(running);
    }
    return sd;
}

}  // namespace

TEST_CASE("weyl function from reference strings") {
    // L = 1, no interior points: m = -1/z
    StringData zero = make_string(Rational(1), {}, {Rational(0)}, {Rational(0)});
    CHECK(weyl_from_string(zero) == RationalFunction(poly({-1}), poly({0, 1})));

    // x_1 = 1, omega = (0,1), L infinite: m = 1/(1-z)
    StringData one = make_string(std::nullopt, {Rational(1)}, {Rational(0), Rational(1)},
                                 {Rational(0), Rational(0)});
    CHECK(weyl_from_string(one) == RationalFunction(poly({1}), poly({1, -1})));

    // x_1 = 1/2, upsilon = (0,2), L infinite: m = 2z/(1-z^2)
    StringData pm = make_string(std::nullopt, {make_rational(1, 2)}, {Rational(0), Rational(0)},
                                {Rational(0), Rational(2)});
    CHECK(weyl_from_string(pm) == RationalFunction(poly({0, 2}), poly({1, 0, -1})));
}

TEST_CASE("string validation") {
    StringData bad = make_string(Rational(1), {Rational(2), Rational(1)},
                                 {Rational(0), Rational(1), Rational(1)},
                                 {Rational(0), Rational(0), Rational(0)});
    CHECK_THROWS_WITH(weyl_from_string(bad), Catch::Matchers::ContainsSubstring("invalid string"));

    // length inside the last point
    StringData shortL = make_string(Rational(1), {Rational(2)}, {Rational(0), Rational(1)},
                                    {Rational(0), Rational(0)});
    CHECK_THROWS_WITH(weyl_from_string(shortL),
                      Catch::Matchers::ContainsSubstring("invalid string"));

    StringData open;
    open.terminated = false;
    CHECK_THROWS_WITH(weyl_from_string(open),
                      Catch::Matchers::ContainsSubstring("not terminated"));
}

TEST_CASE("continued fraction evaluation at points") {
    StringData one = make_string(std::nullopt, {Rational(1)}, {Rational(0), Rational(1)},
                                 {Rational(0), Rational(0)});
    CHECK(eval_contfrac(contfrac_from_string(one), ComplexRational(Rational(2))) ==
          ComplexRational(Rational(-1)));

    StringData zero = make_string(Rational(1), {}, {Rational(0)}, {Rational(0)});
    CHECK(eval_contfrac(contfrac_from_string(zero), ComplexRational(Rational(2))) ==
          ComplexRational(make_rational(-1, 2)));

    StringData pm = make_string(std::nullopt, {make_rational(1, 2)}, {Rational(0), Rational(0)},
                                {Rational(0), Rational(2)});
    CHECK(eval_contfrac(contfrac_from_string(pm), ComplexRational(make_rational(1, 2))) ==
          ComplexRational(make_rational(4, 3)));

    // z = 0 with a terminal mass is a pole
    CHECK_THROWS_WITH(eval_contfrac(contfrac_from_string(zero), ComplexRational(Rational(0))),
                      Catch::Matchers::ContainsSubstring("evaluation at pole"));
}

TEST_CASE("evaluation matches the assembled rational function") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        StringData sd = gen_random_string(seed, 4, 8);
        RationalFunction m = weyl_from_string(sd);
        ContinuedFraction cf = contfrac_from_string(sd);
        Lcg rng(seed + 999);
        for (int trial = 0; trial < 4; ++trial) {
            ComplexRational z(make_rational(rng.range(-9, 9), rng.range(1, 9)),
                              make_rational(rng.range(1, 9), rng.range(1, 9)));
            CHECK(eval_contfrac(cf, z) == m.evaluate(z));
        }
    }
}

TEST_CASE("herglotz sign at random upper half-plane points") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        StringData sd = gen_random_string(seed, 5, 10);
        ContinuedFraction cf = contfrac_from_string(sd);
        Lcg rng(seed * 31 + 1);
        for (int trial = 0; trial < 4; ++trial) {
            ComplexRational z(make_rational(rng.range(-12, 12), rng.range(1, 6)),
                              make_rational(rng.range(1, 12), rng.range(1, 6)));
            CHECK(eval_contfrac(cf, z).im >= 0);
        }
    }
}

TEST_CASE("measure round trips") {
    CHECK(roundtrip_measure(dirac({{0, 1}})).pass);
    CHECK(roundtrip_measure(dirac({{1, 1}, {-1, 1}})).pass);

    DiscreteMeasure four = dirac({{1, 1}, {-2, 3}, {0, 2}, {5, 1}});
    four.b = make_rational(1, 3);
    four.s_minus1 = make_rational(-2, 7);
    RoundtripReport report = roundtrip_measure(four);
    CHECK(report.pass);
    CHECK(report.stage == "complete");
    CHECK(ratfun_equal(report.lhs, report.rhs));

    DiscreteMeasure empty;
    CHECK(roundtrip_measure(empty).pass);
}

TEST_CASE("string round trips") {
    StringData one = make_string(std::nullopt, {Rational(1)}, {Rational(0), Rational(1)},
                                 {Rational(0), Rational(0)});
    CHECK(roundtrip_string(one).pass);

    // N = 0 with finite length: single terminal node
    StringData stub = make_string(Rational(3), {}, {make_rational(-1, 2)}, {Rational(2)});
    CHECK(roundtrip_string(stub).pass);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        StringData sd = gen_random_string(seed, 6, 12);
        RoundtripReport report = roundtrip_string(sd);
        INFO("seed " << seed << " stage " << report.stage);
        CHECK(report.pass);
    }
}
