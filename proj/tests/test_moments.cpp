#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "stieltjes/generators.hpp"
#include "stieltjes/moments.hpp"

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

}  // namespace

TEST_CASE("moments of reference measures") {
    MomentSequence one = moments_from_measure(dirac({{1, 1}}), 2);
    CHECK(one.s() == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(one.s_minus2() == 0);

    MomentSequence zero = moments_from_measure(dirac({{0, 1}}), 1);
    CHECK(zero.s() == std::vector<Rational>{1, 0, 0});

    MomentSequence pm = moments_from_measure(dirac({{1, 1}, {-1, 1}}), 2);
    CHECK(pm.s() == std::vector<Rational>{2, 0, 2, 0, 2});
}

TEST_CASE("measure validation") {
    DiscreteMeasure dup = dirac({{1, 1}, {1, 2}});
    CHECK_THROWS_WITH(moments_from_measure(dup, 1),
                      Catch::Matchers::ContainsSubstring("invalid measure"));

    DiscreteMeasure nonpos = dirac({{1, 0}});
    CHECK_THROWS_WITH(moments_from_measure(nonpos, 1),
                      Catch::Matchers::ContainsSubstring("invalid measure"));

    DiscreteMeasure negb = dirac({{1, 1}});
    negb.b = -1;
    CHECK_THROWS_WITH(weyl_from_measure(negb),
                      Catch::Matchers::ContainsSubstring("invalid measure"));
}

TEST_CASE("weyl function of reference measures") {
    CHECK(weyl_from_measure(dirac({{1, 1}})) == RationalFunction(poly({1}), poly({1, -1})));
    CHECK(weyl_from_measure(dirac({{0, 1}})) == RationalFunction(poly({-1}), poly({0, 1})));
    CHECK(weyl_from_measure(dirac({{1, 1}, {-1, 1}})) ==
          RationalFunction(poly({0, 2}), poly({1, 0, -1})));

    // empty measure: m = -s_{-2} z - s_{-1}
    DiscreteMeasure empty;
    empty.b = make_rational(1, 2);
    empty.s_minus1 = Rational(-3);
    CHECK(weyl_from_measure(empty) ==
          RationalFunction(Polynomial(std::vector<Rational>{Rational(3), make_rational(1, 2)})));
}

TEST_CASE("moments read off a rational Weyl function") {
    MomentSequence a = moments_from_rational(RationalFunction(poly({1}), poly({1, -1})), 1);
    CHECK(a.s_minus2() == 0);
    CHECK(a.s_minus1() == 0);
    CHECK(a.s() == std::vector<Rational>{1, 1, 1});

    MomentSequence b = moments_from_rational(RationalFunction(poly({-1}), poly({0, 1})), 1);
    CHECK(b.s() == std::vector<Rational>{1, 0, 0});

    MomentSequence c = moments_from_rational(RationalFunction(poly({0, 2}), poly({1, 0, -1})), 2);
    CHECK(c.s() == std::vector<Rational>{2, 0, 2, 0, 2});

    CHECK_THROWS_WITH(moments_from_rational(RationalFunction(poly({0, 0, 1}), poly({1})), 1),
                      Catch::Matchers::ContainsSubstring("no Herglotz-compatible expansion"));
}

TEST_CASE("the two moment routes agree on random measures") {
    Lcg rng(41);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        DiscreteMeasure mu = gen_random_measure(seed, 5, 10);
        const int order = static_cast<int>(rng.below(4)) + 1;
        MomentSequence direct = moments_from_measure(mu, order);
        MomentSequence via_weyl = moments_from_rational(weyl_from_measure(mu), order);
        CHECK(direct.s_minus2() == via_weyl.s_minus2());
        CHECK(direct.s_minus1() == via_weyl.s_minus1());
        CHECK(direct.s() == via_weyl.s());
        CHECK(direct.s_minus2() <= 0);
    }
}

TEST_CASE("positive support gives nonnegative moments") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        DiscreteMeasure mu = gen_random_measure(seed, 5, 10, MeasureSupport::positive_only);
        MomentSequence ms = moments_from_measure(mu, 3);
        for (const auto& sk : ms.s()) CHECK(sk >= 0);
    }
}
