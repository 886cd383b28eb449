#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "stieltjes/generators.hpp"
#include "stieltjes/rational_function.hpp"

using namespace stieltjes;

namespace {

Polynomial poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

RationalFunction random_ratfun(Lcg& rng, int max_deg = 3, long bound = 9) {
    auto random_poly = [&](int deg, bool nonzero) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(rng.range(-bound, bound));
        Polynomial p{std::move(c)};
        if (nonzero && p.is_zero()) p = Polynomial(Rational(1));
        return p;
    };
    const int dd = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    const int dn = static_cast<int>(rng.below(static_cast<std::uint64_t>(dd) + 2));  // <= dd+1
    Polynomial den = random_poly(dd, true);
    while (den.degree() < dd) den = den + Polynomial::monomial(dd, Rational(1));
    return RationalFunction(random_poly(dn, false), den);
}

}  // namespace

TEST_CASE("polynomial basics") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({1, 0, 0}).degree() == 0);  // trailing zeros stripped
    CHECK(poly({0, 0, 3}).degree() == 2);
    CHECK(poly({1, 2}) * poly({1, 3}) == poly({1, 5, 6}));
    CHECK(poly({1, 2}) + poly({-1, -2}) == Polynomial());

    auto [q, r] = Polynomial::divrem(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(q == poly({1, 1}));
    CHECK(r.is_zero());

    CHECK(Polynomial::gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(Polynomial::gcd(poly({2, 2}), poly({4})) == Polynomial(Rational(1)));
    CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());

    CHECK(poly({1, 1, 1}).evaluate(Rational(2)) == 7);
}

TEST_CASE("rational function canonical form") {
    // z / z^2 reduces, denominator monic
    RationalFunction f(poly({0, 1}), poly({0, 0, 2}));
    CHECK(f.num() == poly({1}) * make_rational(1, 2));
    CHECK(f.den() == poly({0, 1}));
    CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial()), domain_error);
}

TEST_CASE("ratfun_equal is cross-multiplication") {
    RationalFunction a(poly({0, 1}), poly({0, 0, 1}));  // z/z^2
    RationalFunction b(poly({1}), poly({0, 1}));        // 1/z
    CHECK(ratfun_equal(a, b));

    CHECK_FALSE(ratfun_equal(RationalFunction(poly({1}), poly({1, -1})),
                             RationalFunction(poly({1}), poly({1, 1}))));

    CHECK(ratfun_equal(RationalFunction(poly({0, 2}), poly({1, 0, -1})),
                       RationalFunction(poly({0, -2}), poly({-1, 0, 1}))));
}

TEST_CASE("ratfun_equal is an equivalence relation on random triples") {
    Lcg rng(23);
    for (int i = 0; i < 100; ++i) {
        RationalFunction f = random_ratfun(rng);
        RationalFunction g = random_ratfun(rng);
        RationalFunction h = random_ratfun(rng);
        CHECK(ratfun_equal(f, f));
        CHECK(ratfun_equal(f, g) == ratfun_equal(g, f));
        if (ratfun_equal(f, g) && ratfun_equal(g, h)) CHECK(ratfun_equal(f, h));
        // scaling num and den by a common polynomial hits the same class
        Polynomial scale = poly({1, static_cast<long>(rng.range(1, 5))});
        CHECK(ratfun_equal(f, RationalFunction(f.num() * scale, f.den() * scale)));
    }
}

TEST_CASE("laurent expansion at infinity") {
    RationalFunction f(poly({1}), poly({1, -1}));  // 1/(1-z)
    CHECK(ratfun_laurent_at_infinity(f, 3) ==
          std::vector<Rational>{0, 0, -1, -1, -1});

    RationalFunction g(poly({-1}), poly({0, 1}));  // -1/z
    CHECK(ratfun_laurent_at_infinity(g, 2) == std::vector<Rational>{0, 0, -1, 0});

    RationalFunction h(poly({0, 2}), poly({1, 0, -1}));  // 2z/(1-z^2)
    CHECK(ratfun_laurent_at_infinity(h, 3) == std::vector<Rational>{0, 0, -2, 0, -2});
    CHECK(ratfun_laurent_at_infinity(h, 4) == std::vector<Rational>{0, 0, -2, 0, -2, 0});

    // linear growth lands in c_{-1}
    RationalFunction lin(poly({3, 2}), poly({1}));  // 2z + 3
    CHECK(ratfun_laurent_at_infinity(lin, 1) == std::vector<Rational>{2, 3, 0});

    RationalFunction bad(poly({0, 0, 1}), poly({0, 1}));  // z^2/z -> z, fine after reduction
    CHECK(ratfun_laurent_at_infinity(bad, 0) == std::vector<Rational>{1, 0});

    CHECK_THROWS_WITH(ratfun_laurent_at_infinity(RationalFunction(poly({0, 0, 1}), poly({1})), 2),
                      Catch::Matchers::ContainsSubstring("no Herglotz-compatible expansion"));
}

TEST_CASE("laurent remainder vanishes to the expanded order") {
    Lcg rng(5);
    const RationalFunction z = RationalFunction::variable();
    for (int i = 0; i < 60; ++i) {
        RationalFunction f = random_ratfun(rng);
        const int order = static_cast<int>(rng.below(4));
        std::vector<Rational> c = ratfun_laurent_at_infinity(f, order);

        RationalFunction partial = RationalFunction(Polynomial(c[1])) +
                                   RationalFunction(Polynomial(c[0])) * z;
        RationalFunction zpow(Rational(1));
        for (int k = 1; k <= order; ++k) {
            zpow = zpow / z;
            partial += RationalFunction(Polynomial(c[static_cast<std::size_t>(k) + 1])) * zpow;
        }
        RationalFunction remainder = f - partial;
        std::vector<Rational> tail = ratfun_laurent_at_infinity(remainder, order);
        for (const auto& coeff : tail) CHECK(is_zero(coeff));
    }
}
