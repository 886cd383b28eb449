#ifndef STIELTJES_GENERATORS_HPP
#define STIELTJES_GENERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stieltjes/expansion.hpp"
#include "stieltjes/moments.hpp"

namespace stieltjes {

// Deterministic 64-bit linear congruential generator,
//   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64),
// draws taken as state mod n.  Chosen so instance corpora can be regenerated
// bit-identically from the seed in any language; the recurrence and the draw
// order below are part of the file-format contract (see README).
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in {0, ..., n-1}
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in {lo, ..., hi}
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

enum class MeasureSupport {
    any_real,       // lambda anywhere on the real line
    positive_only,  // lambda > 0 (classical Stieltjes data)
    with_zero,      // guarantees a point mass at lambda = 0
};

// Draw order per measure: point count; per point (numerator, denominator)
// of lambda until distinct, then (numerator, denominator) of the mass;
// then b; then s_{-1}.
inline DiscreteMeasure gen_random_measure(std::uint64_t seed, int max_points, long bound,
                                          MeasureSupport support = MeasureSupport::any_real) {
    Lcg rng(seed);
    DiscreteMeasure mu;
    int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points) + 1));
    if (support == MeasureSupport::with_zero && count == 0) count = 1;

    for (int j = 0; j < count; ++j) {
        Rational lambda;
        if (support == MeasureSupport::with_zero && j == 0) {
            lambda = 0;
        } else {
            for (;;) {
                const long p = support == MeasureSupport::positive_only ? rng.range(1, bound)
                                                                        : rng.range(-bound, bound);
                const long q = rng.range(1, bound);
                lambda = make_rational(p, q);
                bool duplicate = false;
                for (const auto& pt : mu.points) duplicate = duplicate || pt.lambda == lambda;
                if (!duplicate) break;
            }
        }
        const Rational mass = make_rational(rng.range(1, bound), rng.range(1, bound));
        mu.points.push_back({lambda, mass});
    }
    mu.b = make_rational(rng.range(0, bound), rng.range(1, bound));
    mu.s_minus1 = make_rational(rng.range(-bound, bound), rng.range(1, bound));
    return mu;
}

// Draw order per string: point count N; increments l_1..l_N; weight pair for
// n = 0 (upsilon coin + value, omega coin + value), then for each interior n
// a kind coin followed by the weight draws; finally the length coin and, when
// finite, the tail beyond x_N.  Interior points always satisfy
// upsilon_n + |omega_n| > 0.
inline StringData gen_random_string(std::uint64_t seed, int max_n, long bound) {
    Lcg rng(seed);
    auto positive = [&rng, bound] { return make_rational(rng.range(1, bound), rng.range(1, bound)); };
    auto nonzero_signed = [&rng, &positive] {
        Rational v = positive();
        return rng.below(2) == 0 ? v : Rational(-v);
    };

    StringData sd;
    sd.terminated = true;
    const int n_points = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n) + 1));

    Rational x(0);
    for (int n = 1; n <= n_points; ++n) {
        x += positive();
        sd.x.push_back(x);
    }

    sd.upsilon_w.push_back(rng.below(2) == 0 ? Rational(0) : positive());
    sd.omega_w.push_back(rng.below(2) == 0 ? Rational(0) : nonzero_signed());
    for (int n = 1; n <= n_points; ++n) {
        if (rng.below(2) == 0) {
            sd.upsilon_w.push_back(positive());
            sd.omega_w.push_back(rng.below(2) == 0 ? Rational(0) : nonzero_signed());
        } else {
            sd.upsilon_w.push_back(Rational(0));
            sd.omega_w.push_back(nonzero_signed());
        }
    }
    if (rng.below(2) == 0) sd.length = x + positive();

    Rational running(0);
    for (const auto& w : sd.omega_w) {
        running += w;
        sd.cumulative_w.push_back(running);
    }
    return sd;
}

}  // namespace stieltjes

#endif
