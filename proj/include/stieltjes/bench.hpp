#ifndef STIELTJES_BENCH_HPP
#define STIELTJES_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/generators.hpp"
#include "stieltjes/hankel.hpp"
#include "stieltjes/moments.hpp"

namespace stieltjes {

// Conditioning benchmark: Delta_{0,k} through the exact fraction-free path
// and through the same elimination in double precision, row by row.
struct BenchRow {
    int k;
    Rational exact;
    std::string exact_decimal;
    double approx;
    double rel_error;
};

struct BenchReport {
    std::string family;
    int order;
    std::uint64_t seed;
    std::vector<BenchRow> rows;
    double exact_seconds;
    double float_seconds;
};

// Hilbert moments s_k = 1/(k+1): bounded support, all Delta_0 positive, and
// notoriously ill-conditioned Hankel matrices.
inline MomentSequence hilbert_moments(int order) {
    std::vector<Rational> s;
    for (int k = 0; k <= 2 * order; ++k) s.push_back(make_rational(1, k + 1));
    return MomentSequence(Rational(0), Rational(0), std::move(s));
}

// Small random integer moments; all intermediates fit a double exactly for
// small k, so the float path is expected to report zero error there.
inline MomentSequence random_integer_moments(int order, std::uint64_t seed) {
    Lcg rng(seed);
    std::vector<Rational> s;
    for (int k = 0; k <= 2 * order; ++k) s.push_back(Rational(rng.range(-9, 9)));
    return MomentSequence(Rational(-rng.range(0, 9)), Rational(rng.range(-9, 9)), std::move(s));
}

inline BenchReport bench_conditioning(int order, const std::string& family,
                                      std::uint64_t seed = 0) {
    if (order < 1) throw domain_error("bench", "order must be at least 1");
    MomentSequence ms = family == "random" ? random_integer_moments(order, seed)
                        : family == "hilbert"
                            ? hilbert_moments(order)
                            : throw domain_error("bench", "unknown family \"" + family + "\"");

    BenchReport report{family, order, seed, {}, 0.0, 0.0};

    using clock = std::chrono::steady_clock;
    std::vector<Rational> exact;
    const auto t0 = clock::now();
    for (int k = 0; k <= order; ++k) exact.push_back(hankel_determinant(ms, 0, k));
    const auto t1 = clock::now();
    std::vector<double> approx;
    for (int k = 0; k <= order; ++k) approx.push_back(float_hankel_determinant(ms, 0, k));
    const auto t2 = clock::now();

    report.exact_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.float_seconds = std::chrono::duration<double>(t2 - t1).count();
    for (int k = 0; k <= order; ++k) {
        const Rational& e = exact[static_cast<std::size_t>(k)];
        const double a = approx[static_cast<std::size_t>(k)];
        report.rows.push_back({k, e, decimal_string(e), a, relative_error_vs_exact(a, e)});
    }
    return report;
}

}  // namespace stieltjes

#endif
