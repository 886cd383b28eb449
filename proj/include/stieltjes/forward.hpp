#ifndef STIELTJES_FORWARD_HPP
#define STIELTJES_FORWARD_HPP

#include <string>
#include <utility>
#include <vector>

#include "stieltjes/expansion.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/rational_function.hpp"

namespace stieltjes {

namespace detail {

inline domain_error invalid_string(const std::string& what) {
    return domain_error("forward", "invalid string: " + what);
}

inline void validate_string(const StringData& sd) {
    if (!sd.terminated) throw invalid_string("not terminated");
    const int N = sd.points();
    if (static_cast<int>(sd.omega_w.size()) != N + 1 ||
        static_cast<int>(sd.upsilon_w.size()) != N + 1)
        throw invalid_string("need N+1 weight pairs for N interior points");
    Rational prev(0);
    for (int n = 0; n < N; ++n) {
        const Rational& xn = sd.x[static_cast<std::size_t>(n)];
        if (xn <= prev)
            throw invalid_string("non-increasing x at point " + std::to_string(n + 1) + ": " +
                                 to_string(xn));
        prev = xn;
    }
    if (sd.length) {
        if (*sd.length <= prev)
            throw invalid_string("length " + to_string(*sd.length) + " does not exceed x_N");
    }
    for (int n = 0; n <= N; ++n) {
        const Rational& u = sd.upsilon_w[static_cast<std::size_t>(n)];
        if (u < 0)
            throw invalid_string("negative upsilon weight at n = " + std::to_string(n));
        if (n >= 1 && is_zero(u) && is_zero(sd.omega_w[static_cast<std::size_t>(n)]))
            throw invalid_string("degenerate point (upsilon = omega = 0) at n = " +
                                 std::to_string(n));
    }
}

}  // namespace detail

// Bottom-up evaluation of the node recursion: the terminal node is
// u_N z + w_N - r/z with r = 1/(L - x_N) (r = 0 for infinite length), and
// each step wraps f into u_n z + w_n + 1/(-l_{n+1} z + 1/f).
inline RationalFunction weyl_from_string(const StringData& sd) {
    detail::validate_string(sd);
    const int N = sd.points();
    const Polynomial z = Polynomial::variable();

    const Rational x_last = N > 0 ? sd.x.back() : Rational(0);
    const Rational r = sd.length ? Rational(1 / (*sd.length - x_last)) : Rational(0);

    RationalFunction f(Polynomial(std::vector<Rational>{sd.omega_w.back(), sd.upsilon_w.back()}));
    if (!is_zero(r)) f = f - RationalFunction(Polynomial(r), z);

    for (int n = N - 1; n >= 0; --n) {
        const Rational x_lo = n >= 1 ? sd.x[static_cast<std::size_t>(n - 1)] : Rational(0);
        const Rational l = sd.x[static_cast<std::size_t>(n)] - x_lo;
        if (f.is_zero()) throw detail::invalid_string("degenerate node function");
        RationalFunction g = RationalFunction(Polynomial(std::vector<Rational>{Rational(0), -l})) +
                             f.reciprocal();
        if (g.is_zero()) throw detail::invalid_string("degenerate node function");
        f = RationalFunction(Polynomial(std::vector<Rational>{
                sd.omega_w[static_cast<std::size_t>(n)],
                sd.upsilon_w[static_cast<std::size_t>(n)]})) +
            g.reciprocal();
    }
    return f;
}

// The continued fraction a terminated string induces through the node
// recursion: same weights, segment lengths l_n = x_n - x_{n-1}, and
// r = 1/(L - x_N).
inline ContinuedFraction contfrac_from_string(const StringData& sd) {
    detail::validate_string(sd);
    ContinuedFraction cf;
    cf.upsilon = sd.upsilon_w;
    cf.omega = sd.omega_w;
    Rational prev(0);
    for (const auto& xn : sd.x) {
        cf.l.push_back(xn - prev);
        prev = xn;
    }
    cf.r = sd.length ? Rational(1 / (*sd.length - prev)) : Rational(0);
    return cf;
}

// Exact evaluation of a terminated continued fraction at a complex rational
// point, bottom-up.
inline ComplexRational eval_contfrac(const ContinuedFraction& cf, const ComplexRational& z) {
    if (!cf.terminated())
        throw domain_error("forward", "evaluation requires a terminated continued fraction");
    const int N = cf.segments();
    auto scaled = [&z](const Rational& a) { return ComplexRational(a) * z; };
    auto invert = [](const ComplexRational& v) {
        if (v == ComplexRational(Rational(0)))
            throw domain_error("forward", "evaluation at pole/critical point");
        return ComplexRational(Rational(1)) / v;
    };

    ComplexRational f = scaled(cf.upsilon.back()) + ComplexRational(cf.omega.back());
    if (!is_zero(*cf.r)) f = f - ComplexRational(*cf.r) * invert(z);
    for (int n = N - 1; n >= 0; --n) {
        ComplexRational g = -scaled(cf.l[static_cast<std::size_t>(n)]) + invert(f);
        f = scaled(cf.upsilon[static_cast<std::size_t>(n)]) +
            ComplexRational(cf.omega[static_cast<std::size_t>(n)]) + invert(g);
    }
    return f;
}

struct Residual {
    std::string id;
    int index;
    Rational value;
};

struct RoundtripReport {
    bool pass = false;
    std::string stage;
    std::vector<Residual> residuals;
    RationalFunction lhs;
    RationalFunction rhs;
};

namespace detail {

inline void collect_residuals(const MomentAnalysis& a, const ContinuedFraction& cf,
                              const StringData& sd, RoundtripReport& report) {
    for (const auto& s : sylvester_residuals(a.table))
        report.residuals.push_back({"sylvester-" + s.relation, s.k, s.value});
    for (const auto& e : check_coefficient_laws(cf, a.table, a.kappa))
        report.residuals.push_back({"law-" + e.law, e.index, e.residual()});
    for (const auto& e : cumulative_identities(sd, a.table, a.kappa))
        report.residuals.push_back({"cumulative-" + e.law, e.index, e.residual()});
    // structural coupling of the two outputs: x_n = l_1 + ... + l_n
    Rational prefix(0);
    for (int n = 1; n <= sd.points(); ++n) {
        prefix += cf.l[static_cast<std::size_t>(n - 1)];
        report.residuals.push_back(
            {"x-prefix", n, sd.x[static_cast<std::size_t>(n - 1)] - prefix});
    }
}

inline bool residuals_clean(const RoundtripReport& report) {
    for (const auto& r : report.residuals)
        if (!is_zero(r.value)) return false;
    return true;
}

}  // namespace detail

// measure -> moments -> table -> string -> Weyl function, compared exactly
// against the direct partial-fraction form.  The moment order is raised until
// rank exhaustion is witnessed (Delta_{0,K+1} = 0), which happens at K = D.
inline RoundtripReport roundtrip_measure(const DiscreteMeasure& mu, int order_hint = 0) {
    validate_measure(mu);
    const int D = static_cast<int>(mu.points.size());

    int order = order_hint > 0 ? order_hint : 0;
    MomentSequence ms = moments_from_measure(mu, order);
    while (!is_zero(hankel_determinant(ms, 0, order + 1))) {
        if (++order > D + 2)
            throw domain_error("forward", "rank exhaustion not witnessed by order " +
                                              std::to_string(order - 1));
        ms = moments_from_measure(mu, order);
    }

    const MomentAnalysis a = analyze_moments(ms);
    const ContinuedFraction cf = contfrac_from_analysis(a);
    const StringData sd = string_from_analysis(a);

    RoundtripReport report;
    report.lhs = weyl_from_string(sd);
    report.rhs = weyl_from_measure(mu);
    detail::collect_residuals(a, cf, sd, report);

    if (!detail::residuals_clean(report)) {
        report.stage = "laws";
    } else if (!ratfun_equal(report.lhs, report.rhs)) {
        report.stage = "compare";
    } else {
        report.pass = true;
        report.stage = "complete";
    }
    return report;
}

// string -> Weyl function -> moments -> string again; all fields must come
// back exactly.
inline RoundtripReport roundtrip_string(const StringData& sd) {
    RoundtripReport report;
    report.lhs = weyl_from_string(sd);

    const int order = report.lhs.den().degree();
    const MomentSequence ms = moments_from_rational(report.lhs, order);
    const MomentAnalysis a = analyze_moments(ms);
    if (!a.terminated) {
        report.stage = "analysis";
        return report;
    }
    const ContinuedFraction cf = contfrac_from_analysis(a);
    const StringData back = string_from_analysis(a);
    report.rhs = weyl_from_string(back);
    detail::collect_residuals(a, cf, back, report);

    const bool fields_equal = back.terminated == sd.terminated && back.length == sd.length &&
                              back.x == sd.x && back.omega_w == sd.omega_w &&
                              back.upsilon_w == sd.upsilon_w &&
                              back.cumulative_w == sd.cumulative_w;
    if (!detail::residuals_clean(report)) {
        report.stage = "laws";
    } else if (!fields_equal) {
        report.stage = "compare";
    } else {
        report.pass = true;
        report.stage = "complete";
    }
    return report;
}

}  // namespace stieltjes

#endif
