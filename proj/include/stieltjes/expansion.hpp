#ifndef STIELTJES_EXPANSION_HPP
#define STIELTJES_EXPANSION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/hankel.hpp"
#include "stieltjes/moments.hpp"

namespace stieltjes {

// Coefficients of the expansion
//   m(z) = u_0 z + w_0 + 1/(-l_1 z + 1/(u_1 z + w_1 + 1/(... - r/z)))
// Terminated (rational m): upsilon and omega run 0..N, r >= 0 present.
// Open truncation: upsilon and omega run 0..N-1, no omega_N, no r.
struct ContinuedFraction {
    std::vector<Rational> upsilon;
    std::vector<Rational> omega;
    std::vector<Rational> l;  // l_1..l_N, all positive
    std::optional<Rational> r;

    bool terminated() const { return r.has_value(); }
    int segments() const { return static_cast<int>(l.size()); }  // N
};

// Reconstructed string: length L, interior points x_1 < ... < x_N, weights
// omega_n (real) and upsilon_n (>= 0) at x_0 = 0 and the interior points,
// plus the running sums of omega (the values of the normalized
// anti-derivative between consecutive points).
struct StringData {
    bool terminated = true;
    std::optional<Rational> length;  // terminated: value = finite L, nullopt = infinite
    std::vector<Rational> x;
    std::vector<Rational> omega_w;
    std::vector<Rational> upsilon_w;
    std::vector<Rational> cumulative_w;          // cumulative_w[n] = omega_0 + ... + omega_n
    std::optional<Rational> boundary_upsilon;    // open truncation, point mass at x_N

    int points() const { return static_cast<int>(x.size()); }
};

// Zero-pattern analysis of a table: whether the data witnesses rank
// exhaustion (some Delta_{0,k} = 0 within range), the rank D in that case,
// and the kappa enumeration over Delta_{1,0..D} (terminated) or
// Delta_{1,0..K} (open).
struct MomentAnalysis {
    HankelTable table;
    bool terminated;
    int rank;  // D; meaningful only when terminated
    KappaIndex kappa;
};

namespace detail {

inline domain_error inconsistent(const std::string& what) {
    return domain_error("expansion", "inconsistent moment data: " + what);
}

}  // namespace detail

inline MomentAnalysis analyze_moments(const MomentSequence& ms) {
    HankelTable t(ms);
    const int K = ms.order();

    int first_zero = -1;
    for (int k = 0; k <= K + 1; ++k) {
        const Rational& d = t.at(0, k);
        if (d < 0)
            throw detail::inconsistent("Delta_0 at k = " + std::to_string(k) + " is " +
                                       to_string(d) + " < 0");
        if (is_zero(d) && first_zero < 0) first_zero = k;
        if (!is_zero(d) && first_zero >= 0)
            throw detail::inconsistent("Delta_0 vanishes at k = " + std::to_string(first_zero) +
                                       " but is " + to_string(d) + " at k = " + std::to_string(k));
    }

    if (first_zero < 0) {
        KappaIndex kappa = kappa_index(t, K);
        return MomentAnalysis{std::move(t), false, -1, std::move(kappa)};
    }

    const int rank = first_zero - 1;
    for (int k = rank + 1; k <= K; ++k)
        if (!is_zero(t.at(1, k)))
            throw detail::inconsistent("Delta_1 at k = " + std::to_string(k) +
                                       " is nonzero beyond rank " + std::to_string(rank));
    KappaIndex kappa = kappa_index(t, rank);
    return MomentAnalysis{std::move(t), true, rank, std::move(kappa)};
}

namespace detail {

inline const Rational& nonzero(const Rational& d, const std::string& role) {
    if (is_zero(d)) throw inconsistent(role + " denominator vanished");
    return d;
}

// u_n and w_n for n >= 1; identical in both expansion forms.
inline Rational upsilon_n(const HankelTable& t, const KappaIndex& kappa, int n) {
    const int kn = kappa.at(n), kn1 = kappa.at(n + 1);
    return t.at(-2, kn + 2) / nonzero(t.at(0, kn + 1), "upsilon") -
           t.at(-2, kn1 + 1) / nonzero(t.at(0, kn1), "upsilon");
}

inline Rational omega_n(const HankelTable& t, const KappaIndex& kappa, int n) {
    const int kn = kappa.at(n), kn1 = kappa.at(n + 1);
    return t.at(-1, kn + 1) / nonzero(t.at(1, kn), "omega") -
           t.at(-1, kn1 + 1) / nonzero(t.at(1, kn1), "omega");
}

inline Rational l_n(const HankelTable& t, const KappaIndex& kappa, int n) {
    const int kn = kappa.at(n);
    return t.at(1, kn) * t.at(1, kn) /
           nonzero(t.at(0, kn) * t.at(0, kn + 1), "segment length");
}

// Point mass of upsilon at the truncation boundary x_N, recoverable exactly
// when Delta_{1,K} = 0.
inline std::optional<Rational> boundary_upsilon(const MomentAnalysis& a) {
    if (a.terminated) return std::nullopt;
    const HankelTable& t = a.table;
    const int K = t.order();
    if (!is_zero(t.at(1, K))) return std::nullopt;
    const int kN = a.kappa.at(a.kappa.count());
    if (kN != K - 1) throw inconsistent("kappa(N) = " + std::to_string(kN) +
                                        " does not reach the truncation order");
    return t.at(-1, kN + 2) * t.at(-1, kN + 2) /
           nonzero(t.at(0, kN + 1) * t.at(0, kN + 2), "boundary weight");
}

}  // namespace detail

inline ContinuedFraction contfrac_from_analysis(const MomentAnalysis& a) {
    const HankelTable& t = a.table;
    const KappaIndex& kappa = a.kappa;
    ContinuedFraction cf;
    // In the terminated case kappa enumerates N+1 values; open: N values.
    const int N = a.terminated ? kappa.count() - 1 : kappa.count();
    const int weights = a.terminated ? N : N - 1;

    cf.upsilon.push_back(-t.at(-2, 1));  // / Delta_{0,0} = 1
    cf.omega.push_back(-t.at(-1, 1));    // / Delta_{1,0} = 1
    for (int n = 1; n <= weights; ++n) {
        Rational u = detail::upsilon_n(t, kappa, n);
        if (u < 0)
            throw detail::inconsistent("upsilon_" + std::to_string(n) + " = " + to_string(u) +
                                       " is negative");
        cf.upsilon.push_back(std::move(u));
        cf.omega.push_back(detail::omega_n(t, kappa, n));
    }
    for (int n = 1; n <= N; ++n) {
        Rational l = detail::l_n(t, kappa, n);
        if (l <= 0)
            throw detail::inconsistent("segment length l_" + std::to_string(n) + " = " +
                                       to_string(l) + " is not positive");
        cf.l.push_back(std::move(l));
    }
    if (a.terminated) {
        const int kT = kappa.at(N + 1);
        cf.r = t.at(0, kT) * t.at(0, kT + 1) /
               detail::nonzero(t.at(1, kT) * t.at(1, kT), "terminal coefficient");
        if (*cf.r < 0) throw detail::inconsistent("terminal coefficient r < 0");
    }
    return cf;
}

inline StringData string_from_analysis(const MomentAnalysis& a) {
    const HankelTable& t = a.table;
    const KappaIndex& kappa = a.kappa;
    ContinuedFraction cf = contfrac_from_analysis(a);

    StringData sd;
    sd.terminated = a.terminated;
    const int N = cf.segments();
    sd.omega_w = std::move(cf.omega);
    sd.upsilon_w = std::move(cf.upsilon);
    for (int n = 1; n <= N; ++n) {
        const int kn = kappa.at(n);
        sd.x.push_back(t.at(2, kn) / detail::nonzero(t.at(0, kn + 1), "point position"));
        if (n >= 2 && sd.x[static_cast<std::size_t>(n - 1)] <= sd.x[static_cast<std::size_t>(n - 2)])
            throw detail::inconsistent("points x_n not strictly increasing");
    }
    if (a.terminated) {
        const int kT = kappa.at(kappa.count());
        const Rational inv_length =
            t.at(0, kT + 1) / detail::nonzero(t.at(2, kT), "inverse length");
        if (inv_length < 0) throw detail::inconsistent("negative inverse length");
        if (!is_zero(inv_length)) sd.length = 1 / inv_length;
    } else {
        sd.boundary_upsilon = detail::boundary_upsilon(a);
    }
    Rational running(0);
    for (const auto& w : sd.omega_w) {
        running += w;
        sd.cumulative_w.push_back(running);
    }
    return sd;
}

inline ContinuedFraction contfrac_from_moments(const MomentSequence& ms) {
    return contfrac_from_analysis(analyze_moments(ms));
}

inline StringData string_from_moments(const MomentSequence& ms) {
    return string_from_analysis(analyze_moments(ms));
}

// One verified equation; lhs and rhs must agree exactly.
struct CheckEntry {
    std::string law;
    int index;
    Rational lhs;
    Rational rhs;

    bool ok() const { return lhs == rhs; }
    Rational residual() const { return lhs - rhs; }
};

// Cross-checks the produced coefficients against the independent determinant
// expressions:
//   (a) l_1 = Delta_{2,0}/Delta_{0,1} and the telescoped alternate for n > 1,
//   (b) u_n != 0 exactly when Delta_{1,kappa(n)+1} = 0,
//   (c) u_n + |w_n| > 0 for all interior n,
//   (d) at a kappa gap, u_n = Delta_{-1,kappa(n)+2}^2 / (Delta_{0,kappa(n)+1}
//       Delta_{0,kappa(n)+2}); with no gap, w_n = Delta_{0,kappa(n+1)}^2 /
//       (Delta_{1,kappa(n)} Delta_{1,kappa(n+1)}).
// Violations are implementation bugs, not data problems.
inline std::vector<CheckEntry> check_coefficient_laws(const ContinuedFraction& cf,
                                                      const HankelTable& t,
                                                      const KappaIndex& kappa) {
    std::vector<CheckEntry> entries;
    const int N = cf.segments();
    const int weights = static_cast<int>(cf.upsilon.size()) - 1;

    // The telescoped alternate for l_n needs kappa(n+1); in the open
    // truncation that exists only up to n = N - 1.
    const int l_upto = cf.terminated() ? N : N - 1;
    if (N >= 1)
        entries.push_back({"l-alternate", 1, cf.l[0], t.at(2, 0) / t.at(0, 1)});
    for (int n = 2; n <= l_upto; ++n)
        entries.push_back({"l-alternate", n, cf.l[static_cast<std::size_t>(n - 1)],
                           t.at(2, kappa.at(n + 1) - 1) / t.at(0, kappa.at(n + 1)) -
                               t.at(2, kappa.at(n) - 1) / t.at(0, kappa.at(n))});

    for (int n = 1; n <= weights; ++n) {
        const Rational& u = cf.upsilon[static_cast<std::size_t>(n)];
        const Rational& w = cf.omega[static_cast<std::size_t>(n)];
        const bool gap = is_zero(t.at(1, kappa.at(n) + 1));
        entries.push_back({"upsilon-gap-iff", n, Rational(is_zero(u) ? 0 : 1),
                           Rational(gap ? 1 : 0)});
        entries.push_back({"interior-nondegenerate", n,
                           Rational(u + abs_of(w) > 0 ? 1 : 0), Rational(1)});
        if (gap) {
            const int kn = kappa.at(n);
            entries.push_back({"upsilon-alternate", n, u,
                               t.at(-1, kn + 2) * t.at(-1, kn + 2) /
                                   (t.at(0, kn + 1) * t.at(0, kn + 2))});
        } else {
            entries.push_back({"omega-alternate", n, w,
                               t.at(0, kappa.at(n + 1)) * t.at(0, kappa.at(n + 1)) /
                                   (t.at(1, kappa.at(n)) * t.at(1, kappa.at(n + 1)))});
        }
    }
    for (const auto& e : entries)
        if (!e.ok())
            throw domain_error("expansion", "internal inconsistency: law " + e.law + " at n = " +
                                                std::to_string(e.index) + ": " + to_string(e.lhs) +
                                                " != " + to_string(e.rhs));
    return entries;
}

// The running-sum identities: for each point x_n,
//   sum_{j<n} omega_j = -Delta_{-1,kappa(n)+1} / Delta_{1,kappa(n)}
//   int_0^{x_n} w(x)^2 dx + sum_{j<n} upsilon_j
//       = -Delta_{-2,kappa(n)+2} / Delta_{0,kappa(n)+1}
// with the integral evaluated exactly over the piecewise-constant w.
inline std::vector<CheckEntry> cumulative_identities(const StringData& sd, const HankelTable& t,
                                                     const KappaIndex& kappa) {
    std::vector<CheckEntry> entries;
    Rational omega_sum(0);
    Rational upsilon_sum(0);
    Rational integral(0);
    Rational prev_x(0);
    for (int n = 1; n <= sd.points(); ++n) {
        omega_sum += sd.omega_w[static_cast<std::size_t>(n - 1)];
        upsilon_sum += sd.upsilon_w[static_cast<std::size_t>(n - 1)];
        const Rational& xn = sd.x[static_cast<std::size_t>(n - 1)];
        integral += omega_sum * omega_sum * (xn - prev_x);
        prev_x = xn;

        const int kn = kappa.at(n);
        entries.push_back({"omega-sum", n, omega_sum, -t.at(-1, kn + 1) / t.at(1, kn)});
        entries.push_back(
            {"energy-sum", n, integral + upsilon_sum, -t.at(-2, kn + 2) / t.at(0, kn + 1)});
    }
    return entries;
}

// Finite-rank evaluation of the mass-at-zero ratio; equals 1/L at
// k = kappa(N+1) when the data terminates.
inline Rational rho_zero_ratio(const HankelTable& t, int k) {
    if (!t.defined(0, k + 1) || !t.defined(2, k))
        throw domain_error("expansion",
                           "ratio undefined at k = " + std::to_string(k) + ": outside table");
    if (is_zero(t.at(2, k)))
        throw domain_error("expansion",
                           "ratio undefined at k = " + std::to_string(k) + ": Delta_2 = 0");
    return t.at(0, k + 1) / t.at(2, k);
}

}  // namespace stieltjes

#endif
