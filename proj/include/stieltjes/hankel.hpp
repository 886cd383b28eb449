#ifndef STIELTJES_HANKEL_HPP
#define STIELTJES_HANKEL_HPP

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/moments.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

// Fraction-free (Bareiss) determinant.  Pivot rule: first row with a nonzero
// entry in the current column, so the elimination order is the same for exact
// and floating-point scalars whenever the zero patterns agree.  Divisions are
// exact for integer scalars.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T(0)) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == T(0)) ++pivot;
            if (pivot == n) return T(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : T(-m[n - 1][n - 1]);
}

namespace detail {

// k x k Hankel matrix for family i: entry (p, q) = s_{i+p+q}.
inline std::vector<std::vector<Rational>> hankel_matrix(const MomentSequence& ms, int family,
                                                        int k) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        m[static_cast<std::size_t>(p)].reserve(static_cast<std::size_t>(k));
        for (int q = 0; q < k; ++q)
            m[static_cast<std::size_t>(p)].push_back(ms.at(family + p + q));
    }
    return m;
}

}  // namespace detail

// Exact determinant of the k x k Hankel matrix of family i.  Denominators are
// cleared to integers first, the integer Bareiss result is divided back.
inline Rational hankel_determinant(const MomentSequence& ms, int family, int k) {
    if (k == 0) return Rational(1);
    const auto m = detail::hankel_matrix(ms, family, k);
    Integer scale(1);
    for (const auto& row : m)
        for (const auto& entry : row) scale = lcm(scale, den(entry));
    std::vector<std::vector<Integer>> cleared(m.size());
    for (std::size_t p = 0; p < m.size(); ++p) {
        cleared[p].reserve(m.size());
        for (const auto& entry : m[p])
            cleared[p].push_back(num(entry) * (scale / den(entry)));
    }
    return make_rational(bareiss_determinant(std::move(cleared)),
                         pow(scale, static_cast<unsigned>(k)));
}

// The five families Delta_{i,k}, i in {-2,...,2}, each computed independently
// for every k whose entries fit the available moments:
//   max k = K+1 (i=0), K (i=1), K (i=2), K+1 (i=-1), K+2 (i=-2).
// Delta_{i,0} = 1 by convention.
class HankelTable {
public:
    static constexpr int kFamilies[5] = {-2, -1, 0, 1, 2};

    explicit HankelTable(const MomentSequence& ms) : order_(ms.order()) {
        for (int family : kFamilies) {
            auto& column = family_[index_of(family)];
            const int top = max_k(family);
            column.reserve(static_cast<std::size_t>(top) + 1);
            for (int k = 0; k <= top; ++k) column.push_back(hankel_determinant(ms, family, k));
        }
    }

    int order() const { return order_; }

    int max_k(int family) const {
        switch (family) {
            case 0: return order_ + 1;
            case 1: return order_;
            case 2: return order_;
            case -1: return order_ + 1;
            case -2: return order_ + 2;
            default: throw domain_error("hankel", "no family " + std::to_string(family));
        }
    }

    bool defined(int family, int k) const {
        return family >= -2 && family <= 2 && k >= 0 && k <= max_k(family);
    }

    const Rational& at(int family, int k) const {
        if (!defined(family, k))
            throw domain_error("hankel", "determinant (" + std::to_string(family) + ", " +
                                             std::to_string(k) + ") outside table");
        return family_[index_of(family)][static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& family(int i) const { return family_[index_of(i)]; }

private:
    static std::size_t index_of(int family) { return static_cast<std::size_t>(family + 2); }

    int order_;
    std::array<std::vector<Rational>, 5> family_;
};

inline HankelTable hankel_table(const MomentSequence& ms) { return HankelTable(ms); }

// The three quadratic couplings between adjacent families; they hold
// identically for any genuine moment sequence and serve as a test oracle.
//   central: D1_k D-1_k - D1_{k-1} D-1_{k+1} = D0_k^2
//   upper:   D2_k D0_k  - D2_{k-1} D0_{k+1}  = D1_k^2
//   lower:   D0_k D-2_k - D0_{k-1} D-2_{k+1} = D-1_k^2
struct SylvesterResidual {
    std::string relation;
    int k;
    Rational value;
};

inline std::vector<SylvesterResidual> sylvester_residuals(const HankelTable& t) {
    std::vector<SylvesterResidual> out;
    const int K = t.order();
    for (int k = 1; k <= K; ++k)
        out.push_back({"central", k,
                       t.at(1, k) * t.at(-1, k) - t.at(1, k - 1) * t.at(-1, k + 1) -
                           t.at(0, k) * t.at(0, k)});
    for (int k = 1; k <= K; ++k)
        out.push_back({"upper", k,
                       t.at(2, k) * t.at(0, k) - t.at(2, k - 1) * t.at(0, k + 1) -
                           t.at(1, k) * t.at(1, k)});
    for (int k = 1; k <= K + 1; ++k)
        out.push_back({"lower", k,
                       t.at(0, k) * t.at(-2, k) - t.at(0, k - 1) * t.at(-2, k + 1) -
                           t.at(-1, k) * t.at(-1, k)});
    return out;
}

// Increasing enumeration kappa(1), kappa(2), ... of the indices k where
// Delta_{1,k} != 0.  kappa(1) = 0 always; steps are 1 or 2 because genuine
// moment data admits no consecutive zeros in Delta_{1,.}.
class KappaIndex {
public:
    explicit KappaIndex(std::vector<int> kappa) : kappa_(std::move(kappa)) {}

    int count() const { return static_cast<int>(kappa_.size()); }

    // 1-based, matching kappa(n)
    int at(int n) const {
        if (n < 1 || n > count())
            throw domain_error("hankel", "kappa(" + std::to_string(n) + ") outside index");
        return kappa_[static_cast<std::size_t>(n - 1)];
    }

    const std::vector<int>& values() const { return kappa_; }

private:
    std::vector<int> kappa_;
};

inline KappaIndex kappa_index(const HankelTable& t, int upto) {
    if (upto < 0 || upto > t.max_k(1))
        throw domain_error("hankel", "kappa range 0.." + std::to_string(upto) + " outside table");
    std::vector<int> kappa;
    int zero_run = 0;
    for (int k = 0; k <= upto; ++k) {
        if (is_zero(t.at(1, k))) {
            if (++zero_run == 2)
                throw domain_error("hankel",
                                   "inconsistent moment data: consecutive zeros in Delta_1 at k = " +
                                       std::to_string(k - 1) + ", " + std::to_string(k));
        } else {
            zero_run = 0;
            kappa.push_back(k);
        }
    }
    return KappaIndex(std::move(kappa));
}

// Floating-point replica of the table: the same Bareiss recurrence run on
// double-converted moments, with per-entry relative error against the exact
// table (computed in exact arithmetic; doubles are rationals).
struct FloatTableEntry {
    int family;
    int k;
    double value;
    double rel_error;
};

struct FloatHankelResult {
    std::vector<FloatTableEntry> entries;
    double max_rel_error = 0.0;
};

inline double float_hankel_determinant(const MomentSequence& ms, int family, int k) {
    if (k == 0) return 1.0;
    std::vector<std::vector<double>> m(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        m[static_cast<std::size_t>(p)].reserve(static_cast<std::size_t>(k));
        for (int q = 0; q < k; ++q)
            m[static_cast<std::size_t>(p)].push_back(
                ms.at(family + p + q).convert_to<double>());
    }
    return bareiss_determinant(std::move(m));
}

inline double relative_error_vs_exact(double approx, const Rational& exact) {
    if (is_zero(exact)) return approx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (!std::isfinite(approx)) return std::numeric_limits<double>::infinity();
    const Rational err = abs_of(Rational(approx) - exact) / abs_of(exact);
    return err.convert_to<double>();
}

inline FloatHankelResult hankel_table_float(const MomentSequence& ms, const HankelTable& exact) {
    FloatHankelResult result;
    for (int family : HankelTable::kFamilies) {
        for (int k = 0; k <= exact.max_k(family); ++k) {
            const double value = float_hankel_determinant(ms, family, k);
            const double err = relative_error_vs_exact(value, exact.at(family, k));
            result.entries.push_back({family, k, value, err});
            if (err > result.max_rel_error) result.max_rel_error = err;
        }
    }
    return result;
}

inline FloatHankelResult hankel_table_float(const MomentSequence& ms) {
    return hankel_table_float(ms, hankel_table(ms));
}

}  // namespace stieltjes

#endif
