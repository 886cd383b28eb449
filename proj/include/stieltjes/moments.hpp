#ifndef STIELTJES_MOMENTS_HPP
#define STIELTJES_MOMENTS_HPP

#include <utility>
#include <vector>

#include "stieltjes/rational.hpp"
#include "stieltjes/rational_function.hpp"

namespace stieltjes {

// Spectral data: finitely many poles with positive masses, the slope b >= 0
// of the linear term (s_{-2} = -b) and the constant s_{-1}.
struct PointMass {
    Rational lambda;
    Rational mass;
};

struct DiscreteMeasure {
    std::vector<PointMass> points;
    Rational b{0};
    Rational s_minus1{0};
};

inline void validate_measure(const DiscreteMeasure& mu) {
    if (mu.b < 0)
        throw domain_error("moments", "invalid measure: b = " + to_string(mu.b) + " < 0");
    for (std::size_t j = 0; j < mu.points.size(); ++j) {
        if (mu.points[j].mass <= 0)
            throw domain_error("moments", "invalid measure: mass " +
                                              to_string(mu.points[j].mass) + " at lambda = " +
                                              to_string(mu.points[j].lambda) + " is not positive");
        for (std::size_t i = 0; i < j; ++i)
            if (mu.points[i].lambda == mu.points[j].lambda)
                throw domain_error("moments", "invalid measure: duplicate lambda = " +
                                                  to_string(mu.points[j].lambda));
    }
}

// s_{-2}, s_{-1} and s_0 ... s_{2K}; the interface between spectral data and
// all determinant formulas.
class MomentSequence {
public:
    MomentSequence(Rational s_minus2, Rational s_minus1, std::vector<Rational> s)
        : s_minus2_(std::move(s_minus2)), s_minus1_(std::move(s_minus1)), s_(std::move(s)) {
        if (s_.empty() || s_.size() % 2 == 0)
            throw domain_error("moments", "invalid moments: need 2K+1 entries s_0..s_2K, got " +
                                              std::to_string(s_.size()));
        if (s_minus2_ > 0)
            throw domain_error("moments",
                               "invalid moments: s_-2 = " + to_string(s_minus2_) + " > 0");
    }

    int order() const { return (static_cast<int>(s_.size()) - 1) / 2; }
    const Rational& s_minus2() const { return s_minus2_; }
    const Rational& s_minus1() const { return s_minus1_; }
    const std::vector<Rational>& s() const { return s_; }

    // moment s_i for i in [-2, 2K]
    const Rational& at(int i) const {
        if (i == -2) return s_minus2_;
        if (i == -1) return s_minus1_;
        if (i < -2 || i >= static_cast<int>(s_.size()))
            throw domain_error("moments", "moment s_" + std::to_string(i) + " not available");
        return s_[static_cast<std::size_t>(i)];
    }

    bool available(int i) const { return i >= -2 && i < static_cast<int>(s_.size()); }

private:
    Rational s_minus2_;
    Rational s_minus1_;
    std::vector<Rational> s_;
};

// s_k = sum_j mass_j * lambda_j^k for k = 0..2K; s_{-2} = -b.
inline MomentSequence moments_from_measure(const DiscreteMeasure& mu, int order) {
    validate_measure(mu);
    std::vector<Rational> s(static_cast<std::size_t>(2 * order) + 1, Rational(0));
    for (const auto& p : mu.points) {
        Rational power(1);
        for (auto& sk : s) {
            sk += p.mass * power;
            power *= p.lambda;
        }
    }
    return MomentSequence(-mu.b, mu.s_minus1, std::move(s));
}

// m(z) = -s_{-2} z - s_{-1} + sum_j mass_j / (lambda_j - z), canonical.
inline RationalFunction weyl_from_measure(const DiscreteMeasure& mu) {
    validate_measure(mu);
    RationalFunction m = RationalFunction(Polynomial(std::vector<Rational>{-mu.s_minus1, mu.b}));
    for (const auto& p : mu.points) {
        RationalFunction term(Polynomial(p.mass),
                              Polynomial(std::vector<Rational>{p.lambda, Rational(-1)}));
        m += term;
    }
    return m;
}

// Reads moments off the expansion -m(z) = s_{-2} z + s_{-1} + sum s_k / z^{k+1}.
inline MomentSequence moments_from_rational(const RationalFunction& m, int order) {
    std::vector<Rational> c = ratfun_laurent_at_infinity(-m, 2 * order + 1);
    std::vector<Rational> s(c.begin() + 2, c.begin() + 2 + (2 * order + 1));
    return MomentSequence(c[0], c[1], std::move(s));
}

}  // namespace stieltjes

#endif
