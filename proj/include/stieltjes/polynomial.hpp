#ifndef STIELTJES_POLYNOMIAL_HPP
#define STIELTJES_POLYNOMIAL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

// Dense univariate polynomial over Rational, coefficients in ascending degree.
// The zero polynomial is the empty coefficient list; otherwise the trailing
// coefficient is nonzero and degree() = coeffs().size() - 1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant) {
        if (!stieltjes::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    static Polynomial monomial(int degree, Rational coeff = Rational(1)) {
        if (stieltjes::is_zero(coeff)) return {};
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial variable() { return monomial(1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const Rational& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend Polynomial operator-(const Polynomial& p) {
        std::vector<Rational> c = p.coeffs_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        if (stieltjes::is_zero(s)) return {};
        std::vector<Rational> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division; the divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw domain_error("algebra", "division by zero: zero polynomial divisor");
        Polynomial q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational factor = r.leading() / b.leading();
            int shift = r.degree() - b.degree();
            Polynomial term = monomial(shift, factor);
            q += term;
            r = r - term * b;
        }
        return {std::move(q), std::move(r)};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    // Euclidean gcd with monic normalization at each step (content reduction
    // over the rationals); result is monic, gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Polynomial r = divrem(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    template <typename Scalar>
    Scalar evaluate(const Scalar& x) const {
        Scalar acc{Rational(0)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Scalar(*it);
        return acc;
    }

    // Coefficients read highest-degree first; used for expansions at infinity.
    Polynomial reversed() const {
        std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(c));
    }

private:
    void strip() {
        while (!coeffs_.empty() && stieltjes::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace stieltjes

#endif
