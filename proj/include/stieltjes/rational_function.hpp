#ifndef STIELTJES_RATIONAL_FUNCTION_HPP
#define STIELTJES_RATIONAL_FUNCTION_HPP

#include <utility>
#include <vector>

#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

// Quotient of polynomials in canonical form: gcd(num, den) constant and den
// monic.  Canonical form makes operator== structural; ratfun_equal keeps the
// independent cross-multiplication route for verification.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}  // zero function 0/1
    explicit RationalFunction(Rational constant)
        : num_(Polynomial(std::move(constant))), den_(Rational(1)) {}
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

    friend RationalFunction operator-(const RationalFunction& f) {
        RationalFunction r;
        r.num_ = -f.num_;
        r.den_ = f.den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
        return f + (-g);
    }
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
        if (g.is_zero()) throw domain_error("algebra", "division by zero: zero rational function");
        return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
    }

    RationalFunction reciprocal() const { return RationalFunction(Rational(1)) / *this; }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }

    ComplexRational evaluate(const ComplexRational& z) const {
        ComplexRational d = den_.evaluate(z);
        if (d == ComplexRational(Rational(0)))
            throw domain_error("forward", "evaluation at pole/critical point: den(z) = 0");
        return num_.evaluate(z) / d;
    }

private:
    void canonicalize() {
        if (den_.is_zero())
            throw domain_error("algebra", "division by zero: zero polynomial denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divrem(num_, g).first;
            den_ = Polynomial::divrem(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

// Exact equality by cross-multiplication: f.num * g.den = g.num * f.den.
inline bool ratfun_equal(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

namespace detail {

// Power-series reciprocal of d (constant term nonzero), `terms` coefficients.
inline std::vector<Rational> series_reciprocal(const Polynomial& d, int terms) {
    std::vector<Rational> inv(static_cast<std::size_t>(terms), Rational(0));
    Rational d0 = d.coeff(0);
    inv[0] = Rational(1) / d0;
    for (int k = 1; k < terms; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += d.coeff(i) * inv[static_cast<std::size_t>(k - i)];
        inv[static_cast<std::size_t>(k)] = -acc / d0;
    }
    return inv;
}

}  // namespace detail

// Expansion of f at infinity: f(z) = c[-1] z + c[0] + c[1]/z + ... requires
// deg(num) <= deg(den) + 1.  Returns (c_{-1}, c_0, ..., c_order), order + 2
// coefficients, computed by exact power-series division in w = 1/z.
inline std::vector<Rational> ratfun_laurent_at_infinity(const RationalFunction& f, int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 2, Rational(0));
    if (f.is_zero()) return out;
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    if (dn > dd + 1)
        throw domain_error("algebra", "no Herglotz-compatible expansion: deg num = " +
                                          std::to_string(dn) + " > deg den + 1 = " +
                                          std::to_string(dd + 1));

    // f(1/w) = w^(dd-dn) * rev(num)(w) / rev(den)(w); rev(den)(0) != 0, so
    // c_j is coefficient j + dn - dd of the power series rev(num)/rev(den)
    const Polynomial nrev = f.num().reversed();
    const Polynomial drev = f.den().reversed();
    const int terms = order + dn - dd + 1;
    if (terms <= 0) return out;
    const std::vector<Rational> inv = detail::series_reciprocal(drev, terms);

    for (int j = -1; j <= order; ++j) {
        const int idx = j + dn - dd;
        if (idx < 0) continue;
        Rational c(0);
        for (int i = 0; i <= idx && i <= nrev.degree(); ++i)
            c += nrev.coeff(i) * inv[static_cast<std::size_t>(idx - i)];
        out[static_cast<std::size_t>(j + 1)] = c;
    }
    return out;
}

}  // namespace stieltjes

#endif
