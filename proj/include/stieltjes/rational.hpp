#ifndef STIELTJES_RATIONAL_HPP
#define STIELTJES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>
#include <string_view>

#include "stieltjes/errors.hpp"

namespace stieltjes {

// Every scalar in the pipeline is an arbitrary-precision rational in canonical
// form: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.  Boost's cpp_rational
// maintains exactly that form after every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational make_rational(Integer numerator, Integer denominator) {
    if (denominator == 0)
        throw domain_error("algebra", "division by zero: " + numerator.str() + "/0");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Rational(numerator, denominator);
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Serialized form is "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) {
        s += '/';
        s += den(q).str();
    }
    return s;
}

namespace detail {

inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

inline Rational rational_from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!detail::is_integer_token(num_part))
        throw parse_error("malformed rational \"" + std::string(text) + "\"");
    Integer n{std::string(num_part)};
    if (slash == std::string_view::npos) return Rational(n);
    std::string_view den_part = text.substr(slash + 1);
    if (!detail::is_integer_token(den_part) || den_part.front() == '-')
        throw parse_error("malformed rational \"" + std::string(text) + "\"");
    Integer d{std::string(den_part)};
    if (d == 0) throw parse_error("malformed rational \"" + std::string(text) + "\": zero denominator");
    return Rational(n, d);
}

// Decimal rendering with a fixed number of significant digits, truncated
// toward zero.  Used for report files; never fed back into computations.
inline std::string decimal_string(const Rational& q, int digits = 18) {
    if (is_zero(q)) return "0";
    const bool negative = q < 0;
    const Integer a = negative ? Integer(-num(q)) : num(q);
    const Integer& b = den(q);
    const Integer ten(10);

    // exponent e with 10^e <= a/b < 10^(e+1); the digit-count estimate is
    // exact or one too large, settled by one exact comparison
    long e = static_cast<long>(a.str().size()) - static_cast<long>(b.str().size());
    const bool at_least = e >= 0 ? a >= b * pow(ten, static_cast<unsigned>(e))
                                 : a * pow(ten, static_cast<unsigned>(-e)) >= b;
    if (!at_least) --e;

    // mantissa = floor(a * 10^(digits-1-e) / b); has exactly `digits` digits
    const long shift = digits - 1 - e;
    const Integer mant = shift >= 0 ? Integer((a * pow(ten, static_cast<unsigned>(shift))) / b)
                                    : Integer(a / (b * pow(ten, static_cast<unsigned>(-shift))));
    std::string m = mant.str();
    std::string out = negative ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

// Exact complex arithmetic over Rational; carrier for the spectral parameter z.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real, Rational imag = Rational(0))
        : re(std::move(real)), im(std::move(imag)) {}

    bool is_real() const { return is_zero(im); }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (is_zero(n)) throw domain_error("algebra", "division by zero: complex denominator is 0");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

}  // namespace stieltjes

#endif
