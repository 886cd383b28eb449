#ifndef STIELTJES_JSON_IO_HPP
#define STIELTJES_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "stieltjes/expansion.hpp"
#include "stieltjes/forward.hpp"
#include "stieltjes/hankel.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/rational_function.hpp"

// JSON wire formats.  Every rational is a string "p/q" (or "p"), never a
// floating-point JSON number; "inf" is the literal for infinite length.
namespace stieltjes::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

inline Rational rational(const json& j) {
    if (!j.is_string()) throw parse_error("expected rational string, got " + j.dump());
    return rational_from_string(j.get<std::string>());
}

inline std::vector<Rational> rational_list(const json& j) {
    if (!j.is_array()) throw parse_error("expected array of rationals, got " + j.dump());
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(rational(item));
    return out;
}

inline json rational_list_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

}  // namespace detail

inline json complex_to_json(const ComplexRational& z) {
    return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

inline ComplexRational complex_from_json(const json& j) {
    return {detail::rational(detail::field(j, "re")), detail::rational(detail::field(j, "im"))};
}

inline json ratfun_to_json(const RationalFunction& f) {
    return {{"num", detail::rational_list_to_json(f.num().coeffs())},
            {"den", detail::rational_list_to_json(f.den().coeffs())}};
}

inline RationalFunction ratfun_from_json(const json& j) {
    return RationalFunction(Polynomial(detail::rational_list(detail::field(j, "num"))),
                            Polynomial(detail::rational_list(detail::field(j, "den"))));
}

inline json measure_to_json(const DiscreteMeasure& mu) {
    json points = json::array();
    for (const auto& p : mu.points)
        points.push_back({{"lambda", to_string(p.lambda)}, {"mass", to_string(p.mass)}});
    return {{"b", to_string(mu.b)}, {"s_minus1", to_string(mu.s_minus1)}, {"points", points}};
}

inline DiscreteMeasure measure_from_json(const json& j) {
    DiscreteMeasure mu;
    mu.b = detail::rational(detail::field(j, "b"));
    mu.s_minus1 = detail::rational(detail::field(j, "s_minus1"));
    const json& points = detail::field(j, "points");
    if (!points.is_array()) throw parse_error("\"points\" must be an array");
    for (const auto& p : points)
        mu.points.push_back({detail::rational(detail::field(p, "lambda")),
                             detail::rational(detail::field(p, "mass"))});
    return mu;
}

inline json moments_to_json(const MomentSequence& ms) {
    return {{"s_minus2", to_string(ms.s_minus2())},
            {"s_minus1", to_string(ms.s_minus1())},
            {"s", detail::rational_list_to_json(ms.s())}};
}

inline MomentSequence moments_from_json(const json& j) {
    return MomentSequence(detail::rational(detail::field(j, "s_minus2")),
                          detail::rational(detail::field(j, "s_minus1")),
                          detail::rational_list(detail::field(j, "s")));
}

inline json table_to_json(const HankelTable& t) {
    json delta = json::object();
    for (int family : HankelTable::kFamilies)
        delta[std::to_string(family)] = detail::rational_list_to_json(t.family(family));
    return {{"delta", delta}};
}

inline json contfrac_to_json(const ContinuedFraction& cf) {
    return {{"upsilon", detail::rational_list_to_json(cf.upsilon)},
            {"omega", detail::rational_list_to_json(cf.omega)},
            {"l", detail::rational_list_to_json(cf.l)},
            {"r", cf.r ? json(to_string(*cf.r)) : json(nullptr)},
            {"terminated", cf.terminated()}};
}

inline ContinuedFraction contfrac_from_json(const json& j) {
    ContinuedFraction cf;
    cf.upsilon = detail::rational_list(detail::field(j, "upsilon"));
    cf.omega = detail::rational_list(detail::field(j, "omega"));
    cf.l = detail::rational_list(detail::field(j, "l"));
    const json& r = detail::field(j, "r");
    if (!r.is_null()) cf.r = detail::rational(r);
    return cf;
}

inline json string_to_json(const StringData& sd) {
    json L;
    if (sd.terminated) L = sd.length ? json(to_string(*sd.length)) : json("inf");
    return {{"L", L},
            {"x", detail::rational_list_to_json(sd.x)},
            {"omega", detail::rational_list_to_json(sd.omega_w)},
            {"upsilon", detail::rational_list_to_json(sd.upsilon_w)},
            {"boundary_upsilon",
             sd.boundary_upsilon ? json(to_string(*sd.boundary_upsilon)) : json(nullptr)}};
}

inline StringData string_from_json(const json& j) {
    StringData sd;
    const json& L = detail::field(j, "L");
    if (L.is_null()) {
        sd.terminated = false;
    } else if (L.is_string() && L.get<std::string>() == "inf") {
        sd.terminated = true;
    } else {
        sd.terminated = true;
        sd.length = detail::rational(L);
    }
    sd.x = detail::rational_list(detail::field(j, "x"));
    sd.omega_w = detail::rational_list(detail::field(j, "omega"));
    sd.upsilon_w = detail::rational_list(detail::field(j, "upsilon"));
    const json& bu = detail::field(j, "boundary_upsilon");
    if (!bu.is_null()) sd.boundary_upsilon = detail::rational(bu);
    Rational running(0);
    for (const auto& w : sd.omega_w) {
        running += w;
        sd.cumulative_w.push_back(running);
    }
    return sd;
}

inline json report_to_json(const RoundtripReport& report) {
    json residuals = json::array();
    for (const auto& r : report.residuals)
        residuals.push_back({{"id", r.id}, {"k", r.index}, {"value", to_string(r.value)}});
    return {{"pass", report.pass},
            {"stage", report.stage},
            {"residuals", residuals},
            {"lhs", ratfun_to_json(report.lhs)},
            {"rhs", ratfun_to_json(report.rhs)}};
}

}  // namespace stieltjes::io

#endif
