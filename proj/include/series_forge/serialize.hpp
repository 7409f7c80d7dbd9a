#ifndef SERIES_FORGE_SERIALIZE_HPP
#define SERIES_FORGE_SERIALIZE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include <series_forge/expansions.hpp>
#include <series_forge/identities.hpp>
#include <series_forge/logsine.hpp>
#include <series_forge/oracles.hpp>
#include <series_forge/pi_poly.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>

// JSON and CSV forms. Exact values are always strings "p/q" or "p"; a
// PiPoly is an array of such strings indexed by the power of pi.

namespace series_forge
{

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational &r) { return r.to_string(); }

inline Json to_json(const PiPoly &p)
{
    Json arr = Json::array();
    for (const auto &c : p.coeffs()) {
        arr.push_back(c.to_string());
    }
    return arr;
}

template <typename R>
Json to_json(const Series<R> &s)
{
    Json out;
    out["order"] = s.order();
    out["ring"] = std::is_same_v<R, PiPoly> ? "Q[pi]" : "Q";
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline Json to_json(const AnySeries &s)
{
    return std::visit([](const auto &v) { return to_json(v); }, s);
}

inline Rational rational_from_json(const Json &j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("expected a rational string");
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::domain_error &e) {
        throw std::invalid_argument(e.what());
    }
}

inline PiPoly pi_poly_from_json(const Json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of rational strings");
    }
    std::vector<Rational> v;
    for (const auto &c : j) {
        v.push_back(rational_from_json(c));
    }
    return PiPoly(std::move(v));
}

inline AnySeries series_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("ring") || !j.contains("coeffs")) {
        throw std::invalid_argument("series JSON needs order, ring and coeffs");
    }
    const int order = j.at("order").get<int>();
    const auto ring = j.at("ring").get<std::string>();
    const Json &coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
        throw std::invalid_argument("series JSON: coeffs must hold order + 1 entries");
    }
    if (ring == "Q") {
        std::vector<Rational> v;
        for (const auto &c : coeffs) {
            v.push_back(rational_from_json(c));
        }
        return Series<Rational>(std::move(v), order);
    }
    if (ring == "Q[pi]") {
        std::vector<PiPoly> v;
        for (const auto &c : coeffs) {
            v.push_back(pi_poly_from_json(c));
        }
        return Series<PiPoly>(std::move(v), order);
    }
    throw std::invalid_argument("series JSON: unknown ring '" + ring + "'");
}

inline std::string coefficient_text(const Rational &r) { return r.to_string(); }
inline std::string coefficient_text(const PiPoly &p) { return p.to_string(); }

/// "index,coefficient" rows; Q[pi] coefficients use the readable form.
inline std::string to_csv(const AnySeries &s)
{
    std::ostringstream os;
    os << "index,coefficient\n";
    std::visit(
        [&](const auto &v) {
            for (int i = 0; i <= v.order(); ++i) {
                os << i << "," << coefficient_text(v[i]) << "\n";
            }
        },
        s);
    return os.str();
}

/// One "t^i: c" line per nonzero coefficient, then the order.
inline std::string to_plain(const AnySeries &s)
{
    std::ostringstream os;
    std::visit(
        [&](const auto &v) {
            for (int i = 0; i <= v.order(); ++i) {
                const std::string c = coefficient_text(v[i]);
                if (c != "0") {
                    os << "t^" << i << ": " << c << "\n";
                }
            }
            os << "+ O(t^" << v.order() + 1 << ")\n";
        },
        s);
    return os.str();
}

inline Json to_json(const IdentityReport &r)
{
    Json out;
    out["id"] = r.id;
    out["swept_range"] = r.swept_range;
    out["status"] = std::string(r.status());
    out["checks"] = r.checks;
    if (r.counterexample) {
        out["first_counterexample"] = Json{{"params", r.counterexample->params},
                                           {"lhs", r.counterexample->lhs},
                                           {"rhs", r.counterexample->rhs}};
    } else {
        out["first_counterexample"] = nullptr;
    }
    return out;
}

inline Json to_json(const ExpansionCheck &c)
{
    Json out;
    out["family"] = std::string(family_name(c.spec.family));
    out["param"] = c.spec.param;
    out["order"] = c.spec.order;
    out["status"] = c.pass ? "pass" : "fail";
    if (c.first_mismatch) {
        out["first_mismatch"] = Json{{"index", *c.first_mismatch}, {"theorem", c.theorem_value}, {"oracle", c.oracle_value}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

inline Json to_json(const LogsineResult &r)
{
    Json out;
    out["method"] = r.method;
    out["value"] = r.value;
    out["est_error"] = r.est_error;
    if (r.method == "series") {
        out["slow"] = r.slow;
    }
    return out;
}

} // namespace series_forge

#endif
