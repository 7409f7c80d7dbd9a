#ifndef SERIES_FORGE_ORACLES_HPP
#define SERIES_FORGE_ORACLES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <series_forge/base_series.hpp>
#include <series_forge/exact_functions.hpp>
#include <series_forge/expansions.hpp>
#include <series_forge/pi_poly.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>

// Independent computations of the same expansions using only series
// arithmetic on the classical Maclaurin building blocks.

namespace series_forge
{

inline Series<PiPoly> lift_to_pi(const Series<Rational> &s)
{
    std::vector<PiPoly> v;
    v.reserve(s.coeffs().size());
    for (const auto &c : s.coeffs()) {
        v.emplace_back(c);
    }
    return Series<PiPoly>(std::move(v), s.order());
}

namespace oracle
{

inline Series<Rational> arcsin_pow(int m, int order)
{
    return pow(arcsin_series(order + m), m).shifted_down(m);
}

inline Series<Rational> arcsinh_pow(int m, int order)
{
    return pow(arcsinh_series(order + m), m).shifted_down(m);
}

inline Series<Rational> arcsin_pow_over_sqrt(int m, int order)
{
    return pow(arcsin_series(order), m) * inv_sqrt_one_minus_t2(order);
}

inline Series<Rational> arcsinh_pow_over_sqrt(int m, int order)
{
    return pow(arcsinh_series(order), m) * inv_sqrt_one_plus_t2(order);
}

/// e^{arcsinh t} = t + sqrt(1 + t^2)
inline Series<Rational> exp_arcsinh(int order)
{
    return Series<Rational>::variable(order) + sqrt_one_plus_t2(order);
}

/// Gamma(m, x) = (m-1)! e^{-x} sum_{j<m} x^j / j! at x = arcsinh t.
inline Series<Rational> gamma_arcsinh(int m, int order)
{
    const Series<Rational> x = arcsinh_series(order);
    Series<Rational> poly(order);
    Series<Rational> term = Series<Rational>::constant(Rational(1), order);
    for (int j = 0; j < m; ++j) {
        if (j > 0) {
            term = term * x * Rational(1, j);
        }
        poly += term;
    }
    return exp_series_of(-x) * poly * Rational(factorial(m - 1));
}

inline Series<Rational> arctan_pow(int n, int order) { return pow(arctan_series(order), n); }

inline Series<Rational> arctanh_pow(int n, int order) { return pow(arctanh_series(order), n); }

/// (pi/2 - arcsin t)^m over Q[pi].
inline Series<PiPoly> arccos_pow(int m, int order)
{
    const Series<PiPoly> half_pi = Series<PiPoly>::constant(PiPoly::monomial(Rational(1, 2), 1), order);
    return pow(half_pi - lift_to_pi(arcsin_series(order)), m);
}

/// Left-hand sides of the arcsinh identities: alternating sums over l of
/// w(l) (arcsinh t)^{l+c} / (l+c)! with
///   which = 1: w = l+1, c = 2;  which = 2: w = (l+1)(l+2), c = 3;
///   which = 3: w = binom(l+m, m), c = m+1.
inline Series<Rational> arcsinh_identity_lhs(int which, int m, int order)
{
    int c = 0;
    switch (which) {
    case 1:
        c = 2;
        break;
    case 2:
        c = 3;
        break;
    case 3:
        if (m < 3) {
            throw std::invalid_argument("arcsinh identity 3 needs m >= 3");
        }
        c = m + 1;
        break;
    default:
        throw std::invalid_argument("arcsinh identity index must be 1, 2 or 3");
    }
    const Series<Rational> a = arcsinh_series(order);
    Series<Rational> out(order);
    if (c > order) {
        return out;
    }
    Series<Rational> power = pow(a, c);
    for (int l = 0; l + c <= order; ++l) {
        if (l > 0) {
            power = power * a;
        }
        Rational w;
        if (which == 1) {
            w = Rational(l + 1);
        } else if (which == 2) {
            w = Rational((l + 1) * (l + 2));
        } else {
            w = Rational(binomial(l + m, m));
        }
        out += power * (sign_power(l) * w * Rational(BigInt(1), factorial(l + c)));
    }
    return out;
}

} // namespace oracle

inline AnySeries oracle_series(const ExpansionSpec &spec)
{
    spec.validate();
    const int m = spec.param;
    const int n = spec.order;
    switch (spec.family) {
    case Family::ArcsinPow:
        return oracle::arcsin_pow(m, n);
    case Family::ArcsinPowOverSqrt:
        return oracle::arcsin_pow_over_sqrt(m, n);
    case Family::ArcsinhPow:
        return oracle::arcsinh_pow(m, n);
    case Family::ArcsinhPowOverSqrt:
        return oracle::arcsinh_pow_over_sqrt(m, n);
    case Family::ExpArcsinh:
        return oracle::exp_arcsinh(n);
    case Family::GammaArcsinh:
        return oracle::gamma_arcsinh(m, n);
    case Family::ArctanPow:
        return oracle::arctan_pow(m, n);
    case Family::ArctanhPow:
        return oracle::arctanh_pow(m, n);
    case Family::ArccosPow:
        return oracle::arccos_pow(m, n);
    }
    throw std::logic_error("unhandled family");
}

struct ExpansionCheck
{
    ExpansionSpec spec;
    bool pass = true;
    std::optional<int> first_mismatch;
    std::string theorem_value;
    std::string oracle_value;
};

namespace detail
{

template <typename R>
void compare_series(const Series<R> &a, const Series<R> &b, ExpansionCheck &out)
{
    if (a.order() != b.order()) {
        throw std::logic_error("compare_series: order mismatch");
    }
    for (int i = 0; i <= a.order(); ++i) {
        if (!(a[i] == b[i])) {
            out.pass = false;
            out.first_mismatch = i;
            out.theorem_value = a[i].to_string();
            out.oracle_value = b[i].to_string();
            return;
        }
    }
}

} // namespace detail

/// Compare theorem-side and oracle coefficients exactly, index by index.
inline ExpansionCheck compare_expansions(const ExpansionSpec &spec, const AnySeries &theorem, const AnySeries &oracle)
{
    ExpansionCheck out{spec, true, std::nullopt, {}, {}};
    if (theorem.index() != oracle.index()) {
        throw std::logic_error("compare_expansions: ring mismatch");
    }
    if (const auto *t = std::get_if<Series<Rational>>(&theorem)) {
        detail::compare_series(*t, std::get<Series<Rational>>(oracle), out);
    } else {
        detail::compare_series(std::get<Series<PiPoly>>(theorem), std::get<Series<PiPoly>>(oracle), out);
    }
    return out;
}

inline ExpansionCheck verify_expansion(const ExpansionSpec &spec)
{
    return compare_expansions(spec, theorem_series(spec), oracle_series(spec));
}

} // namespace series_forge

#endif
