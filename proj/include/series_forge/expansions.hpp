#ifndef SERIES_FORGE_EXPANSIONS_HPP
#define SERIES_FORGE_EXPANSIONS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <series_forge/exact_functions.hpp>
#include <series_forge/pi_poly.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>
#include <series_forge/stirling.hpp>

// Closed-form Maclaurin coefficients for powers of inverse (hyperbolic) sine
// and tangent, built from Q(m, k; alpha) and nested harmonic-type sums.
// Nothing here multiplies series together; the oracles in oracles.hpp do.

namespace series_forge
{

namespace detail
{

/// 4^k / (2k)! * 1/binom(m+2k, m), the common factor of the arcsin family.
inline Rational arcsin_family_weight(int m, int k)
{
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return Rational(four_k, factorial(2 * k) * binomial(m + 2 * k, m));
}

/// 2^{n} / n!
inline Rational two_pow_over_factorial(int n)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return Rational(p, factorial(n));
}

// (arcsin t / t)^m or (arcsinh t / t)^m depending on `alternating`, placed at
// offset `shift` and using Q(q_m, 2k; 2).
inline Series<Rational> arcsin_like(int m, int q_m, int shift, int order, bool alternating)
{
    const auto table = shared_stirling(q_m + order);
    Series<Rational> s(order);
    if (shift <= order) {
        s.set(shift, Rational(1));
    }
    for (int k = 1; shift + 2 * k <= order; ++k) {
        Rational c = q_value(q_m, 2 * k, Rational(2), *table) * arcsin_family_weight(m, k);
        if (alternating && k % 2 == 1) {
            c = -c;
        }
        s.set(shift + 2 * k, c);
    }
    return s;
}

} // namespace detail

/// (arcsin t / t)^m = 1 + sum_k (-1)^k Q(m,2k;2)/binom(m+2k,m) (2t)^{2k}/(2k)!
inline Series<Rational> arcsin_power_coeffs(int m, int order)
{
    if (m < 1) {
        throw std::invalid_argument("arcsin_power_coeffs: m must be >= 1");
    }
    return detail::arcsin_like(m, m, 0, order, true);
}

/// (arcsin t)^m / sqrt(1 - t^2) = t^m [1 + sum_k (-1)^k Q(m+1,2k;2)/binom(m+2k,m) (2t)^{2k}/(2k)!]
inline Series<Rational> arcsin_power_over_sqrt_coeffs(int m, int order)
{
    if (m < 0) {
        throw std::invalid_argument("arcsin_power_over_sqrt_coeffs: m must be >= 0");
    }
    return detail::arcsin_like(m, m + 1, m, order, true);
}

/// (arcsinh t / t)^m: the arcsin coefficients without the (-1)^k.
inline Series<Rational> arcsinh_power_coeffs(int m, int order)
{
    if (m < 1) {
        throw std::invalid_argument("arcsinh_power_coeffs: m must be >= 1");
    }
    return detail::arcsin_like(m, m, 0, order, false);
}

/// (arcsinh t)^m / sqrt(1 + t^2)
inline Series<Rational> arcsinh_power_over_sqrt_coeffs(int m, int order)
{
    if (m < 0) {
        throw std::invalid_argument("arcsinh_power_over_sqrt_coeffs: m must be >= 0");
    }
    return detail::arcsin_like(m, m + 1, m, order, false);
}

/// e^{arcsinh t} = 1 + t - t^2 sum_k binom((2k-1)/2, 2k+1) (2t)^{2k} / (k+1)
inline Series<Rational> exp_arcsinh_coeffs(int order)
{
    if (order < 2) {
        throw std::invalid_argument("exp_arcsinh_coeffs: order must be >= 2");
    }
    Series<Rational> s(order);
    s.set(0, Rational(1));
    s.set(1, Rational(1));
    for (int k = 0; 2 * k + 2 <= order; ++k) {
        BigInt four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
        const Rational b = extended_binomial(Rational(2 * k - 1, 2), 2 * k + 1);
        s.set(2 * k + 2, -b * Rational(four_k, BigInt(k + 1)));
    }
    return s;
}

/// Right-hand sides of the three arcsinh series identities:
///   which = 1:  t^2/2 - t^3/3 + 1/4 sum_{k>=3} Q(2,k-1;3) (2t)^{k+1}/(k+1)!
///   which = 2:  t^3/3 + 1/4 sum_{k>=3} Q(3,k-2;3) (2t)^{k+1}/(k+1)!
///   which = 3:  2^{-(m+1)} sum_{k>=m} Q(m+1,k-m;3) (2t)^{k+1}/(k+1)!,  m >= 3
/// The matching left-hand sides are alternating sums of (arcsinh t)^j / j!
/// weighted by (l+1), (l+1)(l+2) and binom(l+m, m).
inline Series<Rational> arcsinh_identity_rhs(int which, int m, int order)
{
    Series<Rational> s(order);
    const auto table = shared_stirling(order + 8);
    auto add_tail = [&](int from_k, int q_m, int shift, const Rational &factor) {
        for (int k = from_k; k + 1 <= order; ++k) {
            const Rational q = q_value(q_m, k - shift, Rational(3), *table);
            s.set(k + 1, s[k + 1] + factor * q * detail::two_pow_over_factorial(k + 1));
        }
    };
    switch (which) {
    case 1:
        if (order >= 2) {
            s.set(2, Rational(1, 2));
        }
        if (order >= 3) {
            s.set(3, Rational(-1, 3));
        }
        add_tail(3, 2, 1, Rational(1, 4));
        break;
    case 2:
        if (order >= 3) {
            s.set(3, Rational(1, 3));
        }
        add_tail(3, 3, 2, Rational(1, 4));
        break;
    case 3: {
        if (m < 3) {
            throw std::invalid_argument("arcsinh identity 3 needs m >= 3");
        }
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(m + 1));
        add_tail(m, m + 1, m, Rational(BigInt(1), p));
        break;
    }
    default:
        throw std::invalid_argument("arcsinh identity index must be 1, 2 or 3");
    }
    return s;
}

/// Gamma(m, arcsinh t) for m >= 2 from the three displayed cases:
///   Gamma(2, .) = 1 - rhs_1,  Gamma(3, .) = 2 - rhs_2,
///   Gamma(1+p, .) = p! (1 - rhs_3(p)) for p >= 3.
inline Series<Rational> gamma_arcsinh_coeffs(int m, int order)
{
    if (m < 2) {
        throw std::invalid_argument("gamma_arcsinh_coeffs: m must be >= 2");
    }
    if (m == 2) {
        return Series<Rational>::constant(Rational(1), order) - arcsinh_identity_rhs(1, 0, order);
    }
    if (m == 3) {
        return Series<Rational>::constant(Rational(2), order) - arcsinh_identity_rhs(2, 0, order);
    }
    const int p = m - 1;
    const Rational pf(factorial(p));
    return (Series<Rational>::constant(Rational(1), order) - arcsinh_identity_rhs(3, p, order)) * pf;
}

/// Nested sums  sum_{l_{n-1}=0}^{k} 1/(2 l_{n-1} + n - 1) ... sum_{l_1=0}^{l_2} 1/(2 l_1 + 1)
/// for k = 0..k_max, computed level by level with prefix sums:
///   N_1(k) = 1,  N_{j+1}(k) = sum_{l=0}^{k} N_j(l) / (2l + j).
inline std::vector<Rational> arctan_nested_sums(int n, int k_max)
{
    if (n < 1) {
        throw std::invalid_argument("arctan_nested_sums: n must be >= 1");
    }
    std::vector<Rational> level(static_cast<std::size_t>(k_max) + 1, Rational(1));
    for (int j = 1; j < n; ++j) {
        Rational running(0);
        for (int l = 0; l <= k_max; ++l) {
            running += level[static_cast<std::size_t>(l)] / Rational(2 * l + j);
            level[static_cast<std::size_t>(l)] = running;
        }
    }
    return level;
}

namespace detail
{

inline Series<Rational> arctan_like(int n, int order, bool alternating)
{
    if (n < 1) {
        throw std::invalid_argument("arctan power: n must be >= 1");
    }
    Series<Rational> s(order);
    if (n > order) {
        return s;
    }
    const int k_max = (order - n) / 2;
    const auto nested = arctan_nested_sums(n, k_max);
    const Rational nf(factorial(n));
    for (int k = 0; k <= k_max; ++k) {
        Rational c = nf * nested[static_cast<std::size_t>(k)] / Rational(2 * k + n);
        if (alternating && k % 2 == 1) {
            c = -c;
        }
        s.set(2 * k + n, c);
    }
    return s;
}

} // namespace detail

/// (arctan t)^n = n! sum_k (-1)^k N_n(k) t^{2k+n} / (2k+n)
inline Series<Rational> arctan_power_coeffs(int n, int order) { return detail::arctan_like(n, order, true); }

/// (arctanh t)^n = n! sum_k N_n(k) t^{2k+n} / (2k+n)
inline Series<Rational> arctanh_power_coeffs(int n, int order) { return detail::arctan_like(n, order, false); }

/// (arccos t)^m with coefficients in Q[pi]:
///   (pi/2)^m + sum_{q=1}^{m} (-1)^q binom(m,q) (pi/2)^{m-q} t^q
///   + sum_{p>=3} [sum_{q+2k=p; q,k>=1} (-4)^k (-1)^q q! binom(m,q) (pi/2)^{m-q} Q(q,p-q;2)] t^p/p!
inline Series<PiPoly> arccos_power_coeffs(int m, int order)
{
    if (m < 1) {
        throw std::invalid_argument("arccos_power_coeffs: m must be >= 1");
    }
    const PiPoly half_pi = PiPoly::monomial(Rational(1, 2), 1);
    std::vector<PiPoly> half_pi_pow(static_cast<std::size_t>(m) + 1, PiPoly(1));
    for (int i = 1; i <= m; ++i) {
        half_pi_pow[static_cast<std::size_t>(i)] = half_pi_pow[static_cast<std::size_t>(i) - 1] * half_pi;
    }
    const auto table = shared_stirling(order + m);
    Series<PiPoly> s(order);
    s.set(0, half_pi_pow[static_cast<std::size_t>(m)]);
    for (int q = 1; q <= m && q <= order; ++q) {
        s.set(q, half_pi_pow[static_cast<std::size_t>(m - q)] * (sign_power(q) * Rational(binomial(m, q))));
    }
    for (int p = 3; p <= order; ++p) {
        PiPoly acc;
        for (int k = 1; 2 * k < p; ++k) {
            const int q = p - 2 * k;
            if (q > m) {
                continue;
            }
            BigInt four_k;
            mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
            const Rational c = sign_power(k + q) * Rational(four_k) * Rational(factorial(q) * binomial(m, q))
                               * q_value(q, p - q, Rational(2), *table);
            acc += half_pi_pow[static_cast<std::size_t>(m - q)] * c;
        }
        s.set(p, s[p] + acc * Rational(BigInt(1), factorial(p)));
    }
    return s;
}

enum class Family
{
    ArcsinPow,
    ArcsinPowOverSqrt,
    ArcsinhPow,
    ArcsinhPowOverSqrt,
    ExpArcsinh,
    GammaArcsinh,
    ArctanPow,
    ArctanhPow,
    ArccosPow,
};

struct FamilyInfo
{
    Family family;
    std::string_view name;
    int min_param;
};

inline constexpr std::array<FamilyInfo, 9> family_table{{
    {Family::ArcsinPow, "arcsin-pow", 1},
    {Family::ArcsinPowOverSqrt, "arcsin-pow-over-sqrt", 0},
    {Family::ArcsinhPow, "arcsinh-pow", 1},
    {Family::ArcsinhPowOverSqrt, "arcsinh-pow-over-sqrt", 0},
    {Family::ExpArcsinh, "exp-arcsinh", 0},
    {Family::GammaArcsinh, "gamma-arcsinh", 2},
    {Family::ArctanPow, "arctan-pow", 1},
    {Family::ArctanhPow, "arctanh-pow", 1},
    {Family::ArccosPow, "arccos-pow", 1},
}};

inline const FamilyInfo &family_info(Family f)
{
    for (const auto &info : family_table) {
        if (info.family == f) {
            return info;
        }
    }
    throw std::logic_error("unknown family");
}

inline std::string_view family_name(Family f) { return family_info(f).name; }

inline std::optional<Family> parse_family(std::string_view name)
{
    for (const auto &info : family_table) {
        if (info.name == name) {
            return info.family;
        }
    }
    return std::nullopt;
}

/// Request for one expansion: family, its integer parameter (m or n) and the
/// truncation order. ExpArcsinh ignores the parameter.
struct ExpansionSpec
{
    Family family = Family::ArcsinPow;
    int param = 1;
    int order = 10;

    void validate() const
    {
        const auto &info = family_info(family);
        if (family != Family::ExpArcsinh && param < info.min_param) {
            throw std::invalid_argument(std::string(info.name) + ": parameter must be >= "
                                        + std::to_string(info.min_param));
        }
        const int min_order = family == Family::ExpArcsinh ? 2 : std::max(param, 0);
        if (order < min_order) {
            throw std::invalid_argument(std::string(info.name) + ": order must be >= "
                                        + std::to_string(min_order));
        }
    }
};

using AnySeries = std::variant<Series<Rational>, Series<PiPoly>>;

/// Theorem-side coefficients for a spec.
inline AnySeries theorem_series(const ExpansionSpec &spec)
{
    spec.validate();
    switch (spec.family) {
    case Family::ArcsinPow:
        return arcsin_power_coeffs(spec.param, spec.order);
    case Family::ArcsinPowOverSqrt:
        return arcsin_power_over_sqrt_coeffs(spec.param, spec.order);
    case Family::ArcsinhPow:
        return arcsinh_power_coeffs(spec.param, spec.order);
    case Family::ArcsinhPowOverSqrt:
        return arcsinh_power_over_sqrt_coeffs(spec.param, spec.order);
    case Family::ExpArcsinh:
        return exp_arcsinh_coeffs(spec.order);
    case Family::GammaArcsinh:
        return gamma_arcsinh_coeffs(spec.param, spec.order);
    case Family::ArctanPow:
        return arctan_power_coeffs(spec.param, spec.order);
    case Family::ArctanhPow:
        return arctanh_power_coeffs(spec.param, spec.order);
    case Family::ArccosPow:
        return arccos_power_coeffs(spec.param, spec.order);
    }
    throw std::logic_error("unhandled family");
}

} // namespace series_forge

#endif
