#ifndef SERIES_FORGE_LOGSINE_HPP
#define SERIES_FORGE_LOGSINE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <series_forge/exact_functions.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/quadrature.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/stirling.hpp>

// Generalized logsine
//   Ls_j^{(k)}(theta) = -int_0^theta x^k (ln|2 sin(x/2)|)^{j-k-1} dx
// by direct quadrature, by quadrature of the arcsin substitution, and by
// its Maclaurin-type series in sin(theta/2).

namespace series_forge
{

struct LogsineRequest
{
    int j = 2;
    int k = 0;
    double theta = std::numbers::pi / 3;
    int series_terms = 40;
    double quad_tolerance = 1e-12;

    void validate() const
    {
        if (k < 0 || j < k + 1) {
            throw std::invalid_argument("logsine: need j >= k + 1 >= 1 (j=" + std::to_string(j)
                                        + ", k=" + std::to_string(k) + ")");
        }
        if (!(theta > 0.0) || theta > std::numbers::pi * (1.0 + 1e-15)) {
            throw std::invalid_argument("logsine: theta must lie in (0, pi]");
        }
        if (!(quad_tolerance > 0.0)) {
            throw std::invalid_argument("logsine: tolerance must be positive");
        }
        if (series_terms < 0) {
            throw std::invalid_argument("logsine: negative term count");
        }
    }
};

struct LogsineResult
{
    double value = 0.0;
    double est_error = 0.0;
    std::string method;
    bool slow = false;
};

namespace detail
{

/// int_0^eps x^n ln^m x dx = eps^{n+1} sum_{p=0}^{m} (-1)^p <m>_p ln^{m-p}(eps) / (n+1)^{p+1}
inline double power_log_integral(int n, int m, double eps)
{
    const double le = std::log(eps);
    double acc = 0.0;
    double falling = 1.0;
    double denom = n + 1.0;
    for (int p = 0; p <= m; ++p) {
        if (p > 0) {
            falling *= m - p + 1;
            denom *= n + 1.0;
        }
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        acc += sign * falling * std::pow(le, m - p) / denom;
    }
    return std::pow(eps, n + 1) * acc;
}

inline constexpr double logsine_head = 1e-4;

inline double ipow(double x, int e) { return e == 0 ? 1.0 : std::pow(x, e); }

} // namespace detail

/// Direct quadrature of the defining integral. On [0, eps] the integrand is
/// replaced by x^k (ln x - x^2/24)^J expanded to first order, which is
/// integrated in closed form.
inline LogsineResult logsine_quadrature(const LogsineRequest &req)
{
    req.validate();
    const int k = req.k;
    const int J = req.j - req.k - 1;
    const double theta = std::min(req.theta, std::numbers::pi);
    const double eps = std::min(detail::logsine_head, theta);
    double head = detail::power_log_integral(k, J, eps);
    if (J >= 1) {
        head -= J / 24.0 * detail::power_log_integral(k + 2, J - 1, eps);
    }
    auto f = [&](double x) { return detail::ipow(x, k) * detail::ipow(std::log(2.0 * std::sin(0.5 * x)), J); };
    QuadratureOptions opt;
    opt.abs_tol = 0.5 * req.quad_tolerance;
    const QuadratureResult body = integrate_adaptive(f, eps, theta, opt);
    return {-(head + body.value), body.abs_error, "quad", false};
}

/// Quadrature of -2^{k+1} int_0^{sin(theta/2)} (arcsin x)^k / sqrt(1-x^2) ln^J(2x) dx.
/// Near 0 the same closed-form head is used (with y = 2x); above x = 1/2 the
/// substitution x = 1 - v^2 removes the inverse square root.
inline LogsineResult logsine_arcsin_form(const LogsineRequest &req)
{
    req.validate();
    const int k = req.k;
    const int J = req.j - req.k - 1;
    const double theta = std::min(req.theta, std::numbers::pi);
    const double s = theta >= std::numbers::pi ? 1.0 : std::sin(0.5 * theta);
    const double eps = std::min(detail::logsine_head, s);

    // (arcsin x)^k / sqrt(1-x^2) = x^k (1 + (k+3)/6 x^2 + ...)
    double head = detail::power_log_integral(k, J, 2.0 * eps) / std::ldexp(1.0, k + 1);
    head += (k + 3) / 6.0 * detail::power_log_integral(k + 2, J, 2.0 * eps) / std::ldexp(1.0, k + 3);

    QuadratureOptions opt;
    opt.abs_tol = 0.25 * req.quad_tolerance / std::ldexp(1.0, k + 1);
    const double split = std::min(s, 0.5);
    auto direct = [&](double x) {
        return detail::ipow(std::asin(x), k) / std::sqrt(1.0 - x * x) * detail::ipow(std::log(2.0 * x), J);
    };
    const QuadratureResult lower = integrate_adaptive(direct, eps, split, opt);
    double body = lower.value;
    double err = lower.abs_error;
    if (s > 0.5) {
        auto tail = [&](double v) {
            const double x = 1.0 - v * v;
            return 2.0 * detail::ipow(std::asin(x), k) * detail::ipow(std::log(2.0 * x), J) / std::sqrt(2.0 - v * v);
        };
        const QuadratureResult upper = integrate_adaptive(tail, std::sqrt(1.0 - s), std::sqrt(0.5), opt);
        body += upper.value;
        err += upper.abs_error;
    }
    const double scale = std::ldexp(1.0, k + 1);
    return {-scale * (head + body), scale * err, "arcsin", false};
}

/// Series route, k >= 1. With s = sin(theta/2), L = ln s, J = j-k-1:
///   Ls = (ln 2)^j (2s/ln 2)^{k+1} [ k! sum_{q>=1} (-1)^{q+1} (2s)^{2q} Q(k+1,2q;2)/(k+2q)! I(2q+k+1) - I(k+1) ]
///   I(c) = sum_{l=0}^{J} binom(J,l) (ln 2)^{-l} sum_{p=0}^{l} (-1)^p <l>_p L^{l-p} / c^{p+1}
/// Only nonnegative powers of L appear, so theta = pi is admissible. The
/// coefficients k! Q / (k+2q)! 4^q are formed exactly and converted once.
inline LogsineResult logsine_series(const LogsineRequest &req)
{
    req.validate();
    if (req.k < 1) {
        throw std::invalid_argument("logsine_series: needs k >= 1");
    }
    const int k = req.k;
    const int J = req.j - req.k - 1;
    const double theta = std::min(req.theta, std::numbers::pi);
    const double s = theta >= std::numbers::pi ? 1.0 : std::sin(0.5 * theta);
    const double L = std::log(s);
    const double ln2 = std::numbers::ln2;

    auto inner = [&](double c) {
        double acc = 0.0;
        for (int l = 0; l <= J; ++l) {
            double part = 0.0;
            double falling = 1.0;
            double cp = c;
            for (int p = 0; p <= l; ++p) {
                if (p > 0) {
                    falling *= l - p + 1;
                    cp *= c;
                }
                part += (p % 2 == 0 ? 1.0 : -1.0) * falling * detail::ipow(L, l - p) / cp;
            }
            acc += static_cast<double>(binomial(J, l).get_si()) * std::pow(ln2, -l) * part;
        }
        return acc;
    };

    const auto table = shared_stirling(k + 2 * req.series_terms + 1);
    const Rational kf(factorial(k));
    double sum = -inner(k + 1.0);
    double s2q = 1.0;
    std::vector<double> magnitudes;
    for (int q = 1; q <= req.series_terms; ++q) {
        s2q *= s * s;
        BigInt four_q;
        mpz_ui_pow_ui(four_q.get_mpz_t(), 4, static_cast<unsigned long>(q));
        const Rational coeff = kf * q_value(k + 1, 2 * q, Rational(2), *table) * Rational(four_q, factorial(k + 2 * q));
        const double term = (q % 2 == 1 ? 1.0 : -1.0) * coeff.to_double() * s2q * inner(2.0 * q + k + 1.0);
        sum += term;
        magnitudes.push_back(std::abs(term));
    }
    const double prefactor = std::ldexp(1.0, k + 1) * std::pow(s, k + 1) * std::pow(ln2, J);

    LogsineResult out{prefactor * sum, 0.0, "series", false};
    if (!magnitudes.empty()) {
        out.est_error = std::abs(prefactor) * magnitudes.back();
        const std::size_t n = magnitudes.size();
        if (n >= 3 && !(magnitudes[n - 1] < magnitudes[n - 3])) {
            out.slow = true;
        }
    }
    if (theta > 2.0 * std::numbers::pi / 3.0) {
        out.slow = true;
    }
    return out;
}

/// Partial sums of (pi/3)^m = 1 + m! sum_{k>=1} (-1)^k Q(m,2k;2) / (m+2k)!.
/// Element i holds the sum through k = i, so element 0 is exactly 1.
inline std::vector<double> pi_power_partial_sums(int m, int terms)
{
    if (m < 1) {
        throw std::invalid_argument("pi_power_partial_sums: m must be >= 1");
    }
    if (terms < 0) {
        throw std::invalid_argument("pi_power_partial_sums: negative term count");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(terms));
    const auto table = shared_stirling(m + 2 * terms);
    const Rational mf(factorial(m));
    Rational acc(1);
    for (int i = 0; i < terms; ++i) {
        if (i > 0) {
            acc += sign_power(i) * mf * q_value(m, 2 * i, Rational(2), *table) / Rational(factorial(m + 2 * i));
        }
        out.push_back(acc.to_double());
    }
    return out;
}

} // namespace series_forge

#endif
