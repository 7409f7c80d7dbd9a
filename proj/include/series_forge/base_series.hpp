#ifndef SERIES_FORGE_BASE_SERIES_HPP
#define SERIES_FORGE_BASE_SERIES_HPP

#include <series_forge/exact_functions.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>

// Classical Maclaurin expansions used as building blocks for the oracles.

namespace series_forge
{

/// arcsin t = sum [(2l-1)!!]^2 t^{2l+1} / (2l+1)!
inline Series<Rational> arcsin_series(int order)
{
    Series<Rational> s(order);
    for (int l = 0; 2 * l + 1 <= order; ++l) {
        const BigInt df = double_factorial(2 * l - 1);
        s.set(2 * l + 1, Rational(df * df, factorial(2 * l + 1)));
    }
    return s;
}

/// arcsinh t = sum (-1)^l [(2l-1)!!]^2 t^{2l+1} / (2l+1)!
inline Series<Rational> arcsinh_series(int order)
{
    Series<Rational> s(order);
    for (int l = 0; 2 * l + 1 <= order; ++l) {
        const BigInt df = double_factorial(2 * l - 1);
        s.set(2 * l + 1, sign_power(l) * Rational(df * df, factorial(2 * l + 1)));
    }
    return s;
}

/// arctan t = sum (-1)^k t^{2k+1} / (2k+1)
inline Series<Rational> arctan_series(int order)
{
    Series<Rational> s(order);
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        s.set(2 * k + 1, sign_power(k) * Rational(1, 2 * k + 1));
    }
    return s;
}

/// arctanh t = sum t^{2k+1} / (2k+1)
inline Series<Rational> arctanh_series(int order)
{
    Series<Rational> s(order);
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        s.set(2 * k + 1, Rational(1, 2 * k + 1));
    }
    return s;
}

/// (1 - t^2)^{-1/2} = sum binom(-1/2, l) (-1)^l t^{2l}
inline Series<Rational> inv_sqrt_one_minus_t2(int order)
{
    Series<Rational> s(order);
    for (int l = 0; 2 * l <= order; ++l) {
        s.set(2 * l, sign_power(l) * extended_binomial(Rational(-1, 2), l));
    }
    return s;
}

/// (1 + t^2)^{-1/2} = sum binom(-1/2, l) t^{2l}
inline Series<Rational> inv_sqrt_one_plus_t2(int order)
{
    Series<Rational> s(order);
    for (int l = 0; 2 * l <= order; ++l) {
        s.set(2 * l, extended_binomial(Rational(-1, 2), l));
    }
    return s;
}

/// (1 + t^2)^{1/2} = sum binom(1/2, l) t^{2l}
inline Series<Rational> sqrt_one_plus_t2(int order)
{
    Series<Rational> s(order);
    for (int l = 0; 2 * l <= order; ++l) {
        s.set(2 * l, extended_binomial(Rational(1, 2), l));
    }
    return s;
}

/// ln(1 + t) = sum_{n>=1} (-1)^{n+1} t^n / n
inline Series<Rational> log1p_series(int order)
{
    Series<Rational> s(order);
    for (int n = 1; n <= order; ++n) {
        s.set(n, sign_power(n + 1) * Rational(1, n));
    }
    return s;
}

/// e^t
inline Series<Rational> exp_series(int order)
{
    Series<Rational> s(order);
    for (int n = 0; n <= order; ++n) {
        s.set(n, Rational(BigInt(1), factorial(n)));
    }
    return s;
}

} // namespace series_forge

#endif
