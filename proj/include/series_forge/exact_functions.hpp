#ifndef SERIES_FORGE_EXACT_FUNCTIONS_HPP
#define SERIES_FORGE_EXACT_FUNCTIONS_HPP

#include <stdexcept>
#include <string>

#include <series_forge/rational.hpp>

namespace series_forge
{

inline BigInt factorial(long n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// n!! with the conventions (-1)!! = 0!! = 1.
inline BigInt double_factorial(long n)
{
    if (n < -1) {
        throw std::invalid_argument("double_factorial: argument below -1: " + std::to_string(n));
    }
    if (n <= 0) {
        return BigInt(1);
    }
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Classical binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return BigInt(0);
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// <z>_k = z (z-1) ... (z-k+1), and 1 for k = 0.
inline Rational falling_factorial(const Rational &z, long k)
{
    if (k < 0) {
        throw std::invalid_argument("falling_factorial: negative length " + std::to_string(k));
    }
    Rational r(1);
    for (long l = 0; l < k; ++l) {
        r *= z - Rational(l);
    }
    return r;
}

/// binom(z, w) = <z>_w / w! for rational z and nonnegative integer w.
inline Rational extended_binomial(const Rational &z, long w)
{
    if (w < 0) {
        throw std::invalid_argument("extended_binomial: lower index must be nonnegative");
    }
    return falling_factorial(z, w) / Rational(factorial(w));
}

/// Integer-argument branches of the extended binomial coefficient, including
/// negative lower index:
///   z >= 0:          classical value, 0 when w < 0 or w > z
///   z < 0, w >= 0:   <z>_w / w!
///   z < 0, w < 0:    <z>_{z-w} / (z-w)!  when z - w >= 0, otherwise 0
inline Rational extended_binomial_int(long z, long w)
{
    if (z >= 0) {
        return Rational(binomial(z, w));
    }
    if (w >= 0) {
        return extended_binomial(Rational(z), w);
    }
    if (z - w >= 0) {
        return extended_binomial(Rational(z), z - w);
    }
    return Rational(0);
}

} // namespace series_forge

#endif
