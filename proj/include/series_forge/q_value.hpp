#ifndef SERIES_FORGE_Q_VALUE_HPP
#define SERIES_FORGE_Q_VALUE_HPP

#include <stdexcept>
#include <string>

#include <series_forge/exact_functions.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/stirling.hpp>

namespace series_forge
{

/// Q(m, k; alpha) = sum_{l=0}^{k} binom(m+l-1, m-1) s(m+k-1, m+l-1) ((m+k-alpha)/2)^l.
///
/// Requires m >= 1, k >= 0 and m + k != alpha. k = 0 gives 1 (only the l = 0
/// term survives); the general incomplete-gamma sums reach that case.
inline Rational q_value(int m, int k, const Rational &alpha, const StirlingTable &table)
{
    if (m < 1 || k < 0) {
        throw std::invalid_argument("q_value: need m >= 1 and k >= 0, got m=" + std::to_string(m)
                                    + ", k=" + std::to_string(k));
    }
    const Rational base = (Rational(m + k) - alpha) / Rational(2);
    if (base.is_zero()) {
        throw std::domain_error("q_value: m + k equals alpha (m=" + std::to_string(m)
                                + ", k=" + std::to_string(k) + ")");
    }
    Rational acc(0);
    Rational power(1);
    for (int l = 0; l <= k; ++l) {
        const BigInt &s = table.at(m + k - 1, m + l - 1);
        if (s != 0) {
            acc += Rational(binomial(m + l - 1, m - 1) * s) * power;
        }
        power *= base;
    }
    return acc;
}

inline Rational q_value(int m, int k, const Rational &alpha)
{
    return q_value(m, k, alpha, *shared_stirling(m + k));
}

} // namespace series_forge

#endif
