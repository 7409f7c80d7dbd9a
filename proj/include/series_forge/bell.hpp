#ifndef SERIES_FORGE_BELL_HPP
#define SERIES_FORGE_BELL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <series_forge/exact_functions.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/stirling.hpp>

namespace series_forge
{

namespace detail
{

// Walks part sizes from `size` down to 1 choosing multiplicities l_size,
// accumulating weight * prod (x_i/i!)^{l_i} / l_i! over partitions of
// `remaining_sum` into exactly `remaining_parts` parts.
template <typename R>
void bell_accumulate(int size, int remaining_sum, int remaining_parts, const std::vector<R> &scaled,
                     const R &weight, R &total)
{
    if (remaining_parts == 0) {
        if (remaining_sum == 0) {
            total += weight;
        }
        return;
    }
    if (size == 0 || remaining_sum < remaining_parts || remaining_sum > remaining_parts * size) {
        return;
    }
    R w = weight;
    const int max_count = std::min(remaining_parts, remaining_sum / size);
    for (int count = 0; count <= max_count; ++count) {
        if (count > 0) {
            w = w * scaled[static_cast<std::size_t>(size) - 1] * Rational(1, count);
        }
        bell_accumulate(size - 1, remaining_sum - count * size, remaining_parts - count, scaled, w, total);
    }
}

} // namespace detail

/// Partial Bell polynomial b_{n,k}(x_1, ..., x_{n-k+1}) by direct summation
/// over partitions of n into k parts:
///   sum n! / prod l_i! * prod (x_i / i!)^{l_i}.
/// b_{0,0} = 1, b_{n,0} = 0 for n >= 1 and b_{n,k} = 0 for k > n.
/// R is Rational or PiPoly (anything with ring ops and R * Rational).
template <typename R>
R bell_partial(int n, int k, std::span<const R> xs)
{
    if (n < 0 || k < 0) {
        throw std::invalid_argument("bell_partial: negative index");
    }
    if (k > n) {
        return R(0);
    }
    if (k == 0) {
        return n == 0 ? R(1) : R(0);
    }
    const int width = n - k + 1;
    if (static_cast<int>(xs.size()) < width) {
        throw std::invalid_argument("bell_partial: need " + std::to_string(width) + " arguments, got "
                                    + std::to_string(xs.size()));
    }
    std::vector<R> scaled;
    scaled.reserve(static_cast<std::size_t>(width));
    for (int i = 1; i <= width; ++i) {
        scaled.push_back(xs[static_cast<std::size_t>(i) - 1] * Rational(BigInt(1), factorial(i)));
    }
    R total(0);
    detail::bell_accumulate(width, n, k, scaled, R(1), total);
    return total * Rational(factorial(n));
}

template <typename R>
R bell_partial(int n, int k, const std::vector<R> &xs)
{
    return bell_partial<R>(n, k, std::span<const R>(xs));
}

/// Value of the m-th derivative of arcsin at 0: [(m-2)!!]^2 for odd m, 0 for even m.
inline Rational arcsin_derivative_at_zero(int m)
{
    if (m < 0) {
        throw std::invalid_argument("arcsin_derivative_at_zero: negative order");
    }
    if (m % 2 == 0) {
        return Rational(0);
    }
    const BigInt df = double_factorial(m - 2);
    return Rational(df * df);
}

struct BellArgs
{
    int n = 0;
    int k = 0;
    std::vector<Rational> args;
};

/// Argument vector 0, 1/3, 0, 9/5, 0, 225/7, ... of length 2n-k+1 for the
/// special Bell values b_{2n,k}. Entry i is arcsin^{(i+1)}(0) / (i+1).
inline BellArgs bell_args(int n, int k)
{
    if (n < 1 || k < 1 || k > 2 * n) {
        throw std::invalid_argument("bell_args: need 1 <= k <= 2n");
    }
    BellArgs out{n, k, {}};
    const int width = 2 * n - k + 1;
    out.args.reserve(static_cast<std::size_t>(width));
    for (int i = 1; i <= width; ++i) {
        out.args.push_back(arcsin_derivative_at_zero(i + 1) / Rational(i + 1));
    }
    return out;
}

/// Closed form of b_{2n,k}(0, 1/3, 0, 9/5, ...):
///   (-1)^{n+k} (4n)!! / (2n+k)! * sum_{q=1}^{k} (-1)^q binom(2n+k, k-q) Q(q, 2n; 2).
inline Rational bell_special_value(int n, int k, const StirlingTable &table)
{
    if (n < 1 || k < 1 || k > 2 * n) {
        throw std::invalid_argument("bell_special_value: need 1 <= k <= 2n");
    }
    Rational acc(0);
    for (int q = 1; q <= k; ++q) {
        acc += sign_power(q) * Rational(binomial(2 * n + k, k - q)) * q_value(q, 2 * n, Rational(2), table);
    }
    return sign_power(n + k) * Rational(double_factorial(4 * n), factorial(2 * n + k)) * acc;
}

inline Rational bell_special_value(int n, int k)
{
    return bell_special_value(n, k, *shared_stirling(2 * n + k));
}

} // namespace series_forge

#endif
