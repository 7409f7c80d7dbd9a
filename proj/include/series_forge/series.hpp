#ifndef SERIES_FORGE_SERIES_HPP
#define SERIES_FORGE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <series_forge/rational.hpp>

namespace series_forge
{

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})
/// over a coefficient ring R. The order N is part of the value: binary
/// operations keep only the terms both operands determine.
///
/// R must provide +, -, * with itself, multiplication by Rational, and
/// construction from int (0 and 1).
template <typename R>
class Series
{
public:
    using value_type = R;

    explicit Series(int order = 0) : order_(checked_order(order)), coeffs_(static_cast<std::size_t>(order_) + 1, R(0))
    {
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    Series(std::vector<R> coeffs, int order) : order_(checked_order(order)), coeffs_(std::move(coeffs))
    {
        coeffs_.resize(static_cast<std::size_t>(order_) + 1, R(0));
    }

    static Series constant(const R &c, int order)
    {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c t^power, truncated at `order`.
    static Series monomial(const R &c, int power, int order)
    {
        Series s(order);
        if (power < 0) {
            throw std::invalid_argument("Series::monomial: negative power");
        }
        if (power <= order) {
            s.coeffs_[static_cast<std::size_t>(power)] = c;
        }
        return s;
    }

    /// The series t.
    static Series variable(int order) { return monomial(R(1), 1, order); }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::vector<R> &coeffs() const { return coeffs_; }

    /// Coefficient of t^i; only defined for 0 <= i <= order().
    [[nodiscard]] const R &operator[](int i) const
    {
        if (i < 0 || i > order_) {
            throw std::out_of_range("Series: coefficient index " + std::to_string(i) + " beyond order "
                                    + std::to_string(order_));
        }
        return coeffs_[static_cast<std::size_t>(i)];
    }

    void set(int i, R value)
    {
        if (i < 0 || i > order_) {
            throw std::out_of_range("Series::set: index beyond order");
        }
        coeffs_[static_cast<std::size_t>(i)] = std::move(value);
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R &c) { return c == R(0); });
    }

    /// Lowest index with a nonzero coefficient, if any.
    [[nodiscard]] std::optional<int> valuation() const
    {
        for (int i = 0; i <= order_; ++i) {
            if (!(coeffs_[static_cast<std::size_t>(i)] == R(0))) {
                return i;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] Series truncated(int order) const
    {
        if (order > order_) {
            throw std::invalid_argument("Series::truncated: cannot raise order from " + std::to_string(order_)
                                        + " to " + std::to_string(order));
        }
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
    }

    /// Multiply by t^m. The order grows by m since every shifted term is known.
    [[nodiscard]] Series shifted_up(int m) const
    {
        if (m < 0) {
            throw std::invalid_argument("Series::shifted_up: negative shift");
        }
        std::vector<R> v(static_cast<std::size_t>(m), R(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Series(std::move(v), order_ + m);
    }

    /// Divide by t^m; the m lowest coefficients must vanish.
    [[nodiscard]] Series shifted_down(int m) const
    {
        if (m < 0 || m > order_) {
            throw std::invalid_argument("Series::shifted_down: shift out of range");
        }
        for (int i = 0; i < m; ++i) {
            if (!(coeffs_[static_cast<std::size_t>(i)] == R(0))) {
                throw std::domain_error("Series::shifted_down: nonzero coefficient at t^" + std::to_string(i));
            }
        }
        return Series(std::vector<R>(coeffs_.begin() + m, coeffs_.end()), order_ - m);
    }

    Series &operator+=(const Series &o)
    {
        shrink_to(o.order_);
        for (int i = 0; i <= order_; ++i) {
            coeffs_[static_cast<std::size_t>(i)] += o.coeffs_[static_cast<std::size_t>(i)];
        }
        return *this;
    }

    Series &operator-=(const Series &o)
    {
        shrink_to(o.order_);
        for (int i = 0; i <= order_; ++i) {
            coeffs_[static_cast<std::size_t>(i)] -= o.coeffs_[static_cast<std::size_t>(i)];
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator-(const Series &a) { return a * Rational(-1); }

    /// Cauchy product truncated at min(order).
    friend Series operator*(const Series &a, const Series &b)
    {
        const int n = std::min(a.order_, b.order_);
        Series out(n);
        for (int i = 0; i <= n; ++i) {
            const R &ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == R(0)) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                const R &bj = b.coeffs_[static_cast<std::size_t>(j)];
                if (bj == R(0)) {
                    continue;
                }
                out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
            }
        }
        return out;
    }

    /// Scalar multiple by a Rational.
    friend Series operator*(Series a, const Rational &c)
    {
        for (auto &x : a.coeffs_) {
            x = x * c;
        }
        return a;
    }
    friend Series operator*(const Rational &c, Series a) { return std::move(a) * c; }

    friend bool operator==(const Series &, const Series &) = default;

private:
    static int checked_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("Series: negative order");
        }
        return order;
    }

    void shrink_to(int order)
    {
        if (order < order_) {
            order_ = order;
            coeffs_.resize(static_cast<std::size_t>(order) + 1);
        }
    }

    int order_;
    std::vector<R> coeffs_;
};

/// Multiply every coefficient by a ring element.
template <typename R>
Series<R> scale(Series<R> s, const R &c)
{
    std::vector<R> v = s.coeffs();
    for (auto &x : v) {
        x = x * c;
    }
    return Series<R>(std::move(v), s.order());
}

template <typename R>
Series<R> pow(const Series<R> &s, int m)
{
    if (m < 0) {
        throw std::invalid_argument("pow: negative exponent");
    }
    Series<R> result = Series<R>::constant(R(1), s.order());
    Series<R> base = s;
    while (m > 0) {
        if (m & 1) {
            result = result * base;
        }
        m >>= 1;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

/// outer(inner(t)) by Horner's scheme; inner must have zero constant term.
template <typename R>
Series<R> compose(const Series<R> &outer, const Series<R> &inner)
{
    if (!(inner[0] == R(0))) {
        throw std::domain_error("compose: inner series has a nonzero constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const Series<R> g = inner.truncated(n);
    Series<R> acc = Series<R>::constant(outer[n], n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * g;
        Series<R> c = Series<R>::constant(outer[i], n);
        acc += c;
    }
    return acc;
}

/// Antiderivative with zero constant term; order grows by one.
template <typename R>
Series<R> integrate(const Series<R> &s)
{
    std::vector<R> v(static_cast<std::size_t>(s.order()) + 2, R(0));
    for (int i = 0; i <= s.order(); ++i) {
        v[static_cast<std::size_t>(i) + 1] = s[i] * Rational(1, i + 1);
    }
    return Series<R>(std::move(v), s.order() + 1);
}

/// Formal derivative; order drops by one, so the input needs order >= 1.
template <typename R>
Series<R> differentiate(const Series<R> &s)
{
    if (s.order() < 1) {
        throw std::invalid_argument("differentiate: order-0 series has no known derivative terms");
    }
    std::vector<R> v(static_cast<std::size_t>(s.order()), R(0));
    for (int i = 1; i <= s.order(); ++i) {
        v[static_cast<std::size_t>(i) - 1] = s[i] * Rational(i);
    }
    return Series<R>(std::move(v), s.order() - 1);
}

/// exp(s) = sum s^k / k!; s must have zero constant term.
template <typename R>
Series<R> exp_series_of(const Series<R> &s)
{
    if (!(s[0] == R(0))) {
        throw std::domain_error("exp_series_of: nonzero constant term");
    }
    const int n = s.order();
    Series<R> result = Series<R>::constant(R(1), n);
    Series<R> term = result;
    for (int k = 1; k <= n; ++k) {
        term = term * s * Rational(1, k);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

namespace detail
{

/// 1/s by the leading-coefficient recurrence; s[0] must be invertible.
inline Series<Rational> reciprocal(const Series<Rational> &s)
{
    const Rational &c0 = s[0];
    if (c0.is_zero()) {
        throw std::domain_error("reciprocal: zero constant term");
    }
    const int n = s.order();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    r[0] = Rational(1) / c0;
    for (int i = 1; i <= n; ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) {
            acc += s[j] * r[static_cast<std::size_t>(i - j)];
        }
        r[static_cast<std::size_t>(i)] = -acc / c0;
    }
    return Series<Rational>(std::move(r), n);
}

} // namespace detail

/// Horner evaluation of the truncated polynomial in double precision.
inline double eval_float(const Series<Rational> &s, double t)
{
    double acc = 0.0;
    for (int i = s.order(); i >= 0; --i) {
        acc = acc * t + s[i].to_double();
    }
    return acc;
}

} // namespace series_forge

#endif
