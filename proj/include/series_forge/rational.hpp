#ifndef SERIES_FORGE_RATIONAL_HPP
#define SERIES_FORGE_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace series_forge
{

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    Rational(const BigInt &value) : value_(value) {}

    Rational(const BigInt &num, const BigInt &den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_.get_num() = num;
        value_.get_den() = den;
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p" (optional leading sign on p).
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(BigInt(std::string(text), 10));
            }
            return Rational(BigInt(std::string(text.substr(0, slash)), 10),
                            BigInt(std::string(text.substr(slash + 1)), 10));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    [[nodiscard]] const BigInt &numerator() const { return value_.get_num(); }
    [[nodiscard]] const BigInt &denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    [[nodiscard]] const mpq_class &raw() const { return value_; }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational pow(const Rational &base, unsigned exponent)
{
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

/// (-1)^n as a Rational.
inline Rational sign_power(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace series_forge

#endif
