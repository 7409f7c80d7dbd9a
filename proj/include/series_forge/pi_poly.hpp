#ifndef SERIES_FORGE_PI_POLY_HPP
#define SERIES_FORGE_PI_POLY_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <series_forge/rational.hpp>

namespace series_forge
{

/// Polynomial in the formal symbol pi with rational coefficients.
/// coeffs()[i] multiplies pi^i; trailing zeros are never stored, so the
/// zero polynomial has no coefficients at all.
class PiPoly
{
public:
    PiPoly() = default;
    PiPoly(int c) : PiPoly(Rational(c)) {}
    PiPoly(long c) : PiPoly(Rational(c)) {}
    PiPoly(const Rational &c)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }
    explicit PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    /// c * pi^power
    static PiPoly monomial(const Rational &c, std::size_t power)
    {
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return PiPoly(std::move(v));
    }

    static PiPoly pi() { return monomial(Rational(1), 1); }

    [[nodiscard]] const std::vector<Rational> &coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Degree in pi; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    [[nodiscard]] Rational coeff(std::size_t power) const
    {
        return power < coeffs_.size() ? coeffs_[power] : Rational(0);
    }

    [[nodiscard]] double eval(double pi_value) const
    {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * pi_value + it->to_double();
        }
        return acc;
    }

    /// Human-readable form such as "1/4*pi^2 - pi + 3".
    [[nodiscard]] std::string to_string() const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational &c = coeffs_[i];
            if (c.is_zero()) {
                continue;
            }
            const bool neg = c.sign() < 0;
            const Rational mag = neg ? -c : c;
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += mag.to_string();
                continue;
            }
            if (mag != Rational(1)) {
                out += mag.to_string() + "*";
            }
            out += "pi";
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    PiPoly &operator+=(const PiPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    PiPoly &operator-=(const PiPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    PiPoly &operator*=(const Rational &c)
    {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    friend PiPoly operator+(PiPoly a, const PiPoly &b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly &b) { return a -= b; }
    friend PiPoly operator-(PiPoly a)
    {
        for (auto &x : a.coeffs_) {
            x = -x;
        }
        return a;
    }

    friend PiPoly operator*(const PiPoly &a, const PiPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return PiPoly(std::move(out));
    }

    friend PiPoly operator*(PiPoly a, const Rational &c) { return a *= c; }
    friend PiPoly operator*(const Rational &c, PiPoly a) { return a *= c; }

    friend bool operator==(const PiPoly &, const PiPoly &) = default;

    friend std::ostream &operator<<(std::ostream &os, const PiPoly &p) { return os << p.to_string(); }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

inline PiPoly pow(const PiPoly &base, unsigned exponent)
{
    PiPoly result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * base;
    }
    return result;
}

} // namespace series_forge

#endif
