#ifndef SERIES_FORGE_IDENTITIES_HPP
#define SERIES_FORGE_IDENTITIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <series_forge/base_series.hpp>
#include <series_forge/bell.hpp>
#include <series_forge/exact_functions.hpp>
#include <series_forge/expansions.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>
#include <series_forge/stirling.hpp>

namespace series_forge
{

struct Counterexample
{
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport
{
    std::string id;
    std::string swept_range;
    long checks = 0;
    std::optional<Counterexample> counterexample;

    [[nodiscard]] bool passed() const { return !counterexample.has_value(); }
    [[nodiscard]] std::string_view status() const { return passed() ? "pass" : "fail"; }
};

/// Sweep limits. Defaults finish in a few seconds.
struct SuiteBounds
{
    int q_max = 30;
    int diagonal_max = 25;
    int quaintance_z = 5;
    int quaintance_k = 12;
    int sprugnoli_n = 20;
    int bell_x_n = 12;
    int falling_bell_n = 10;
    int bell_arctan_max = 16;
    int bell_closed_form_max = 16;
    int bell_gf_n = 12;
    int bell_gf_k = 5;
    int comtet_n = 8;
    int comtet_k = 4;
    int scaling_instances = 50;
    int stirling_gf_n = 25;
    std::uint32_t seed = 20240501;
};

/// Test hooks for negative controls: a replacement Stirling table and a
/// constant added to every right-hand side.
struct SuiteHooks
{
    std::shared_ptr<const StirlingTable> table;
    Rational rhs_bias;
};

namespace detail
{

class Sweep
{
public:
    Sweep(std::string id, std::string range, const SuiteHooks &hooks) : hooks_(hooks)
    {
        report_.id = std::move(id);
        report_.swept_range = std::move(range);
    }

    [[nodiscard]] bool failed() const { return report_.counterexample.has_value(); }

    /// Compare one instance; keeps only the first failure. Returns false once
    /// the sweep has failed so callers can stop early.
    template <typename R, typename Params>
    bool check(const R &lhs, R rhs, Params &&params)
    {
        if (failed()) {
            return false;
        }
        ++report_.checks;
        rhs = rhs + R(hooks_.rhs_bias);
        if (!(lhs == rhs)) {
            report_.counterexample = Counterexample{params(), lhs.to_string(), rhs.to_string()};
            return false;
        }
        return true;
    }

    const StirlingTable &table(int min_n)
    {
        if (hooks_.table) {
            if (hooks_.table->max_n() < min_n) {
                throw std::invalid_argument("injected Stirling table too small for sweep");
            }
            return *hooks_.table;
        }
        if (!shared_ || shared_->max_n() < min_n) {
            shared_ = shared_stirling(min_n);
        }
        return *shared_;
    }

    IdentityReport finish() { return std::move(report_); }

private:
    const SuiteHooks &hooks_;
    IdentityReport report_;
    std::shared_ptr<const StirlingTable> shared_;
};

inline std::string kv(std::initializer_list<std::pair<const char *, std::string>> items)
{
    std::string out;
    for (const auto &[k, v] : items) {
        if (!out.empty()) {
            out += ", ";
        }
        out += k;
        out += "=";
        out += v;
    }
    return out;
}

inline std::string str(long v) { return std::to_string(v); }
inline std::string str(const Rational &v) { return v.to_string(); }

inline std::vector<Rational> rational_test_set()
{
    return {Rational(0),     Rational(1),     Rational(2),     Rational(-1),    Rational(-4),
            Rational(1, 2),  Rational(-1, 2), Rational(1, 3),  Rational(-7, 3), Rational(5, 4),
            Rational(22, 7), Rational(-9, 5), Rational(13, 6), Rational(3, 10)};
}

inline Rational rational_power(const Rational &x, int e)
{
    if (e >= 0) {
        return pow(x, static_cast<unsigned>(e));
    }
    return Rational(1) / pow(x, static_cast<unsigned>(-e));
}

} // namespace detail

/// Q(1,2k+1;2) = 0 and Q(m+1,2k-1;2) = 0.
inline IdentityReport verify_q_vanishing(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("q-vanishing", "1 <= k, m <= " + std::to_string(b.q_max), h);
    const auto &t = sw.table(3 * b.q_max + 2);
    const Rational two(2);
    for (int k = 1; k <= b.q_max; ++k) {
        sw.check(q_value(1, 2 * k + 1, two, t), Rational(0), [&] { return "Q(1,2k+1;2), " + detail::kv({{"k", detail::str(k)}}); });
        for (int m = 1; m <= b.q_max; ++m) {
            sw.check(q_value(m + 1, 2 * k - 1, two, t), Rational(0), [&] {
                return "Q(m+1,2k-1;2), " + detail::kv({{"m", detail::str(m)}, {"k", detail::str(k)}});
            });
        }
    }
    return sw.finish();
}

/// Q(2,2k;2) = (-1)^k (k!)^2.
inline IdentityReport verify_q2_square(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("q2-square", "1 <= k <= " + std::to_string(b.q_max), h);
    const auto &t = sw.table(2 * b.q_max + 2);
    for (int k = 1; k <= b.q_max; ++k) {
        const BigInt f = factorial(k);
        sw.check(q_value(2, 2 * k, Rational(2), t), sign_power(k) * Rational(f * f),
                 [&] { return detail::kv({{"k", detail::str(k)}}); });
    }
    return sw.finish();
}

/// Q(1,2k+1;3) = (2k+1)! binom((2k-1)/2, 2k+1) for k >= 0 and Q(1,2k+2;3) = 0 for k >= 1.
inline IdentityReport verify_q13(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("q13", "0 <= k <= " + std::to_string(b.q_max), h);
    const auto &t = sw.table(2 * b.q_max + 2);
    const Rational three(3);
    for (int k = 0; k <= b.q_max; ++k) {
        const Rational rhs = Rational(factorial(2 * k + 1)) * extended_binomial(Rational(2 * k - 1, 2), 2 * k + 1);
        sw.check(q_value(1, 2 * k + 1, three, t), rhs, [&] { return "Q(1,2k+1;3), " + detail::kv({{"k", detail::str(k)}}); });
        if (k >= 1) {
            sw.check(q_value(1, 2 * k + 2, three, t), Rational(0),
                     [&] { return "Q(1,2k+2;3), " + detail::kv({{"k", detail::str(k)}}); });
        }
    }
    return sw.finish();
}

namespace detail
{

// Derivatives at 0 of arctan (signed) or arctanh: 0!, 0, -2!, 0, 4!, ...
inline std::vector<Rational> arctan_derivatives(int count, bool alternating)
{
    std::vector<Rational> xs;
    for (int i = 1; i <= count; ++i) {
        if (i % 2 == 0) {
            xs.emplace_back(0);
        } else {
            const int j = (i - 1) / 2;
            Rational v(factorial(2 * j));
            xs.push_back(alternating ? sign_power(j) * v : v);
        }
    }
    return xs;
}

inline IdentityReport bell_arctan_like(const char *id, bool alternating, const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw(id, "n >= 1, k >= 0, 2k+n <= " + std::to_string(b.bell_arctan_max), h);
    const auto xs = arctan_derivatives(b.bell_arctan_max, alternating);
    for (int n = 1; n <= b.bell_arctan_max; ++n) {
        const int k_max = (b.bell_arctan_max - n) / 2;
        const auto nested = arctan_nested_sums(n, k_max);
        for (int k = 0; k <= k_max; ++k) {
            const int big = 2 * k + n;
            Rational rhs = Rational(factorial(big - 1)) * nested[static_cast<std::size_t>(k)];
            if (alternating) {
                rhs = sign_power(k) * rhs;
            }
            auto params = [&] { return detail::kv({{"n", str(n)}, {"k", str(k)}}); };
            sw.check(bell_partial(big, n, xs), rhs, params);
            if (k >= 1) {
                sw.check(bell_partial(big - 1, n, xs), Rational(0), [&] { return "odd index, " + params(); });
            }
        }
    }
    return sw.finish();
}

} // namespace detail

/// b_{2k+n,n}(0!, 0, -2!, 0, 4!, ...) = (-1)^k (2k+n-1)! N_n(k) and b_{2k+n-1,n}(...) = 0,
/// where N_n(k) is the nested sum of arctan_nested_sums.
inline IdentityReport verify_bell_arctan(const SuiteBounds &b, const SuiteHooks &h)
{
    return detail::bell_arctan_like("bell-arctan", true, b, h);
}

/// Unsigned arguments 0!, 0, 2!, 0, 4!, ... and no (-1)^k.
inline IdentityReport verify_bell_arctanh(const SuiteBounds &b, const SuiteHooks &h)
{
    return detail::bell_arctan_like("bell-arctanh", false, b, h);
}

/// b_{n,k}(x, 1, 0, ..., 0) = 2^{k-n} n!/k! binom(k, n-k) x^{2k-n}.
inline IdentityReport verify_bell_x_1_0(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("bell-x-1-0", "1 <= k <= n <= " + std::to_string(b.bell_x_n) + ", x in test set", h);
    for (const auto &x : detail::rational_test_set()) {
        std::vector<Rational> xs(static_cast<std::size_t>(b.bell_x_n), Rational(0));
        xs[0] = x;
        if (xs.size() > 1) {
            xs[1] = Rational(1);
        }
        for (int n = 1; n <= b.bell_x_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                const BigInt c = binomial(k, n - k);
                Rational rhs(0);
                if (c != 0) {
                    rhs = detail::rational_power(Rational(1, 2), n - k) * Rational(factorial(n), factorial(k))
                          * Rational(c) * detail::rational_power(x, 2 * k - n);
                }
                sw.check(bell_partial(n, k, xs), rhs,
                         [&] { return detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}, {"x", x.to_string()}}); });
            }
        }
    }
    return sw.finish();
}

/// The two diagonal recurrences for s(n, k):
///   (A) s(n+k,k)/binom(n+k,k) = sum_{l=0}^{n} (-1)^l <k>_l / l! sum_{m=0}^{l} (-1)^m binom(l,m) s(n+m,m)/binom(n+m,m)
///   (B) s(n,k) = (-1)^k sum_{m=1}^{n} (-1)^m sum_{l=k-m}^{k-1} (-1)^l binom(n,l) binom(l,k-m) s(n-l,k-l)
///       s(n,k) = (-1)^{n-k} sum_{l=0}^{k-1} (-1)^l binom(n,l) binom(l-1,k-n-1) s(n-l,k-l)
/// (A) is swept over n, k >= 0; the (B) pair over n >= 1, 0 <= k <= n. The
/// second (B) form needs the integer-argument extended binomial.
inline IdentityReport verify_stirling_diagonals(const SuiteBounds &b, const SuiteHooks &h)
{
    const int lim = b.diagonal_max;
    detail::Sweep sw("stirling-diagonals", "n + k <= " + std::to_string(lim), h);
    const auto &t = sw.table(lim);
    auto s = [&](int n, int k) { return Rational(t.value_or_zero(n, k)); };
    for (int n = 0; n <= lim; ++n) {
        for (int k = 0; n + k <= lim; ++k) {
            Rational rhs(0);
            for (int l = 0; l <= n; ++l) {
                Rational inner(0);
                for (int m = 0; m <= l; ++m) {
                    inner += sign_power(m) * Rational(binomial(l, m)) * s(n + m, m) / Rational(binomial(n + m, m));
                }
                rhs += sign_power(l) * falling_factorial(Rational(k), l) / Rational(factorial(l)) * inner;
            }
            sw.check(s(n + k, k) / Rational(binomial(n + k, k)), rhs,
                     [&] { return "first recurrence, " + detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}}); });
        }
    }
    for (int n = 1; n <= lim; ++n) {
        for (int k = 0; k <= n && n + k <= lim; ++k) {
            Rational rhs1(0);
            for (int m = 1; m <= n; ++m) {
                Rational inner(0);
                for (int l = std::max(k - m, 0); l <= k - 1; ++l) {
                    inner += sign_power(l) * Rational(binomial(n, l) * binomial(l, k - m)) * s(n - l, k - l);
                }
                rhs1 += sign_power(m) * inner;
            }
            rhs1 = sign_power(k) * rhs1;
            sw.check(s(n, k), rhs1,
                     [&] { return "second recurrence, " + detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}}); });

            Rational rhs2(0);
            for (int l = 0; l <= k - 1; ++l) {
                rhs2 += sign_power(l) * Rational(binomial(n, l)) * extended_binomial_int(l - 1, k - n - 1) * s(n - l, k - l);
            }
            rhs2 = sign_power(n - k) * rhs2;
            sw.check(s(n, k), rhs2,
                     [&] { return "third recurrence, " + detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}}); });
        }
    }
    return sw.finish();
}

/// b_{n,k}(<a>_1, <a>_2, ...) = (-1)^k n!/k! sum_l (-1)^l binom(k,l) binom(a l, n), and
/// b_{n,k}(1, 1-lam, (1-lam)(1-2lam), ...) = (-1)^k lam^n n!/k! sum_l (-1)^l binom(k,l) binom(l/lam, n),
/// which is S(n,k) at lam = 0.
inline IdentityReport verify_falling_factorial_bell(const SuiteBounds &b, const SuiteHooks &h)
{
    const int nmax = b.falling_bell_n;
    detail::Sweep sw("falling-factorial-bell", "1 <= k <= n <= " + std::to_string(nmax) + ", alpha and lambda in test set", h);
    const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 3), Rational(5, 2)};
    const std::vector<Rational> lambdas{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 3), Rational(2)};
    for (const auto &a : alphas) {
        std::vector<Rational> xs;
        for (int i = 1; i <= nmax; ++i) {
            xs.push_back(falling_factorial(a, i));
        }
        for (int n = 1; n <= nmax; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational acc(0);
                for (int l = 0; l <= k; ++l) {
                    acc += sign_power(l) * Rational(binomial(k, l)) * extended_binomial(a * Rational(l), n);
                }
                const Rational rhs = sign_power(k) * Rational(factorial(n), factorial(k)) * acc;
                sw.check(bell_partial(n, k, xs), rhs, [&] {
                    return "alpha form, " + detail::kv({{"alpha", a.to_string()}, {"n", detail::str(n)}, {"k", detail::str(k)}});
                });
            }
        }
    }
    for (const auto &lam : lambdas) {
        std::vector<Rational> xs;
        Rational prod(1);
        for (int i = 1; i <= nmax; ++i) {
            xs.push_back(prod);
            prod *= Rational(1) - Rational(i) * lam;
        }
        for (int n = 1; n <= nmax; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational rhs;
                if (lam.is_zero()) {
                    rhs = Rational(stirling_second(n, k));
                } else {
                    Rational acc(0);
                    for (int l = 0; l <= k; ++l) {
                        acc += sign_power(l) * Rational(binomial(k, l)) * extended_binomial(Rational(l) / lam, n);
                    }
                    rhs = sign_power(k) * pow(lam, static_cast<unsigned>(n)) * Rational(factorial(n), factorial(k)) * acc;
                }
                sw.check(bell_partial(n, k, xs), rhs, [&] {
                    return "lambda form, " + detail::kv({{"lambda", lam.to_string()}, {"n", detail::str(n)}, {"k", detail::str(k)}});
                });
            }
        }
    }
    return sw.finish();
}

/// k! binom(z, k) = sum_l s(k, l) z^l.
inline IdentityReport verify_quaintance(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("quaintance", "|z| <= " + std::to_string(b.quaintance_z) + ", k <= " + std::to_string(b.quaintance_k), h);
    const auto &t = sw.table(b.quaintance_k);
    for (int z = -b.quaintance_z; z <= b.quaintance_z; ++z) {
        for (int k = 0; k <= b.quaintance_k; ++k) {
            Rational rhs(0);
            for (int l = 0; l <= k; ++l) {
                rhs += Rational(t.at(k, l)) * detail::rational_power(Rational(z), l);
            }
            sw.check(Rational(factorial(k)) * extended_binomial(Rational(z), k), rhs,
                     [&] { return detail::kv({{"z", detail::str(z)}, {"k", detail::str(k)}}); });
        }
    }
    return sw.finish();
}

/// sum_{k=0}^{n} (-1)^k binom(x,k) = (-1)^n binom(x-1,n) = prod_{k=1}^{n} (1 - x/k).
inline IdentityReport verify_sprugnoli(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("sprugnoli", "n <= " + std::to_string(b.sprugnoli_n) + ", x in test set", h);
    for (const auto &x : detail::rational_test_set()) {
        Rational sum(0);
        Rational prod(1);
        for (int n = 0; n <= b.sprugnoli_n; ++n) {
            sum += sign_power(n) * extended_binomial(x, n);
            if (n > 0) {
                prod *= Rational(1) - x / Rational(n);
            }
            auto params = [&] { return detail::kv({{"x", x.to_string()}, {"n", detail::str(n)}}); };
            sw.check(sum, sign_power(n) * extended_binomial(x - Rational(1), n), params);
            sw.check(sum, prod, [&] { return "product form, " + params(); });
        }
    }
    return sw.finish();
}

/// b_{n,k}(ab x_1, ab^2 x_2, ...) = a^k b^n b_{n,k}(x_1, x_2, ...) on random instances.
inline IdentityReport verify_bell_scaling(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("bell-scaling", std::to_string(b.scaling_instances) + " random instances, n <= 10", h);
    std::mt19937 rng(b.seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto rnd = [&](bool nonzero) {
        for (;;) {
            Rational r(pick(-12, 12), pick(1, 7));
            if (!nonzero || !r.is_zero()) {
                return r;
            }
        }
    };
    for (int trial = 0; trial < b.scaling_instances; ++trial) {
        const int n = pick(1, 10);
        const int k = pick(1, n);
        const Rational a = rnd(true);
        const Rational bb = rnd(true);
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        Rational bpow = bb;
        for (int i = 1; i <= n - k + 1; ++i) {
            xs.push_back(rnd(false));
            ys.push_back(a * bpow * xs.back());
            bpow *= bb;
        }
        const Rational rhs = pow(a, static_cast<unsigned>(k)) * pow(bb, static_cast<unsigned>(n)) * bell_partial(n, k, xs);
        sw.check(bell_partial(n, k, ys), rhs, [&] {
            return detail::kv({{"trial", detail::str(trial)}, {"n", detail::str(n)}, {"k", detail::str(k)},
                               {"a", a.to_string()}, {"b", bb.to_string()}});
        });
    }
    return sw.finish();
}

/// b_{n,k}(x_2/2, x_3/3, ...) = n!/(n+k)! b_{n+k,k}(0, x_2, x_3, ...) on random vectors.
inline IdentityReport verify_comtet_shift(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("comtet-shift", "n <= " + std::to_string(b.comtet_n) + ", k <= " + std::to_string(b.comtet_k), h);
    std::mt19937 rng(b.seed + 1);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rational> x(static_cast<std::size_t>(b.comtet_n) + 2);
        for (auto &v : x) {
            v = Rational(pick(-15, 15), pick(1, 6));
        }
        x[0] = Rational(0);
        std::vector<Rational> shifted;
        for (std::size_t i = 1; i < x.size(); ++i) {
            shifted.push_back(x[i] / Rational(static_cast<long>(i) + 1));
        }
        for (int n = 0; n <= b.comtet_n; ++n) {
            for (int k = 0; k <= b.comtet_k; ++k) {
                const Rational rhs = Rational(factorial(n), factorial(n + k)) * bell_partial(n + k, k, x);
                sw.check(bell_partial(n, k, shifted), rhs, [&] {
                    return detail::kv({{"trial", detail::str(trial)}, {"n", detail::str(n)}, {"k", detail::str(k)}});
                });
            }
        }
    }
    return sw.finish();
}

/// bell_special_value(n, k) = bell_partial(2n, k, bell_args(n, k)).
inline IdentityReport verify_bell_closed_form(const SuiteBounds &b, const SuiteHooks &h)
{
    detail::Sweep sw("bell-closed-form", "1 <= k <= 2n <= " + std::to_string(b.bell_closed_form_max), h);
    const auto &t = sw.table(2 * b.bell_closed_form_max);
    for (int n = 1; 2 * n <= b.bell_closed_form_max; ++n) {
        for (int k = 1; k <= 2 * n; ++k) {
            sw.check(bell_special_value(n, k, t), bell_partial(2 * n, k, bell_args(n, k).args),
                     [&] { return detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}}); });
        }
    }
    return sw.finish();
}

/// b_{n,k}(x) = n! [t^n] (sum x_m t^m/m!)^k / k! on random vectors.
inline IdentityReport verify_bell_generating_function(const SuiteBounds &b, const SuiteHooks &h)
{
    const int order = b.bell_gf_n;
    detail::Sweep sw("bell-generating-function", "n <= " + std::to_string(order) + ", k <= " + std::to_string(b.bell_gf_k), h);
    std::mt19937 rng(b.seed + 2);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> xs;
        Series<Rational> inner(order);
        for (int m = 1; m <= order; ++m) {
            xs.emplace_back(pick(-9, 9), pick(1, 5));
            inner.set(m, xs.back() * Rational(BigInt(1), factorial(m)));
        }
        Series<Rational> power = Series<Rational>::constant(Rational(1), order);
        for (int k = 1; k <= b.bell_gf_k; ++k) {
            power = power * inner;
            for (int n = 0; n <= order; ++n) {
                sw.check(bell_partial(n, k, xs), power[n] * Rational(factorial(n), factorial(k)), [&] {
                    return detail::kv({{"trial", detail::str(trial)}, {"n", detail::str(n)}, {"k", detail::str(k)}});
                });
            }
        }
    }
    return sw.finish();
}

/// s(n, k) = n! [x^n] (ln(1+x))^k / k!.
inline IdentityReport verify_stirling_generating_function(const SuiteBounds &b, const SuiteHooks &h)
{
    const int order = b.stirling_gf_n;
    detail::Sweep sw("stirling-generating-function", "0 <= k <= n <= " + std::to_string(order), h);
    const auto &t = sw.table(order);
    const Series<Rational> log1p = log1p_series(order);
    Series<Rational> power = Series<Rational>::constant(Rational(1), order);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            power = power * log1p;
        }
        for (int n = k; n <= order; ++n) {
            sw.check(Rational(t.at(n, k)), power[n] * Rational(factorial(n), factorial(k)),
                     [&] { return detail::kv({{"n", detail::str(n)}, {"k", detail::str(k)}}); });
        }
    }
    return sw.finish();
}

using IdentityChecker = std::function<IdentityReport(const SuiteBounds &, const SuiteHooks &)>;

struct IdentityEntry
{
    std::string_view id;
    IdentityChecker run;
};

inline const std::vector<IdentityEntry> &identity_registry()
{
    static const std::vector<IdentityEntry> registry{
        {"q-vanishing", verify_q_vanishing},
        {"q2-square", verify_q2_square},
        {"q13", verify_q13},
        {"bell-arctan", verify_bell_arctan},
        {"bell-arctanh", verify_bell_arctanh},
        {"bell-x-1-0", verify_bell_x_1_0},
        {"stirling-diagonals", verify_stirling_diagonals},
        {"falling-factorial-bell", verify_falling_factorial_bell},
        {"quaintance", verify_quaintance},
        {"sprugnoli", verify_sprugnoli},
        {"bell-scaling", verify_bell_scaling},
        {"comtet-shift", verify_comtet_shift},
        {"bell-closed-form", verify_bell_closed_form},
        {"bell-generating-function", verify_bell_generating_function},
        {"stirling-generating-function", verify_stirling_generating_function},
    };
    return registry;
}

inline const IdentityEntry *find_identity(std::string_view id)
{
    for (const auto &e : identity_registry()) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

struct SuiteConfig
{
    /// nullopt runs every registered identity; an empty list runs none.
    std::optional<std::vector<std::string>> ids;
    SuiteBounds bounds;
    SuiteHooks hooks;
};

/// Reports come back in registry order when ids is unset, otherwise in the
/// order requested. Unknown ids throw std::invalid_argument.
inline std::vector<IdentityReport> run_all(const SuiteConfig &config)
{
    std::vector<const IdentityEntry *> selected;
    if (!config.ids) {
        for (const auto &e : identity_registry()) {
            selected.push_back(&e);
        }
    } else {
        for (const auto &id : *config.ids) {
            const IdentityEntry *e = find_identity(id);
            if (e == nullptr) {
                throw std::invalid_argument("unknown identity id '" + id + "'");
            }
            selected.push_back(e);
        }
    }
    std::vector<IdentityReport> out;
    out.reserve(selected.size());
    for (const auto *e : selected) {
        out.push_back(e->run(config.bounds, config.hooks));
    }
    return out;
}

inline bool all_passed(const std::vector<IdentityReport> &reports)
{
    for (const auto &r : reports) {
        if (!r.passed()) {
            return false;
        }
    }
    return true;
}

} // namespace series_forge

#endif
