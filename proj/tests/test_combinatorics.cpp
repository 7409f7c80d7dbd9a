#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include <series_forge/base_series.hpp>
#include <series_forge/bell.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/series.hpp>
#include <series_forge/stirling.hpp>

#include "generators.hpp"

using namespace series_forge;

namespace
{

// n! [x^n] (ln(1+x))^k / k!
Rational stirling_from_log(int n, int k)
{
    const auto s = pow(log1p_series(n), k) * Rational(BigInt(1), factorial(k));
    return s[n] * Rational(factorial(n));
}

} // namespace

TEST(Stirling, Examples)
{
    EXPECT_EQ(stirling_first(3, 3), 1);
    EXPECT_EQ(stirling_first(2, 1), -1);
    EXPECT_EQ(Rational(stirling_first(2, 1)), stirling_from_log(2, 1));
    EXPECT_EQ(stirling_first(4, 2), 11);
    EXPECT_EQ(Rational(stirling_first(4, 2)), stirling_from_log(4, 2));
    EXPECT_THROW(stirling_first(2, 3), std::out_of_range);
    EXPECT_THROW(stirling_first(-1, 0), std::out_of_range);
}

TEST(Stirling, SecondKindExamples)
{
    EXPECT_EQ(stirling_second(4, 4), 1);
    EXPECT_EQ(stirling_second(4, 2), 7);
    EXPECT_EQ(stirling_second(3, 1), 1);
    EXPECT_EQ(stirling_second(0, 0), 1);
    EXPECT_EQ(stirling_second(5, 0), 0);
    EXPECT_THROW(stirling_second(3, 4), std::out_of_range);
}

TEST(Stirling, SecondKindMatchesExponentialGeneratingFunction)
{
    const int order = 14;
    Series<Rational> em1 = exp_series(order) - Series<Rational>::constant(Rational(1), order);
    for (int k = 1; k <= 8; ++k) {
        const auto s = pow(em1, k) * Rational(BigInt(1), factorial(k));
        for (int n = k; n <= order; ++n) {
            EXPECT_EQ(Rational(stirling_second(n, k)), s[n] * Rational(factorial(n))) << n << "," << k;
        }
    }
}

TEST(StirlingTable, Invariants)
{
    const StirlingTable t(40);
    EXPECT_EQ(t.at(0, 0), 1);
    for (int n = 1; n <= 40; ++n) {
        EXPECT_EQ(t.at(n, n), 1);
        EXPECT_EQ(t.at(n, 0), 0);
    }
    for (int n = 0; n < 40; ++n) {
        for (int k = 1; k <= n + 1; ++k) {
            EXPECT_EQ(t.value_or_zero(n + 1, k), t.value_or_zero(n, k - 1) - BigInt(n) * t.value_or_zero(n, k));
        }
    }
    EXPECT_THROW((void)t.at(41, 1), std::out_of_range);
    EXPECT_EQ(t.value_or_zero(3, 5), 0);
    EXPECT_EQ(t.value_or_zero(-1, 0), 0);
}

TEST(StirlingTable, GeneratingFunction)
{
    const int order = 18;
    const auto table = shared_stirling(order);
    const Series<Rational> log1p = log1p_series(order);
    Series<Rational> power = Series<Rational>::constant(Rational(1), order);
    for (int k = 1; k <= 10; ++k) {
        power = power * log1p;
        const auto scaled = power * Rational(BigInt(1), factorial(k));
        for (int n = 0; n <= order; ++n) {
            EXPECT_EQ(scaled[n] * Rational(factorial(n)), Rational(table->value_or_zero(n, k))) << n << "," << k;
        }
    }
}

TEST(StirlingTable, SharedTableGrows)
{
    const auto small = shared_stirling(10);
    const auto large = shared_stirling(300);
    EXPECT_GE(large->max_n(), 300);
    EXPECT_EQ(small->at(10, 3), large->at(10, 3));
}

TEST(StirlingTable, WithEntryLeavesOriginal)
{
    const StirlingTable t(10);
    const StirlingTable bad = t.with_entry(5, 2, BigInt(0));
    EXPECT_EQ(bad.at(5, 2), 0);
    EXPECT_EQ(t.at(5, 2), -50);
}

TEST(QValue, Examples)
{
    // definition by hand: s(2,0) + s(2,1)/2 + s(2,2)/4
    EXPECT_EQ(q_value(1, 2, Rational(2)), Rational(0) + Rational(-1, 2) + Rational(1, 4));
    EXPECT_EQ(q_value(1, 2, Rational(2)), Rational(-1, 4));
    EXPECT_EQ(q_value(1, 3, Rational(2)), Rational(0));
    EXPECT_EQ(q_value(2, 2, Rational(2)), Rational(-1));
}

TEST(QValue, CrossCheckAgainstArcsinCoefficient)
{
    // (arcsin t / t) at t^2 is -Q(1,2;2) * 4 / (3 * 2!) = 1/6
    const Rational c = -q_value(1, 2, Rational(2)) * Rational(4) / (Rational(3) * Rational(2));
    EXPECT_EQ(c, arcsin_series(3)[3]);
}

TEST(QValue, Errors)
{
    EXPECT_THROW(q_value(1, 1, Rational(2)), std::domain_error);
    EXPECT_THROW(q_value(0, 2, Rational(2)), std::invalid_argument);
    EXPECT_THROW(q_value(1, -1, Rational(2)), std::invalid_argument);
    EXPECT_EQ(q_value(4, 0, Rational(3)), Rational(1));
}

TEST(QValue, RationalAlpha)
{
    // Q(1,1;1/2) = s(1,0) + s(1,1) * (3/2)/2 = 3/4
    EXPECT_EQ(q_value(1, 1, Rational(1, 2)), Rational(3, 4));
}

TEST(Bell, DefinitionExamples)
{
    const std::vector<Rational> xs{Rational(0), Rational(1, 3)};
    EXPECT_EQ(bell_partial(2, 1, xs), Rational(1, 3));

    const std::vector<PiPoly> ps{PiPoly::pi(), PiPoly(1), PiPoly(0)};
    EXPECT_EQ(bell_partial(3, 2, ps), PiPoly::monomial(Rational(3), 1));

    const std::vector<Rational> twos{Rational(2), Rational(5), Rational(7)};
    EXPECT_EQ(bell_partial(3, 3, twos), Rational(8));
}

TEST(Bell, EdgeCases)
{
    const std::vector<Rational> none;
    EXPECT_EQ(bell_partial(0, 0, none), Rational(1));
    const std::vector<Rational> xs{Rational(1), Rational(2), Rational(3)};
    EXPECT_EQ(bell_partial(3, 0, xs), Rational(0));
    EXPECT_EQ(bell_partial(2, 3, xs), Rational(0));
    EXPECT_THROW(bell_partial(5, 1, xs), std::invalid_argument);
    EXPECT_THROW(bell_partial(-1, 0, xs), std::invalid_argument);
}

TEST(Bell, AllOnesGiveSecondKindStirling)
{
    const std::vector<Rational> ones(12, Rational(1));
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            EXPECT_EQ(bell_partial(n, k, ones), Rational(stirling_second(n, k)));
        }
    }
}

TEST(BellArgs, Examples)
{
    const auto a = bell_args(3, 2);
    ASSERT_EQ(a.args.size(), 5U);
    const std::vector<Rational> expect{Rational(0), Rational(1, 3), Rational(0), Rational(9, 5), Rational(0)};
    EXPECT_EQ(a.args, expect);
    EXPECT_EQ(bell_args(1, 2).args, std::vector<Rational>{Rational(0)});
    EXPECT_EQ(bell_args(3, 1).args[5], Rational(225, 7));
    EXPECT_THROW(bell_args(1, 3), std::invalid_argument);
}

TEST(BellArgs, FinalEntryFormula)
{
    // final entry (1+(-1)^{k+1})/2 * ((2n-k)!!)^2 / (2n-k+2)
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 2 * n; ++k) {
            const auto a = bell_args(n, k);
            const BigInt df = double_factorial(2 * n - k);
            const Rational parity = k % 2 == 1 ? Rational(1) : Rational(0);
            EXPECT_EQ(a.args.back(), parity * Rational(df * df, BigInt(2 * n - k + 2))) << n << "," << k;
        }
    }
}

TEST(BellSpecial, Examples)
{
    EXPECT_EQ(bell_special_value(1, 1), Rational(1, 3));
    EXPECT_EQ(bell_partial(2, 1, bell_args(1, 1).args), Rational(1, 3));
    EXPECT_EQ(bell_special_value(1, 2), Rational(0));
    EXPECT_EQ(bell_partial(2, 2, bell_args(1, 2).args), Rational(0));
    EXPECT_EQ(bell_special_value(2, 1), Rational(9, 5));
    EXPECT_THROW(bell_special_value(1, 3), std::invalid_argument);
    EXPECT_THROW(bell_special_value(1, 0), std::invalid_argument);
}

TEST(BellProperty, ClosedFormEqualsDefinition)
{
    for (int n = 1; 2 * n <= 16; ++n) {
        for (int k = 1; k <= 2 * n; ++k) {
            EXPECT_EQ(bell_special_value(n, k), bell_partial(2 * n, k, bell_args(n, k).args)) << n << "," << k;
        }
    }
}

TEST(BellProperty, GeneratingFunction)
{
    sf_test::Gen gen(23);
    const int order = 12;
    for (int trial = 0; trial < 6; ++trial) {
        const auto xs = gen.rationals(order);
        Series<Rational> inner(order);
        for (int m = 1; m <= order; ++m) {
            inner.set(m, xs[static_cast<std::size_t>(m) - 1] * Rational(BigInt(1), factorial(m)));
        }
        Series<Rational> power = Series<Rational>::constant(Rational(1), order);
        for (int k = 1; k <= 5; ++k) {
            power = power * inner;
            for (int n = 0; n <= order; ++n) {
                const Rational via_series = power[n] * Rational(factorial(n), factorial(k));
                EXPECT_EQ(bell_partial(n, k, xs), via_series) << n << "," << k;
            }
        }
    }
}
