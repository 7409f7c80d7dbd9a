#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include <series_forge/base_series.hpp>
#include <series_forge/series.hpp>

#include "generators.hpp"

using namespace series_forge;

using QSeries = Series<Rational>;

TEST(Series, Basics)
{
    const QSeries t = QSeries::variable(6);
    const QSeries tt = t * t;
    EXPECT_EQ(tt, QSeries::monomial(Rational(1), 2, 6));
    const QSeries s(std::vector<Rational>{Rational(1), Rational(2), Rational(3)}, 4);
    EXPECT_EQ(s + QSeries(4), s);
    EXPECT_EQ(s.order(), 4);
    EXPECT_EQ(s[4], Rational(0));
    EXPECT_THROW((void)s[5], std::out_of_range);
    EXPECT_THROW(QSeries(-1), std::invalid_argument);
}

TEST(Series, BinaryOperationsTruncateToMinOrder)
{
    const QSeries a = exp_series(10);
    const QSeries b = exp_series(4);
    EXPECT_EQ((a + b).order(), 4);
    EXPECT_EQ((a * b).order(), 4);
    EXPECT_EQ((a * b)[4], Rational(16, 24));
}

TEST(Series, ReciprocalRoundTrip)
{
    const QSeries lead = arcsin_series(12).shifted_down(1);
    const QSeries inv = detail::reciprocal(lead);
    EXPECT_EQ(lead * inv, QSeries::constant(Rational(1), 11));
    EXPECT_THROW(detail::reciprocal(arcsin_series(4)), std::domain_error);
}

TEST(Series, PowExamples)
{
    EXPECT_EQ(pow(arcsin_series(10), 2)[4], Rational(1, 3));
    EXPECT_EQ(pow(arcsin_series(10), 2)[2], Rational(1));
    const QSeries s = exp_series(7);
    EXPECT_EQ(pow(s, 1), s);
    EXPECT_EQ(pow(s, 0), QSeries::constant(Rational(1), 7));
    EXPECT_EQ(pow(arctan_series(12), 2)[4], Rational(-2, 3));
    EXPECT_THROW(pow(s, -1), std::invalid_argument);
}

TEST(Series, ComposeExamples)
{
    const int order = 10;
    const QSeries e = compose(exp_series(order), arcsinh_series(order));
    const QSeries oracle = QSeries::variable(order) + sqrt_one_plus_t2(order);
    EXPECT_EQ(e[2], Rational(1, 2));
    EXPECT_EQ(e, oracle);

    const QSeries s = log1p_series(order);
    EXPECT_EQ(compose(s, QSeries::variable(order)), s);

    const QSeries sq = QSeries::monomial(Rational(1), 2, order);
    EXPECT_EQ(compose(sq, arcsin_series(order))[4], Rational(1, 3));
    EXPECT_EQ(compose(sq, arcsin_series(order))[4], pow(arcsin_series(order), 2)[4]);

    EXPECT_THROW(compose(s, exp_series(order)), std::domain_error);
}

TEST(Series, IntegrateDifferentiate)
{
    const int order = 15;
    QSeries geometric_even(order);
    for (int i = 0; i <= order; i += 2) {
        geometric_even.set(i, Rational(1));
    }
    EXPECT_EQ(integrate(geometric_even), arctanh_series(order + 1));

    sf_test::Gen gen(2);
    const QSeries s = gen.series(9);
    EXPECT_EQ(differentiate(integrate(s)), s);

    const QSeries t2 = QSeries::monomial(Rational(1), 2, 3);
    EXPECT_EQ(integrate(t2), QSeries::monomial(Rational(1, 3), 3, 4));
    EXPECT_THROW(differentiate(QSeries(0)), std::invalid_argument);
}

TEST(Series, ExpSeriesOf)
{
    EXPECT_EQ(exp_series_of(QSeries(6)), QSeries::constant(Rational(1), 6));
    const QSeries e = exp_series_of(QSeries::variable(9));
    for (int k = 0; k <= 9; ++k) {
        EXPECT_EQ(e[k], Rational(BigInt(1), factorial(k)));
    }
    const QSeries ea = exp_series_of(arcsinh_series(8));
    EXPECT_EQ(ea[4], Rational(-1, 8));
    EXPECT_EQ(ea, QSeries::variable(8) + sqrt_one_plus_t2(8));
    EXPECT_THROW(exp_series_of(exp_series(3)), std::domain_error);
}

TEST(Series, Shifts)
{
    const QSeries a = arcsin_series(9);
    EXPECT_EQ(a.shifted_down(1).shifted_up(1), a);
    EXPECT_THROW(a.shifted_down(2), std::domain_error);
    EXPECT_EQ(a.valuation(), 1);
    EXPECT_FALSE(QSeries(3).valuation().has_value());
    EXPECT_THROW(a.truncated(10), std::invalid_argument);
}

TEST(BaseSeries, Coefficients)
{
    // arcsin: binom(2l,l)/4^l/(2l+1) at t^{2l+1}
    const QSeries as = arcsin_series(21);
    for (int l = 0; 2 * l + 1 <= 21; ++l) {
        BigInt four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(l));
        EXPECT_EQ(as[2 * l + 1], Rational(binomial(2 * l, l), four * BigInt(2 * l + 1)));
    }
    EXPECT_EQ(as[3], Rational(1, 6));
    EXPECT_EQ(arctan_series(5)[3], Rational(-1, 3));
    EXPECT_EQ(arcsinh_series(5)[3], Rational(-1, 6));
    EXPECT_EQ(integrate(inv_sqrt_one_plus_t2(20)), arcsinh_series(21));
    EXPECT_EQ(inv_sqrt_one_minus_t2(4)[2], Rational(1, 2));
    EXPECT_EQ(inv_sqrt_one_plus_t2(4)[2], Rational(-1, 2));
}

TEST(BaseSeries, Derivatives)
{
    const int order = 24;
    QSeries one_plus_t2_inv(order - 1);
    QSeries one_minus_t2_inv(order - 1);
    for (int i = 0; i <= order - 1; i += 2) {
        one_plus_t2_inv.set(i, sign_power(i / 2));
        one_minus_t2_inv.set(i, Rational(1));
    }
    EXPECT_EQ(differentiate(arcsin_series(order)), inv_sqrt_one_minus_t2(order - 1));
    EXPECT_EQ(differentiate(arcsinh_series(order)), inv_sqrt_one_plus_t2(order - 1));
    EXPECT_EQ(differentiate(arctan_series(order)), one_plus_t2_inv);
    EXPECT_EQ(differentiate(arctanh_series(order)), one_minus_t2_inv);
    // (1 - t^2)^{-1/2} squared is the geometric series in t^2
    EXPECT_EQ(pow(inv_sqrt_one_minus_t2(order), 2).truncated(order - 1), one_minus_t2_inv);
}

TEST(EvalFloat, Examples)
{
    EXPECT_NEAR(eval_float(arcsin_series(40), 0.5), 0.5235987755982988, 1e-12);
    EXPECT_NEAR(eval_float(arcsin_series(40), 0.5), std::asin(0.5), 1e-12);
    EXPECT_EQ(eval_float(QSeries(5), 0.7), 0.0);
    EXPECT_NEAR(eval_float(arctanh_series(60), 0.5), 0.5493061443340548, 1e-10);
    EXPECT_NEAR(eval_float(arctanh_series(60), 0.5), 0.5 * std::log(3.0), 1e-10);
}

TEST(SeriesProperty, RingLaws)
{
    sf_test::Gen gen(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = gen.integer(0, 9);
        const QSeries a = gen.series(order);
        const QSeries b = gen.series(order);
        const QSeries c = gen.series(gen.integer(order, order + 3));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, QSeries(order));
        EXPECT_EQ(a * QSeries::constant(Rational(1), order), a);
        EXPECT_EQ((a + c).order(), order);
    }
}

TEST(SeriesProperty, ComposeOfPowerIsPow)
{
    sf_test::Gen gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = gen.integer(1, 10);
        const int m = gen.integer(0, 5);
        const QSeries g = gen.series_no_constant(order);
        const QSeries tm = QSeries::monomial(Rational(1), m, order);
        EXPECT_EQ(compose(tm, g), pow(g, m));
    }
}

TEST(SeriesProperty, ComposeIsAssociative)
{
    sf_test::Gen gen(37);
    for (int trial = 0; trial < 10; ++trial) {
        const int order = gen.integer(1, 7);
        const QSeries f = gen.series(order);
        const QSeries g = gen.series_no_constant(order);
        const QSeries h = gen.series_no_constant(order);
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    }
}

TEST(SeriesProperty, ProductRule)
{
    sf_test::Gen gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = gen.integer(1, 10);
        const QSeries a = gen.series(order);
        const QSeries b = gen.series(order);
        EXPECT_EQ(differentiate(a * b), differentiate(a) * b.truncated(order - 1) + a.truncated(order - 1) * differentiate(b));
    }
}

TEST(SeriesProperty, PiPolyCoefficients)
{
    sf_test::Gen gen(43);
    for (int trial = 0; trial < 10; ++trial) {
        const int order = gen.integer(1, 6);
        std::vector<PiPoly> va;
        std::vector<PiPoly> vb;
        for (int i = 0; i <= order; ++i) {
            va.push_back(gen.pi_poly(2));
            vb.push_back(gen.pi_poly(2));
        }
        const Series<PiPoly> a(va, order);
        const Series<PiPoly> b(vb, order);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(pow(a + b, 2), a * a + a * b * Rational(2) + b * b);
    }
}
