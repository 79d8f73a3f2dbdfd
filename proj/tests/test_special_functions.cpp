//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_special_functions.cpp
//---------------------------------------------------------------------------//
#include "softgrav/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "softgrav/error.hpp"
#include "test_util.hpp"

using namespace softgrav;
using softgrav::test::rel_diff;
using big = boost::multiprecision::cpp_bin_float_50;

namespace
{
//---------------------------------------------------------------------------//
// 50-digit oracles

big big_acosh_ratio(double xd)
{
    big const x = xd;
    big const r = x * x - 1;
    return log(x + sqrt(r)) / sqrt(r);
}

double big_d(double x)
{
    if (x == 1)
        return 1;
    big const xb = x;
    return static_cast<double>((2 * xb * xb - 1) * big_acosh_ratio(x));
}

double big_d_deriv(double x)
{
    if (x == 1)
        return 11.0 / 3;
    big const xb = x;
    big const f = big_acosh_ratio(x);
    big const df = (1 - xb * f) / (xb * xb - 1);
    return static_cast<double>(4 * xb * f + (2 * xb * xb - 1) * df);
}

// Ci(x) = gamma + ln x + sum_k (-1)^k x^(2k) / (2k (2k)!)
double big_ci(double xd)
{
    big const x = xd;
    big const x2 = x * x;
    big term = 1;  // (-1)^k x^(2k) / (2k)!
    big sum = 0;
    big const tiny = big(1e-45);
    for (int k = 1; k < 400; ++k)
    {
        term *= -x2 / ((2 * k - 1) * (2 * k));
        big const contrib = term / (2 * k);
        sum += contrib;
        if (abs(contrib) < tiny)
            break;
    }
    big const euler = boost::math::constants::euler<big>();
    return static_cast<double>(euler + log(x) + sum);
}

double richardson_derivative(double (*f)(double), double x, double h)
{
    auto central = [&](double step) {
        return (f(x + step) - f(x - step)) / (2 * step);
    };
    double const d1 = central(h);
    double const d2 = central(h / 2);
    double const d4 = central(h / 4);
    double const r1 = (4 * d2 - d1) / 3;
    double const r2 = (4 * d4 - d2) / 3;
    return (16 * r2 - r1) / 15;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(DWeinberg, ValueAtOne)
{
    EXPECT_EQ(d_weinberg(1), 1);
}

TEST(DWeinberg, HighPrecisionTable)
{
    // mpmath, 40 digits
    struct Row
    {
        double x, d, dd;
    };
    std::vector<Row> const rows = {
        {1.000001, 1.0000036666674666665, 3.6666682666660952383},
        {1.001, 1.003667466476253944, 3.6682660954919423396},
        {1.01, 1.0367464768229824861, 3.6826097765715942445},
        {1.04, 1.1479346362877854596, 3.7297683306083915365},
        {1.06, 1.2228396616014888242, 3.7606628550943314703},
        {1.3, 2.1673189463608671499, 4.1012395320315846864},
        {2, 5.3224219741066244327, 4.8678199876698211584},
        {10, 59.865212782110889699, 7.9963184194080733317},
        {1000, 15201.80441908587745, 17.201805419079276538},
        {1e6, 29017315.477047938827, 31.017315477048938827},
    };
    for (auto const& r : rows)
    {
        EXPECT_LE(rel_diff(d_weinberg(r.x), r.d), 1e-14) << "x=" << r.x;
        EXPECT_LE(rel_diff(d_weinberg_deriv(r.x), r.dd), 1e-13) << "x=" << r.x;
    }
    EXPECT_NEAR(d_weinberg(2), 5.322422, 1e-5);
}

TEST(DWeinberg, MultiprecisionOracleGrid)
{
    for (int i = 0; i <= 200; ++i)
    {
        // log grid in x - 1 from 1e-12 to 1e8
        double const x = 1 + std::pow(10.0, -12 + 20.0 * i / 200);
        EXPECT_LE(rel_diff(d_weinberg(x), big_d(x)), 2e-15) << "x=" << x;
        EXPECT_LE(rel_diff(d_weinberg_deriv(x), big_d_deriv(x)), 1e-13)
            << "x=" << x;
    }
}

TEST(DWeinberg, DerivativeAtOneIsTheTrueLimit)
{
    // f = arccosh x/sqrt(x^2-1) = 1 - (x-1)/3 + ..., so D'(1) = 4 + f'(1)
    EXPECT_NEAR(d_weinberg_deriv(1), 11.0 / 3, 1e-15);
    double const h = 1e-7;
    double const one_sided = (d_weinberg(1 + h) - d_weinberg(1)) / h;
    EXPECT_NEAR(one_sided, 11.0 / 3, 1e-6);
}

TEST(DWeinberg, Asymptotics)
{
    double const x = 1e6;
    EXPECT_LE(rel_diff(d_weinberg(x), 2 * x * std::log(2 * x)), 1e-5);
    EXPECT_LE(rel_diff(d_weinberg_deriv(x), 2 * (1 + std::log(2 * x))), 1e-5);
}

TEST(DWeinberg, DerivativeMatchesFiniteDifferences)
{
    for (double x : {1.001, 1.01, 1.1, 2.0, 10.0, 1e3})
    {
        double const h = std::min(1e-2 * (x - 1), 1e-2 * x);
        double const fd = richardson_derivative(&d_weinberg, x, h);
        EXPECT_LE(rel_diff(d_weinberg_deriv(x), fd), 1e-6) << "x=" << x;
    }
}

TEST(DWeinberg, SeriesClosedSeam)
{
    for (int i = 0; i <= 80; ++i)
    {
        double const x = 1 + std::pow(10.0, -10 + 8.0 * i / 80);
        EXPECT_LE(rel_diff(detail::d_weinberg_series(x),
                           detail::d_weinberg_closed(x)),
                  1e-10)
            << "x=" << x;
    }
    // Both branches are accurate near the switch itself
    for (double x : {1 + 0.5 * d_series_switch, 1 + d_series_switch,
                     1 + 1.5 * d_series_switch})
    {
        EXPECT_LE(rel_diff(detail::d_weinberg_series(x),
                           detail::d_weinberg_closed(x)),
                  1e-14);
        EXPECT_LE(rel_diff(detail::d_weinberg_deriv_series(x),
                           detail::d_weinberg_deriv_closed(x)),
                  1e-12);
    }
    double const below = std::nextafter(1 + d_series_switch, 0.0);
    EXPECT_LE(rel_diff(d_weinberg(below), d_weinberg(1 + d_series_switch)),
              1e-14);
}

TEST(DWeinberg, Monotone)
{
    double prev = d_weinberg(1);
    double prev_deriv = d_weinberg_deriv(1);
    for (int i = 1; i <= 1000; ++i)
    {
        double const x = std::pow(10.0, 6.0 * i / 1000);
        double const d = d_weinberg(x);
        double const dd = d_weinberg_deriv(x);
        EXPECT_GT(d, prev) << "x=" << x;
        EXPECT_GT(dd, prev_deriv) << "x=" << x;
        prev = d;
        prev_deriv = dd;
    }
}

TEST(DWeinberg, Rejections)
{
    EXPECT_THROW(d_weinberg(0.999), DomainError);
    EXPECT_THROW(d_weinberg(NAN), DomainError);
    EXPECT_THROW(d_weinberg(INFINITY), DomainError);
    EXPECT_THROW(d_weinberg_deriv(0.5), DomainError);
    EXPECT_THROW(d_weinberg_deriv(NAN), DomainError);
}

//---------------------------------------------------------------------------//
TEST(CosineIntegral, MpmathTable)
{
    struct Row
    {
        double x, ci, cin;
    };
    std::vector<Row> const rows = {
        {0.001, -6.3305398640805937748, 2.4999998958333356481e-7},
        {0.1, -1.727868386657296639, 0.0024989585647838155862},
        {1, 0.33740392290096813466, 0.23981174200056472594},
        {3.9, -0.12349934920781514267, 2.0616915672449487467},
        {4, -0.14098169788693041164, 2.1044917239083538911},
        {4.1, -0.15616539182812110957, 2.14436803043991609},
        {5, -0.19002974965664387862, 2.3766833269922771138},
        {20, 0.04441982084535331654, 3.5285281176101705375},
        {100, -0.0051488251426104921444, 5.1875346760322347208},
        {1000, 0.000826315511090682282, 7.4841446283725792304},
        {1e5, 3.575879157293513569e-7, 12.090140772283845551},
    };
    for (auto const& r : rows)
    {
        EXPECT_NEAR(cosine_integral(r.x), r.ci, 1e-14 * std::max(1.0, std::fabs(r.ci)))
            << "x=" << r.x;
        EXPECT_LE(rel_diff(cin(r.x), r.cin), 1e-14) << "x=" << r.x;
    }
    EXPECT_NEAR(cosine_integral(1), 0.3374039229, 1e-9);
}

TEST(CosineIntegral, MultiprecisionSeriesOracle)
{
    for (int i = 0; i <= 300; ++i)
    {
        double const x = 1e-3 + 30.0 * i / 300;
        EXPECT_NEAR(cosine_integral(x), big_ci(x), 1e-14) << "x=" << x;
    }
}

TEST(CosineIntegral, AsymptoticSeriesOracle)
{
    // Ci(x) ~ sin x/x P(x) - cos x/x^2 Q(x), summed to its smallest term
    double const x = 100;
    double p = 0, q = 0, term = 1;
    double prev = INFINITY;
    for (int k = 0; k < 60; ++k)
    {
        // term = (-1)^k (2k)! / x^(2k)
        double const t_q = term * (2 * k + 1);
        if (std::fabs(term) > prev)
            break;
        p += term;
        q += t_q;
        prev = std::fabs(t_q);
        term *= -(2.0 * k + 1) * (2.0 * k + 2) / (x * x);
    }
    double const asym = std::sin(x) / x * p - std::cos(x) / (x * x) * q;
    EXPECT_NEAR(cosine_integral(x), asym, 1e-13);
    EXPECT_LT(std::fabs(cosine_integral(x)), 0.011);
    double const two_term = std::sin(x) / x - std::cos(x) / (x * x);
    EXPECT_NEAR(cosine_integral(x), two_term, 2e-6);
}

TEST(CosineIntegral, SmallArgument)
{
    double const x = 1e-6;
    EXPECT_NEAR(cosine_integral(x) - (std::numbers::egamma + std::log(x)), 0,
                1e-10);
    EXPECT_EQ(cin(0), 0);
    EXPECT_NEAR(cin(1e-4), 0.25e-8 - 1e-16 / 96, 1e-24);
}

TEST(CosineIntegral, BranchContinuityAndLargeArguments)
{
    double const x = 4;
    double const below = std::nextafter(x, 0.0);
    double const above = std::nextafter(x, 10.0);
    EXPECT_NEAR(cosine_integral(below), cosine_integral(above), 1e-15);
    EXPECT_NEAR(cin(below), cin(above), 1e-14);
    // Accurate to 1e-10 absolute up to 1e6: compare with the asymptotic form
    for (double y : {1e3, 1e4, 1e5, 1e6})
    {
        double const asym = std::sin(y) / y * (1 - 2 / (y * y))
                            - std::cos(y) / (y * y) * (1 - 6 / (y * y));
        EXPECT_NEAR(cosine_integral(y), asym, 1e-10) << "x=" << y;
    }
}

TEST(CosineIntegral, Rejections)
{
    EXPECT_THROW(cosine_integral(0), DomainError);
    EXPECT_THROW(cosine_integral(-1), DomainError);
    EXPECT_THROW(cosine_integral(NAN), DomainError);
    EXPECT_THROW(cin(-1), DomainError);
    EXPECT_THROW(cin(INFINITY), DomainError);
}
