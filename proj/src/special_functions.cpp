//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file special_functions.cpp
//---------------------------------------------------------------------------//
#include "softgrav/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "softgrav/error.hpp"

namespace softgrav
{
namespace
{
constexpr double eps = std::numeric_limits<double>::epsilon();

void check_d_argument(double x, char const* who)
{
    if (!std::isfinite(x) || x < 1)
    {
        std::ostringstream os;
        os << who << ": argument must be finite and >= 1 (got " << x << ")";
        detail::throw_domain(os.str());
    }
}

struct SeriesValue
{
    double value;
    double deriv_w;  // d/dw of the series
};

// arccosh(x)/sqrt(x^2-1) = 2F1(1,1;3/2;w) with w = (1-x)/2; the coefficient
// recurrence is c_{n+1} = c_n (n+1)/(n+3/2).
SeriesValue acosh_ratio_series(double x)
{
    double const w = 0.5 * (1 - x);
    double c = 1;
    double wn = 1;  // w^n
    double sum = 1;
    double dsum = 0;
    for (int n = 0; n < 200; ++n)
    {
        double const c_next = c * (n + 1) / (n + 1.5);
        // n+1 term and its w-derivative (n+1) c_{n+1} w^n
        double const dterm = (n + 1) * c_next * wn;
        wn *= w;
        double const term = c_next * wn;
        sum += term;
        dsum += dterm;
        c = c_next;
        if (std::fabs(term) <= 0.1 * eps * std::fabs(sum)
            && std::fabs(dterm) <= 0.1 * eps * std::fabs(dsum))
        {
            break;
        }
    }
    return {sum, dsum};
}

double acosh_ratio_closed(double x)
{
    return std::acosh(x) / (std::sqrt(x - 1) * std::sqrt(x + 1));
}

// E1(ix) by the modified Lentz continued fraction; returns Ci(x)
double cosine_integral_cf(double x)
{
    using cplx = std::complex<double>;
    constexpr double tiny = 1e-300;
    cplx b(1, x);
    cplx c(1 / tiny, 0);
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 1000; ++i)
    {
        double const a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        cplx const del = c * d;
        h *= del;
        if (std::fabs(del.real() - 1) + std::fabs(del.imag()) < eps)
        {
            break;
        }
    }
    h *= cplx(std::cos(x), -std::sin(x));
    return -h.real();
}

// Cin(x) = sum_k (-1)^(k+1) x^(2k) / (2k (2k)!)
double cin_series(double x)
{
    double const x2 = x * x;
    double term = 0.5 * x2;  // (-1)^(k+1) x^(2k)/(2k)! at k = 1
    double sum = 0.5 * term;
    for (int k = 1; k < 100; ++k)
    {
        term *= -x2 / ((2 * k + 1) * (2 * k + 2));
        double const contrib = term / (2 * k + 2);
        sum += contrib;
        if (std::fabs(contrib) <= 0.1 * eps * std::fabs(sum))
        {
            break;
        }
    }
    return sum;
}

constexpr double ci_series_limit = 4;
}  // namespace

//---------------------------------------------------------------------------//
namespace detail
{
double d_weinberg_series(double x)
{
    return (2 * x * x - 1) * acosh_ratio_series(x).value;
}

double d_weinberg_closed(double x)
{
    return (2 * x * x - 1) * acosh_ratio_closed(x);
}

double d_weinberg_deriv_series(double x)
{
    SeriesValue const f = acosh_ratio_series(x);
    double const df = -0.5 * f.deriv_w;
    return 4 * x * f.value + (2 * x * x - 1) * df;
}

double d_weinberg_deriv_closed(double x)
{
    double const f = acosh_ratio_closed(x);
    double const df = (1 - x * f) / ((x - 1) * (x + 1));
    return 4 * x * f + (2 * x * x - 1) * df;
}
}  // namespace detail

//---------------------------------------------------------------------------//
double d_weinberg(double x)
{
    check_d_argument(x, "d_weinberg");
    if (x - 1 < d_series_switch)
    {
        return detail::d_weinberg_series(x);
    }
    return detail::d_weinberg_closed(x);
}

double d_weinberg_deriv(double x)
{
    check_d_argument(x, "d_weinberg_deriv");
    if (x - 1 < d_series_switch)
    {
        return detail::d_weinberg_deriv_series(x);
    }
    return detail::d_weinberg_deriv_closed(x);
}

//---------------------------------------------------------------------------//
double cosine_integral(double x)
{
    if (!std::isfinite(x) || x <= 0)
    {
        std::ostringstream os;
        os << "cosine_integral: argument must be finite and > 0 (got " << x
           << ")";
        detail::throw_domain(os.str());
    }
    if (x <= ci_series_limit)
    {
        return std::numbers::egamma + std::log(x) - cin_series(x);
    }
    return cosine_integral_cf(x);
}

double cin(double x)
{
    if (!std::isfinite(x) || x < 0)
    {
        std::ostringstream os;
        os << "cin: argument must be finite and >= 0 (got " << x << ")";
        detail::throw_domain(os.str());
    }
    if (x <= ci_series_limit)
    {
        return cin_series(x);
    }
    return std::numbers::egamma + std::log(x) - cosine_integral_cf(x);
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
