//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/special_functions.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * Pairwise angular integral of two eikonal factors,
 * D(x) = (2x^2 - 1) / sqrt(x^2 - 1) * arccosh(x), for x >= 1.
 *
 * D(1) = 1 and D(x) -> 2x ln(2x) for large x. Close to x = 1 the
 * arccosh/sqrt ratio is replaced by its hypergeometric series in (x - 1).
 * Throws DomainError for x < 1 or non-finite x.
 */
double d_weinberg(double x);

//! dD/dx, with the same domain and series switch as d_weinberg
double d_weinberg_deriv(double x);

/*!
 * Cosine integral Ci(x) = gamma_E + ln x + int_0^x (cos u - 1)/u du, x > 0.
 *
 * Power series for x <= 4, continued fraction for E1(ix) above; absolute
 * accuracy ~1e-15 over the full range.
 */
double cosine_integral(double x);

/*!
 * Entire part Cin(x) = int_0^x (1 - cos u)/u du = gamma_E + ln x - Ci(x).
 *
 * Defined for x >= 0 with Cin(0) = 0, so differences of Ci at two
 * proportional arguments can be formed without the logarithmic terms.
 */
double cin(double x);

//! Switch point (x - 1) below which the D-function series branch is used
inline constexpr double d_series_switch = 0.05;

namespace detail
{
// Exposed for the seam tests
double d_weinberg_series(double x);
double d_weinberg_closed(double x);
double d_weinberg_deriv_series(double x);
double d_weinberg_deriv_closed(double x);
}  // namespace detail

//---------------------------------------------------------------------------//
}  // namespace softgrav
