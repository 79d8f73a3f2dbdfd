//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/quadrature.hpp
//! Deterministic adaptive quadrature on intervals and on the unit sphere.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <span>

#include "direction.hpp"

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * Tolerances and limits for adaptive integration.
 *
 * Convergence is declared when the summed error estimate drops below
 * max(abs_tol, rel_tol * |value|), or below the floating-point roundoff
 * floor of the rule (50 eps times the integral of |f|), whichever is larger.
 */
struct QuadratureSpec
{
    double rel_tol{1e-10};
    double abs_tol{0};
    //! Maximum number of subintervals per 1D integration
    int max_subdivisions{4000};
    //! Solid angle of the cap excluded around each flagged direction
    double singularity_guard{1e-10};

    void validate() const;
};

struct QuadratureResult
{
    double value{0};
    double error_estimate{0};
    long evaluations{0};
    int subdivisions{0};
};

using Integrand1D = std::function<double(double)>;
using SphereIntegrand = std::function<double(UnitDirection const&)>;

/*!
 * Integrate f over [a, b] with a globally adaptive Gauss-Kronrod (7,15)
 * rule.
 *
 * Intervals are bisected in order of decreasing error estimate and summed
 * left to right with compensated summation, so results are bit-for-bit
 * reproducible. Throws ConvergenceError (carrying the best estimate) when
 * max_subdivisions is exhausted and DomainError if f returns a non-finite
 * value.
 */
QuadratureResult
integrate_interval(Integrand1D const& f, double a, double b,
                   QuadratureSpec const& spec);

//! Options for the nested spherical rule
struct SphereOptions
{
    //! Integrand does not depend on azimuth: only the polar rule is run
    bool azimuth_symmetric{false};
    //! Directions near which the integrand is evaluated as zero
    std::span<Vec3 const> flagged_directions{};
};

/*!
 * Integrate over the unit sphere as nested adaptive rules in the polar
 * cosine z (outer) and azimuth (inner).
 *
 * The inner integrals run at one tenth of the outer tolerance; their error
 * estimates are integrated by the outer rule and added to the total. Caps of
 * solid angle singularity_guard around flagged directions are skipped and
 * their measure times the largest |f| seen is added to the error estimate.
 */
QuadratureResult integrate_sphere(SphereIntegrand const& f,
                                  QuadratureSpec const& spec,
                                  SphereOptions const& options = {});

//---------------------------------------------------------------------------//
}  // namespace softgrav
