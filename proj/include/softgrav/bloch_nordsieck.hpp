//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/bloch_nordsieck.hpp
//! Decoherence of a superposition of two velocities of one emitter.
//---------------------------------------------------------------------------//
#pragma once

#include "direction.hpp"
#include "quadrature.hpp"

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * Two velocity states of equal speed separated by an opening angle.
 *
 * v+ points along +z, v- lies in the x-z plane at angle delta from it.
 */
struct BranchVelocities
{
    double speed{0};
    double gamma{1};
    double opening_angle{0};

    static BranchVelocities make(double speed, double opening_angle);
    void validate() const;
};

/*!
 * Time window for the finite-time real-emission factor.
 *
 * reference_frequency only enters reporting of ln(omega_R t).
 */
struct FiniteTimeSpec
{
    double time{1};
    double ir_cutoff{1e-4};
    double uv_cutoff{1e4};
    double reference_frequency{1};

    void validate() const;
    double log_reference_time() const;
};

/*!
 * Angular density xi(khat) whose solid-angle integral is the coefficient of
 * ln(omega_R t):
 *   (G m^2 gamma^2/pi^2) v^4 [(cos d - c+ c-)^2 - (s+ s-)^2/2]
 *     / ((1 - v c+)(1 - v c-)),
 * with c+ = z and c- = z cos d + sqrt(1 - z^2) sin d cos(azimuth).
 */
double xi_density(BranchVelocities const& branches, double newton_g,
                  double mass, UnitDirection const& khat);

//! Solid-angle integral of xi_density
QuadratureResult x_coefficient(BranchVelocities const& branches,
                               double newton_g, double mass,
                               QuadratureSpec const& quad);

/*!
 * Closed form of x_coefficient at zero opening angle,
 *   X0 = (4 G m^2 gamma^2 / (pi v)) [2v - 4v^3/3 - (1 - v^2) ln((1+v)/(1-v))].
 *
 * Limits: 8 G m^2 gamma^2/(3 pi) as v -> 1 and
 * (16/15)(G m^2 gamma^2/pi) v^4 (1 + 3v^2/7 + ...) as v -> 0. Below v = 0.5
 * the bracket is summed from its power series to avoid cancellation.
 */
double x0_closed_form(double speed, double gamma, double newton_g,
                      double mass);

/*!
 * Ultra-relativistic small-angle coefficient at opening angle delta,
 *   (G m^2 gamma^2/pi) [8/3 - delta^2 (7/3 - ln((delta^2 + 1/gamma^2)/4))].
 */
double x_delta_relativistic(double gm2gamma2, double delta, double gamma);

//! Leading slow-speed coefficient (G m^2/pi) v^4 (2/15)(8 - 7 sin^2 delta)
double x_delta_nonrelativistic(double gm2, double speed, double delta);

//! Leading slow-speed X0, (16/15)(G m^2/pi) v^4
double x0_nonrelativistic(double gm2, double speed);

/*!
 * Power-law decay exponent for gamma >> 1, small delta, delta*gamma not
 * small: (G m^2 gamma^2/pi) delta^2 (7/3 - ln((delta^2 + 1/gamma^2)/4)).
 * Throws DomainError where the bracket is not positive.
 */
double nu_relativistic(double gm2gamma2, double delta, double gamma);

//! Slow-speed exponent (G m^2/pi) v^4 (14/15) sin^2 delta
double nu_nonrelativistic(double gm2, double speed, double delta);

//! I(t1)/I(t2) = (t1/t2)^(-nu)
double interference_ratio(double t1, double t2, double nu);

/*!
 * Real part of the per-boson emission factor at finite time t.
 *
 * Solid-angle integral of xi(khat) times the frequency integral of
 * [1 - cos(a+ w t) - cos(a- w t) + cos(a0 w t)] dw/w over [lambda, Lambda],
 * with a+- = 1 - v c+- and a0 = |a+ - a-|. The frequency integral is done
 * in closed form through Cin(x) = gamma_E + ln x - Ci(x); for a0 -> 0 the
 * a0 term tends to ln(Lambda/lambda) exactly (Cin(0) = 0). Its slope in
 * ln t approaches x_coefficient when lambda t << 1 << Lambda t.
 */
QuadratureResult finite_time_real_factor(BranchVelocities const& branches,
                                         double newton_g, double mass,
                                         FiniteTimeSpec const& spec,
                                         QuadratureSpec const& quad);

//! The frequency-integrated bracket for one direction (exposed for tests)
double finite_time_bracket(BranchVelocities const& branches,
                           FiniteTimeSpec const& spec,
                           UnitDirection const& khat);

//---------------------------------------------------------------------------//
}  // namespace softgrav
