//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/soft_radiation.hpp
//! Angular densities of soft-graviton emission off external legs.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "direction.hpp"
#include "kinematics.hpp"

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * Frequency window and coupling for soft emission.
 *
 * The frequency integral of every density is the exact logarithm
 * ln(lambda_uv / lambda_ir); densities carry the factor omega^2 scaled out.
 */
struct EmissionSpec
{
    double lambda_ir{1e-6};
    double lambda_uv{1};
    double newton_g{1};
    //! |M_0|^2 multiplying the emission probability
    double m0_squared{1};

    void validate() const;

    double kappa_squared() const { return 8 * std::numbers::pi * newton_g; }
    double log_factor() const { return std::log(lambda_uv / lambda_ir); }
};

//! External leg with sign +1 (outgoing) or -1 (incoming)
struct Leg
{
    FourVector momentum;
    double sign{1};
};

//---------------------------------------------------------------------------//
/*!
 * Polarization sum of two transverse-traceless projections,
 * sum_pol (a.f.a)(b.f.b) = 1/2 [2 (a.u.b)^2 - (a.u.a)(b.u.b)],
 * with u_ij = delta_ij - khat_i khat_j.
 */
double polarization_contraction(Vec3 const& a, Vec3 const& b,
                                UnitDirection const& khat);

/*!
 * omega^2 times the covariant eikonal bracket for a set of equal-mass legs:
 * sum over leg pairs of eta_V eta_W [(V.W)^2 - m^4/2] / ((V.k)(W.k)).
 *
 * Gauge invariant only when the signed momenta sum to zero.
 */
double covariant_soft_density(std::span<Leg const> legs, double mass,
                              UnitDirection const& khat);

/*!
 * omega^2 times sum_pol |sum_V eta_V (P_V.f.P_V)/(V.k)|^2 using the
 * Coulomb-gauge transverse-traceless projector.
 *
 * Finite pointwise for massless legs away from their exact directions.
 * Equals covariant_soft_density when the legs conserve four-momentum.
 */
double transverse_soft_density(std::span<Leg const> legs,
                               UnitDirection const& khat);

/*!
 * omega^2 times the emission bracket of an elastic event (outgoing q, q'
 * positive, incoming p, p' negative), covariant form.
 *
 * Its solid-angle integral is 8 pi m^2 [1 + D(p.p'/m^2) - D(p.q/m^2)
 * - D(p'.q/m^2)]. Throws DomainError if a leg denominator E - P.khat
 * drops below 1e-14 E (collinear massless leg).
 */
double eikonal_bracket_density(ElasticKinematics const& kin,
                               UnitDirection const& khat);

/*!
 * omega^2 sum_pol [beta1 - beta2]^2 for the two branches of a
 * superposition, (2 pi)^-3 normalization of the soft factor included.
 *
 * Non-negative; its solid-angle integral is (2 pi)^-3 8 pi m^2 times the
 * interference bracket. Valid for m = 0 away from the leg directions.
 */
double branch_difference_density(SuperpositionPair const& pair,
                                 UnitDirection const& khat);

//! (2 pi)^-3, the soft-factor normalization squared
inline constexpr double soft_factor_norm
    = 1 / (8 * std::numbers::pi * std::numbers::pi * std::numbers::pi);

//---------------------------------------------------------------------------//
}  // namespace softgrav
