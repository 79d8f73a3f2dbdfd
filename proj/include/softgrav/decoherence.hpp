//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/decoherence.hpp
//! Emission log coefficient and interference-suppression coefficient C.
//---------------------------------------------------------------------------//
#pragma once

#include <string_view>

#include "kinematics.hpp"
#include "quadrature.hpp"
#include "soft_radiation.hpp"

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * A coefficient factored as prefactor * bracket * ln(Lambda/lambda).
 *
 * Every coefficient uses the same normalization: the emission probability
 * prefactor is |M0|^2 kappa^2 m^2 / (2 pi^2), matching the (2 pi)^-3/2 soft
 * factor and the d^3k/(2 omega) measure. Massless brackets carry the
 * dimension of m^2 and a prefactor kappa^2/pi^2 (twice the massive one, as
 * m^2 D(x) -> 2 q.q' ln(...)). Signs and the interference amplitude
 * Re(M1 M2*) live in the prefactor.
 */
struct CoefficientResult
{
    double bracket_value{0};
    double log_factor{0};
    double prefactor{0};
    double total{0};
    std::string_view convention_tag{};
};

//! Identifier of the normalization shared by all coefficient results
inline constexpr std::string_view coefficient_convention
    = "kappa2_over_2pi2";

/*!
 * Real-emission log coefficient of an elastic event,
 * |M0|^2 kappa^2 m^2/(2 pi^2) [1 + D(p.p'/m^2) - D(p.q/m^2) - D(p'.q/m^2)]
 * ln(Lambda/lambda). Requires m > 0.
 */
CoefficientResult emission_log_coefficient(ElasticKinematics const& kin,
                                           EmissionSpec const& spec);

/*!
 * Interference coefficient of two superposed final states,
 * -Re(M1 M2*) kappa^2 m^2/(2 pi^2)
 *   [1 + D(q1.q1'/m^2) - D(q1.q2/m^2) - D(q1.q2'/m^2)] ln(Lambda/lambda).
 *
 * Exactly zero at phi = 0.
 */
CoefficientResult interference_coefficient(SuperpositionPair const& pair,
                                           EmissionSpec const& spec,
                                           double m1m2_re = 1);

/*!
 * First-order expansion of interference_coefficient in the split angle:
 * the bracket becomes eps [D'(p.p'/m^2) - D'(1)] with
 * eps = 2 Q^2 sin^2(phi/2) / m^2. Relative deviation is O(phi^2).
 */
CoefficientResult
interference_coefficient_small_angle(ElasticKinematics const& kin,
                                     double split_angle,
                                     EmissionSpec const& spec,
                                     double m1m2_re = 1);

/*!
 * Massless-emitter interference coefficient,
 * -Re(M1 M2*) kappa^2/pi^2 [q1.q1' ln(2 q1.q1'/s) - q1.q2 ln(2 q1.q2/s)
 *   - q1.q2' ln(2 q1.q2'/s)] ln(Lambda/lambda).
 *
 * The ln(s/m^2) term is dropped analytically: its coefficient
 * q1.(q1' - q2 - q2') = -m^2 vanishes for m = 0.
 */
CoefficientResult
interference_coefficient_massless(SuperpositionPair const& pair, double s,
                                  EmissionSpec const& spec,
                                  double m1m2_re = 1);

//! Small-angle form of the massless coefficient,
//! +Re(M1 M2*) kappa^2/pi^2 2 Q^2 sin^2(phi/2) [2 ln sin(phi/2) - 1] ln(...)
CoefficientResult
interference_coefficient_massless_small_angle(double cm_momentum,
                                              double split_angle,
                                              EmissionSpec const& spec,
                                              double m1m2_re = 1);

//---------------------------------------------------------------------------//
// Quadrature routes
//---------------------------------------------------------------------------//
/*!
 * emission_log_coefficient evaluated by spherical quadrature of
 * eikonal_bracket_density instead of the D-function closed form.
 */
CoefficientResult
emission_log_coefficient_quadrature(ElasticKinematics const& kin,
                                    EmissionSpec const& spec,
                                    QuadratureSpec const& quad,
                                    double* error_estimate = nullptr);

/*!
 * interference_coefficient (massive or massless) by spherical quadrature
 * of branch_difference_density. For m = 0 the leg directions are flagged
 * for the singularity guard.
 */
CoefficientResult
interference_coefficient_quadrature(SuperpositionPair const& pair,
                                    EmissionSpec const& spec,
                                    QuadratureSpec const& quad,
                                    double m1m2_re = 1,
                                    double* error_estimate = nullptr);

//! q1.q1' - q1.q2 - q1.q2' + m^2, zero by four-momentum conservation
double conservation_defect(SuperpositionPair const& pair);

//---------------------------------------------------------------------------//
}  // namespace softgrav
