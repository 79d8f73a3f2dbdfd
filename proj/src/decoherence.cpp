//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file decoherence.cpp
//---------------------------------------------------------------------------//
#include "softgrav/decoherence.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "softgrav/error.hpp"
#include "softgrav/special_functions.hpp"

namespace softgrav
{
namespace
{
constexpr double pi = std::numbers::pi;

CoefficientResult
make_result(double bracket, double prefactor, EmissionSpec const& spec)
{
    CoefficientResult r;
    // + 0.0 maps a signed zero to +0 so vanishing coefficients print as 0
    r.bracket_value = bracket + 0.0;
    r.log_factor = spec.log_factor();
    r.prefactor = prefactor;
    r.total = prefactor * bracket * r.log_factor + 0.0;
    r.convention_tag = coefficient_convention;
    return r;
}

void require_massive(double mass, char const* who)
{
    if (!(mass > 0))
    {
        std::ostringstream os;
        os << who << ": requires m > 0 (use the massless variant for m = 0)";
        detail::throw_domain(os.str());
    }
}

void check_amplitude(double m1m2_re)
{
    if (!std::isfinite(m1m2_re))
        detail::throw_domain("interference: non-finite Re(M1 M2*)");
}

// kappa^2 m^2 / (2 pi^2): normalization of the emission probability
double massive_prefactor(EmissionSpec const& spec, double mass)
{
    return spec.kappa_squared() * mass * mass / (2 * pi * pi);
}

// m^2 D(x) -> 2 q.q' ln(2 q.q'/m^2), so massless brackets carry twice the
// massive prefactor
double massless_prefactor(EmissionSpec const& spec)
{
    return spec.kappa_squared() / (pi * pi);
}

// Sphere integral scaled to bracket units; a failed integration is
// rethrown with the best estimate in the same units
template<class F>
QuadratureResult bracket_quadrature(F const& density, double norm,
                                    QuadratureSpec const& quad,
                                    SphereOptions const& options = {})
{
    try
    {
        QuadratureResult r = integrate_sphere(density, quad, options);
        r.value /= norm;
        r.error_estimate /= norm;
        return r;
    }
    catch (ConvergenceError const& e)
    {
        throw ConvergenceError(e.what(), e.best_value() / norm,
                               e.best_error() / norm);
    }
}
}  // namespace

//---------------------------------------------------------------------------//
CoefficientResult emission_log_coefficient(ElasticKinematics const& kin,
                                           EmissionSpec const& spec)
{
    spec.validate();
    require_massive(kin.mass(), "emission_log_coefficient");
    double const m = kin.mass();
    double const bracket = 1 + d_weinberg(invariant_ratio(kin.p(), kin.p_prime(), m))
                           - d_weinberg(invariant_ratio(kin.p(), kin.q(), m))
                           - d_weinberg(invariant_ratio(kin.p_prime(), kin.q(), m));
    return make_result(bracket, spec.m0_squared * massive_prefactor(spec, m),
                       spec);
}

//---------------------------------------------------------------------------//
CoefficientResult interference_coefficient(SuperpositionPair const& pair,
                                           EmissionSpec const& spec,
                                           double m1m2_re)
{
    spec.validate();
    check_amplitude(m1m2_re);
    require_massive(pair.mass(), "interference_coefficient");
    double const m = pair.mass();
    // Conservation fixes q1.q2' = q1.q1' - delta_q.q1, and q1.q1' is the
    // base-event invariant; both are exact under relabeling the branches.
    auto const& base = pair.base();
    double const x_pair = invariant_ratio(base.q(), base.q_prime(), m);
    double const eps = pair.delta_q_dot_q1() / (m * m);
    // Grouped so that each difference vanishes exactly at eps = 0
    double const bracket = (d_weinberg(x_pair) - d_weinberg(x_pair - eps))
                           - (d_weinberg(1 + eps) - 1);
    return make_result(bracket, -m1m2_re * massive_prefactor(spec, m), spec);
}

//---------------------------------------------------------------------------//
CoefficientResult
interference_coefficient_small_angle(ElasticKinematics const& kin,
                                     double split_angle,
                                     EmissionSpec const& spec, double m1m2_re)
{
    spec.validate();
    check_amplitude(m1m2_re);
    require_massive(kin.mass(), "interference_coefficient_small_angle");
    if (!std::isfinite(split_angle))
        detail::throw_domain("interference_coefficient_small_angle: "
                             "non-finite split angle");

    double const m = kin.mass();
    double const q = kin.cm_momentum();
    double const sh = std::sin(0.5 * split_angle);
    double const eps = 2 * q * q * sh * sh / (m * m);
    double const x = invariant_ratio(kin.p(), kin.p_prime(), m);
    double const bracket = eps * (d_weinberg_deriv(x) - d_weinberg_deriv(1));
    return make_result(bracket, -m1m2_re * massive_prefactor(spec, m), spec);
}

//---------------------------------------------------------------------------//
CoefficientResult
interference_coefficient_massless(SuperpositionPair const& pair, double s,
                                  EmissionSpec const& spec, double m1m2_re)
{
    spec.validate();
    check_amplitude(m1m2_re);
    if (pair.mass() != 0)
        detail::throw_domain("interference_coefficient_massless: legs must "
                             "be massless");
    if (!std::isfinite(s) || !(s > 0))
        detail::throw_domain("interference_coefficient_massless: need s > 0");

    std::array<double, 3> const inv{
        massless_invariant(pair.q1(), pair.q1_prime()),
        massless_invariant(pair.q1(), pair.q2()),
        massless_invariant(pair.q1(), pair.q2_prime())};
    for (double v : inv)
    {
        if (!(v > 0))
        {
            std::ostringstream os;
            os << "interference_coefficient_massless: degenerate "
                  "(collinear) superposition, invariant "
               << v;
            detail::throw_domain(os.str());
        }
    }
    auto term = [s](double qq) { return qq * std::log(2 * qq / s); };
    double const bracket = term(inv[0]) - term(inv[1]) - term(inv[2]);
    return make_result(bracket, -m1m2_re * massless_prefactor(spec), spec);
}

//---------------------------------------------------------------------------//
CoefficientResult
interference_coefficient_massless_small_angle(double cm_momentum,
                                              double split_angle,
                                              EmissionSpec const& spec,
                                              double m1m2_re)
{
    spec.validate();
    check_amplitude(m1m2_re);
    if (!std::isfinite(cm_momentum) || !(cm_momentum > 0))
        detail::throw_domain("interference_coefficient_massless_small_angle: "
                             "need Q > 0");
    if (!std::isfinite(split_angle) || !(split_angle > 0)
        || !(split_angle < pi / 2))
    {
        detail::throw_domain("interference_coefficient_massless_small_angle: "
                             "need 0 < phi < pi/2");
    }
    double const sh = std::sin(0.5 * split_angle);
    double const bracket = 2 * cm_momentum * cm_momentum * sh * sh
                           * (2 * std::log(sh) - 1);
    return make_result(bracket, m1m2_re * massless_prefactor(spec), spec);
}

//---------------------------------------------------------------------------//
CoefficientResult
emission_log_coefficient_quadrature(ElasticKinematics const& kin,
                                    EmissionSpec const& spec,
                                    QuadratureSpec const& quad,
                                    double* error_estimate)
{
    spec.validate();
    require_massive(kin.mass(), "emission_log_coefficient_quadrature");
    double const m = kin.mass();
    QuadratureResult const r = bracket_quadrature(
        [&kin](UnitDirection const& k) { return eikonal_bracket_density(kin, k); },
        8 * pi * m * m, quad);
    if (error_estimate)
        *error_estimate = r.error_estimate;
    return make_result(r.value,
                       spec.m0_squared * massive_prefactor(spec, m), spec);
}

CoefficientResult
interference_coefficient_quadrature(SuperpositionPair const& pair,
                                    EmissionSpec const& spec,
                                    QuadratureSpec const& quad,
                                    double m1m2_re, double* error_estimate)
{
    spec.validate();
    check_amplitude(m1m2_re);
    std::array<Vec3, 4> const legs{pair.q1().spatial(), pair.q1_prime().spatial(),
                                   pair.q2().spatial(), pair.q2_prime().spatial()};
    SphereOptions options;
    if (pair.mass() == 0)
        options.flagged_directions = legs;

    // Bracket normalization: (2 pi)^-3 8 pi m^2 (massive) or
    // (2 pi)^-3 16 pi (massless, bracket in units of m^2)
    double const m = pair.mass();
    double const norm = soft_factor_norm * 8 * pi * (m > 0 ? m * m : 2.0);
    QuadratureResult const r = bracket_quadrature(
        [&pair](UnitDirection const& k) {
            return branch_difference_density(pair, k);
        },
        norm, quad, options);

    double const prefactor = m > 0 ? massive_prefactor(spec, m)
                                   : massless_prefactor(spec);
    if (error_estimate)
        *error_estimate = r.error_estimate;
    return make_result(r.value, -m1m2_re * prefactor, spec);
}

//---------------------------------------------------------------------------//
double conservation_defect(SuperpositionPair const& pair)
{
    double const m = pair.mass();
    return minkowski_dot(pair.q1(), pair.q1_prime())
           - minkowski_dot(pair.q1(), pair.q2())
           - minkowski_dot(pair.q1(), pair.q2_prime()) + m * m;
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
