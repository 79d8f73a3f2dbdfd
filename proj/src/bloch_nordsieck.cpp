//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bloch_nordsieck.cpp
//---------------------------------------------------------------------------//
#include "softgrav/bloch_nordsieck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "softgrav/error.hpp"
#include "softgrav/special_functions.hpp"

namespace softgrav
{
namespace
{
constexpr double pi = std::numbers::pi;

// Series of 2v - 4v^3/3 - (1 - v^2) ln((1+v)/(1-v)) below this speed
constexpr double x0_series_limit = 0.5;

struct BranchCosines
{
    double c_plus;
    double c_minus;
    double s2_plus;
    double s2_minus;
};

BranchCosines branch_cosines(double opening_angle, UnitDirection const& khat)
{
    double const z = khat.z;
    double const s2p = std::max(0.0, (1 - z) * (1 + z));
    double const cm = z * std::cos(opening_angle)
                      + std::sqrt(s2p) * std::sin(opening_angle)
                            * std::cos(khat.azimuth);
    double const s2m = std::max(0.0, (1 - cm) * (1 + cm));
    return {z, cm, s2p, s2m};
}

void check_coupling(double newton_g, double mass)
{
    if (!std::isfinite(newton_g) || !(newton_g > 0))
        detail::throw_domain("need G > 0");
    if (!std::isfinite(mass) || !(mass >= 0))
        detail::throw_domain("need m >= 0");
}

void check_positive(double x, char const* what)
{
    if (!std::isfinite(x) || !(x > 0))
    {
        std::ostringstream os;
        os << what << " must be finite and > 0 (got " << x << ")";
        detail::throw_domain(os.str());
    }
}

double x0_bracket(double v)
{
    if (v < x0_series_limit)
    {
        // sum_{n>=2} 4 v^(2n+1) / ((2n+1)(2n-1))
        double const v2 = v * v;
        double vn = v2 * v2 * v;
        double sum = 0;
        for (int n = 2; n < 200; ++n)
        {
            double const term = 4 * vn / ((2.0 * n + 1) * (2.0 * n - 1));
            sum += term;
            if (term <= 0.1 * std::numeric_limits<double>::epsilon() * sum)
                break;
            vn *= v2;
        }
        return sum;
    }
    return 2 * v - 4 * v * v * v / 3
           - (1 - v) * (1 + v) * std::log1p(2 * v / (1 - v));
}
}  // namespace

//---------------------------------------------------------------------------//
BranchVelocities BranchVelocities::make(double speed, double opening_angle)
{
    if (!std::isfinite(speed) || speed < 0 || speed >= 1)
        detail::throw_domain("BranchVelocities: need 0 <= v < 1");
    BranchVelocities b;
    b.speed = speed;
    b.gamma = 1 / std::sqrt((1 - speed) * (1 + speed));
    b.opening_angle = opening_angle;
    b.validate();
    return b;
}

void BranchVelocities::validate() const
{
    if (!std::isfinite(speed) || speed < 0 || speed >= 1)
        detail::throw_domain("BranchVelocities: need 0 <= v < 1");
    if (!std::isfinite(gamma)
        || std::fabs(gamma * gamma * (1 - speed) * (1 + speed) - 1) > 1e-12)
    {
        detail::throw_domain("BranchVelocities: gamma inconsistent with v");
    }
    if (!std::isfinite(opening_angle) || opening_angle < 0
        || opening_angle > pi)
    {
        detail::throw_domain("BranchVelocities: opening angle outside [0, pi]");
    }
}

//---------------------------------------------------------------------------//
void FiniteTimeSpec::validate() const
{
    check_positive(time, "FiniteTimeSpec: t");
    check_positive(reference_frequency, "FiniteTimeSpec: omega_R");
    if (!std::isfinite(ir_cutoff) || !std::isfinite(uv_cutoff)
        || !(ir_cutoff > 0) || !(ir_cutoff < uv_cutoff))
    {
        detail::throw_domain("FiniteTimeSpec: need 0 < lambda < Lambda");
    }
}

double FiniteTimeSpec::log_reference_time() const
{
    return std::log(reference_frequency * time);
}

//---------------------------------------------------------------------------//
double xi_density(BranchVelocities const& branches, double newton_g,
                  double mass, UnitDirection const& khat)
{
    double const v = branches.speed;
    BranchCosines const c = branch_cosines(branches.opening_angle, khat);
    double const long_part = std::cos(branches.opening_angle)
                             - c.c_plus * c.c_minus;
    double const numer = long_part * long_part - 0.5 * c.s2_plus * c.s2_minus;
    double const denom = (1 - v * c.c_plus) * (1 - v * c.c_minus);
    double const v2 = v * v;
    double const pre = newton_g * mass * mass * branches.gamma * branches.gamma
                       / (pi * pi);
    return pre * v2 * v2 * numer / denom;
}

QuadratureResult x_coefficient(BranchVelocities const& branches,
                               double newton_g, double mass,
                               QuadratureSpec const& quad)
{
    branches.validate();
    check_coupling(newton_g, mass);
    SphereOptions options;
    options.azimuth_symmetric = branches.opening_angle == 0;
    return integrate_sphere(
        [&](UnitDirection const& k) {
            return xi_density(branches, newton_g, mass, k);
        },
        quad, options);
}

//---------------------------------------------------------------------------//
double x0_closed_form(double speed, double gamma, double newton_g,
                      double mass)
{
    if (!std::isfinite(speed) || !(speed > 0) || !(speed < 1))
        detail::throw_domain("x0_closed_form: need 0 < v < 1");
    check_positive(gamma, "x0_closed_form: gamma");
    check_coupling(newton_g, mass);
    return 4 * newton_g * mass * mass * gamma * gamma / (pi * speed)
           * x0_bracket(speed);
}

double x_delta_relativistic(double gm2gamma2, double delta, double gamma)
{
    check_positive(gm2gamma2, "x_delta_relativistic: G m^2 gamma^2");
    if (!std::isfinite(delta) || delta < 0)
        detail::throw_domain("x_delta_relativistic: need delta >= 0");
    if (!std::isfinite(gamma) || !(gamma > 1))
        detail::throw_domain("x_delta_relativistic: need gamma > 1");
    double const d2 = delta * delta;
    double const bracket
        = 7.0 / 3 - std::log(0.25 * (d2 + 1 / (gamma * gamma)));
    return gm2gamma2 / pi * (8.0 / 3 - d2 * bracket);
}

double x_delta_nonrelativistic(double gm2, double speed, double delta)
{
    check_positive(gm2, "x_delta_nonrelativistic: G m^2");
    check_positive(speed, "x_delta_nonrelativistic: v");
    if (!std::isfinite(delta))
        detail::throw_domain("x_delta_nonrelativistic: non-finite delta");
    double const v2 = speed * speed;
    double const s = std::sin(delta);
    return gm2 / pi * v2 * v2 * (2.0 / 15) * (8 - 7 * s * s);
}

double x0_nonrelativistic(double gm2, double speed)
{
    check_positive(gm2, "x0_nonrelativistic: G m^2");
    check_positive(speed, "x0_nonrelativistic: v");
    double const v2 = speed * speed;
    return 16.0 / 15 * gm2 / pi * v2 * v2;
}

//---------------------------------------------------------------------------//
double nu_relativistic(double gm2gamma2, double delta, double gamma)
{
    check_positive(gm2gamma2, "nu_relativistic: G m^2 gamma^2");
    check_positive(delta, "nu_relativistic: delta");
    if (!std::isfinite(gamma) || !(gamma > 1))
        detail::throw_domain("nu_relativistic: need gamma > 1");
    double const d2 = delta * delta;
    double const bracket
        = 7.0 / 3 - std::log(0.25 * (d2 + 1 / (gamma * gamma)));
    if (!(bracket > 0))
    {
        std::ostringstream os;
        os << "nu_relativistic: 7/3 - ln((delta^2 + 1/gamma^2)/4) = " << bracket
           << " is not positive (delta = " << delta << ")";
        detail::throw_domain(os.str());
    }
    return gm2gamma2 / pi * d2 * bracket;
}

double nu_nonrelativistic(double gm2, double speed, double delta)
{
    check_positive(gm2, "nu_nonrelativistic: G m^2");
    check_positive(speed, "nu_nonrelativistic: v");
    if (!std::isfinite(delta))
        detail::throw_domain("nu_nonrelativistic: non-finite delta");
    double const v2 = speed * speed;
    double const s = std::sin(delta);
    return gm2 / pi * v2 * v2 * (14.0 / 15) * s * s;
}

double interference_ratio(double t1, double t2, double nu)
{
    check_positive(t1, "interference_ratio: t1");
    check_positive(t2, "interference_ratio: t2");
    if (!std::isfinite(nu))
        detail::throw_domain("interference_ratio: non-finite nu");
    return std::pow(t1 / t2, -nu);
}

//---------------------------------------------------------------------------//
double finite_time_bracket(BranchVelocities const& branches,
                           FiniteTimeSpec const& spec,
                           UnitDirection const& khat)
{
    double const v = branches.speed;
    BranchCosines const c = branch_cosines(branches.opening_angle, khat);
    double const lo = spec.ir_cutoff * spec.time;
    double const hi = spec.uv_cutoff * spec.time;
    // Integral of (1 - cos(a w t)) dw/w over [lambda, Lambda]
    auto window = [lo, hi](double a) { return cin(a * hi) - cin(a * lo); };

    double const a_plus = 1 - v * c.c_plus;
    double const a_minus = 1 - v * c.c_minus;
    double const a_zero = v * std::fabs(c.c_plus - c.c_minus);
    return window(a_plus) + window(a_minus) - window(a_zero);
}

QuadratureResult finite_time_real_factor(BranchVelocities const& branches,
                                         double newton_g, double mass,
                                         FiniteTimeSpec const& spec,
                                         QuadratureSpec const& quad)
{
    branches.validate();
    check_coupling(newton_g, mass);
    spec.validate();
    SphereOptions options;
    options.azimuth_symmetric = branches.opening_angle == 0;
    return integrate_sphere(
        [&](UnitDirection const& k) {
            return xi_density(branches, newton_g, mass, k)
                   * finite_time_bracket(branches, spec, k);
        },
        quad, options);
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
