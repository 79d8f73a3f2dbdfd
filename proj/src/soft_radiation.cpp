//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file soft_radiation.cpp
//---------------------------------------------------------------------------//
#include "softgrav/soft_radiation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "softgrav/error.hpp"

namespace softgrav
{
namespace
{
constexpr double collinear_guard = 1e-14;

// omega-scaled V.k = E - P.khat, written as (E - |P|) + |P| |khat - Phat|^2/2
// so that directions near a light-like leg keep full relative precision
double eikonal_denominator(FourVector const& v, Vec3 const& k)
{
    Vec3 const p = v.spatial();
    double const pn = norm(p);
    double d = v.t - pn;
    if (pn > 0)
    {
        Vec3 const diff = k - (1 / pn) * p;
        d += 0.5 * pn * dot(diff, diff);
    }
    if (!(d >= collinear_guard * v.t))
    {
        std::ostringstream os;
        os << "soft factor: emission direction collinear with a massless "
              "leg (E - P.k = "
           << d << ")";
        detail::throw_domain(os.str());
    }
    return d;
}
}  // namespace

//---------------------------------------------------------------------------//
void EmissionSpec::validate() const
{
    if (!std::isfinite(lambda_ir) || !std::isfinite(lambda_uv)
        || !(lambda_ir > 0) || !(lambda_ir < lambda_uv))
    {
        detail::throw_domain("EmissionSpec: need 0 < lambda_ir < lambda_uv");
    }
    if (!std::isfinite(newton_g) || !(newton_g > 0))
        detail::throw_domain("EmissionSpec: need G > 0");
    if (!std::isfinite(m0_squared))
        detail::throw_domain("EmissionSpec: non-finite |M0|^2");
}

//---------------------------------------------------------------------------//
double polarization_contraction(Vec3 const& a, Vec3 const& b,
                                UnitDirection const& khat)
{
    Vec3 const k = khat.vector();
    double const ak = dot(a, k);
    double const bk = dot(b, k);
    double const aub = dot(a, b) - ak * bk;
    double const aua = dot(a, a) - ak * ak;
    double const bub = dot(b, b) - bk * bk;
    return 0.5 * (2 * aub * aub - aua * bub);
}

//---------------------------------------------------------------------------//
double covariant_soft_density(std::span<Leg const> legs, double mass,
                              UnitDirection const& khat)
{
    Vec3 const k = khat.vector();
    double const m4 = mass * mass * mass * mass;

    std::array<double, 8> denom{};
    if (legs.size() > denom.size())
        detail::throw_domain("covariant_soft_density: too many legs");
    for (std::size_t i = 0; i < legs.size(); ++i)
        denom[i] = eikonal_denominator(legs[i].momentum, k);

    double sum = 0;
    for (std::size_t i = 0; i < legs.size(); ++i)
    {
        sum += 0.5 * m4 / (denom[i] * denom[i]);
        for (std::size_t j = i + 1; j < legs.size(); ++j)
        {
            double const vw = minkowski_dot(legs[i].momentum, legs[j].momentum);
            sum += legs[i].sign * legs[j].sign * (2 * vw * vw - m4)
                   / (denom[i] * denom[j]);
        }
    }
    return sum;
}

//---------------------------------------------------------------------------//
double transverse_soft_density(std::span<Leg const> legs,
                               UnitDirection const& khat)
{
    Vec3 const k = khat.vector();
    // Orthonormal pair spanning the plane transverse to k; the plus and
    // cross polarizations are (e1 e1 - e2 e2)/sqrt2 and (e1 e2 + e2 e1)/sqrt2.
    double const sin_polar = std::sqrt(std::max(0.0, (1 - khat.z) * (1 + khat.z)));
    double const ca = std::cos(khat.azimuth);
    double const sa = std::sin(khat.azimuth);
    Vec3 const e1{khat.z * ca, khat.z * sa, -sin_polar};
    Vec3 const e2{-sa, ca, 0};

    double t11 = 0, t12 = 0, t22 = 0;
    for (Leg const& leg : legs)
    {
        Vec3 const p = leg.momentum.spatial();
        double const w = leg.sign / eikonal_denominator(leg.momentum, k);
        double const p1 = dot(p, e1);
        double const p2 = dot(p, e2);
        t11 += w * p1 * p1;
        t12 += w * p1 * p2;
        t22 += w * p2 * p2;
    }
    double const plus = t11 - t22;
    return 0.5 * plus * plus + 2 * t12 * t12;
}

//---------------------------------------------------------------------------//
double eikonal_bracket_density(ElasticKinematics const& kin,
                               UnitDirection const& khat)
{
    std::array<Leg, 4> const legs{{{kin.q(), +1},
                                   {kin.q_prime(), +1},
                                   {kin.p(), -1},
                                   {kin.p_prime(), -1}}};
    return covariant_soft_density(legs, kin.mass(), khat);
}

double branch_difference_density(SuperpositionPair const& pair,
                                 UnitDirection const& khat)
{
    std::array<Leg, 4> const legs{{{pair.q1(), +1},
                                   {pair.q1_prime(), +1},
                                   {pair.q2(), -1},
                                   {pair.q2_prime(), -1}}};
    return soft_factor_norm * transverse_soft_density(legs, khat);
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
