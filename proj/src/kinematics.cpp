//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file kinematics.cpp
//---------------------------------------------------------------------------//
#include "softgrav/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "softgrav/error.hpp"

namespace softgrav
{
namespace detail
{
void throw_domain(std::string const& what)
{
    throw DomainError(what);
}
}  // namespace detail

namespace
{
double spatial_diff_sq(FourVector const& a, FourVector const& b)
{
    Vec3 const d = a.spatial() - b.spatial();
    return dot(d, d);
}
}  // namespace

//---------------------------------------------------------------------------//
double invariant_ratio(FourVector const& a, FourVector const& b, double mass)
{
    double const de = a.t - b.t;
    double const half_sep = 0.5 * (spatial_diff_sq(a, b) - de * de);
    return 1 + half_sep / (mass * mass);
}

double massless_invariant(FourVector const& a, FourVector const& b)
{
    double const de = a.t - b.t;
    return 0.5 * (spatial_diff_sq(a, b) - de * de);
}

Vec3 rotate_about_y(Vec3 v, double angle)
{
    double const c = std::cos(angle);
    double const s = std::sin(angle);
    return {c * v.x + s * v.z, v.y, -s * v.x + c * v.z};
}

//---------------------------------------------------------------------------//
ElasticKinematics
build_elastic_cm(double mass, double cm_momentum, double scatter_angle)
{
    if (!std::isfinite(mass) || !std::isfinite(cm_momentum)
        || !std::isfinite(scatter_angle))
    {
        detail::throw_domain("build_elastic_cm: non-finite input");
    }
    if (mass < 0)
    {
        detail::throw_domain("build_elastic_cm: negative mass");
    }
    if (cm_momentum <= 0)
    {
        std::ostringstream os;
        os << "build_elastic_cm: CM momentum must be positive (got "
           << cm_momentum << ")";
        detail::throw_domain(os.str());
    }
    if (scatter_angle < 0 || scatter_angle > std::numbers::pi)
    {
        detail::throw_domain("build_elastic_cm: scattering angle outside "
                             "[0, pi]");
    }

    ElasticKinematics k;
    k.mass_ = mass;
    k.cm_momentum_ = cm_momentum;
    k.scatter_angle_ = scatter_angle;
    k.energy_ = std::hypot(cm_momentum, mass);

    double const e = k.energy_;
    double const q = cm_momentum;
    double const sin_sc = std::sin(scatter_angle);
    double const cos_sc = std::cos(scatter_angle);
    k.p_ = {e, 0, 0, q};
    k.p_prime_ = {e, 0, 0, -q};
    k.q_ = {e, q * sin_sc, 0, q * cos_sc};
    k.q_prime_ = {e, -q * sin_sc, 0, -q * cos_sc};

    // Half-angle forms keep t and u accurate near the forward/backward limits
    double const sh = std::sin(0.5 * scatter_angle);
    double const ch = std::cos(0.5 * scatter_angle);
    k.s_ = 4 * e * e;
    k.t_ = -4 * q * q * sh * sh;
    k.u_ = -4 * q * q * ch * ch;
    return k;
}

//---------------------------------------------------------------------------//
SuperpositionPair superpose(ElasticKinematics const& kin, double split_angle)
{
    if (!std::isfinite(split_angle))
    {
        detail::throw_domain("superpose: non-finite split angle");
    }
    if (split_angle < 0 || split_angle >= std::numbers::pi)
    {
        detail::throw_domain("superpose: split angle outside [0, pi)");
    }

    SuperpositionPair pair(kin);
    pair.split_angle_ = split_angle;
    pair.q1_ = kin.q();
    pair.q1_prime_ = kin.q_prime();

    Vec3 const r = rotate_about_y(kin.q().spatial(), split_angle);
    double const e = kin.energy();
    pair.q2_ = {e, r.x, r.y, r.z};
    pair.q2_prime_ = {e, -r.x, -r.y, -r.z};

    double const sh = std::sin(0.5 * split_angle);
    double const q = kin.cm_momentum();
    pair.delta_q_dot_q1_ = 2 * q * q * sh * sh;
    return pair;
}

SuperpositionPair SuperpositionPair::swapped() const
{
    SuperpositionPair result(*this);
    std::swap(result.q1_, result.q2_);
    std::swap(result.q1_prime_, result.q2_prime_);
    // (q1 - q2).q2 = q1.q2 - m^2, so delta_q_dot_q1 is unchanged
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
