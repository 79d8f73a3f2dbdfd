//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/kinematics.hpp
//! Equal-mass two-body elastic kinematics in the centre-of-mass frame.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>

namespace softgrav
{
//---------------------------------------------------------------------------//
struct Vec3
{
    double x{0};
    double y{0};
    double z{0};

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a)
    {
        return {s * a.x, s * a.y, s * a.z};
    }
    friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(Vec3 a)
{
    return std::sqrt(dot(a, a));
}

//---------------------------------------------------------------------------//
/*!
 * Minkowski four-vector with signature (+,-,-,-) in natural units.
 */
struct FourVector
{
    double t{0};
    double x{0};
    double y{0};
    double z{0};

    constexpr Vec3 spatial() const { return {x, y, z}; }

    friend constexpr FourVector operator+(FourVector a, FourVector b)
    {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr FourVector operator-(FourVector a, FourVector b)
    {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr bool operator==(FourVector, FourVector) = default;
};

//! a_t b_t - a.b
constexpr double minkowski_dot(FourVector const& a, FourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/*!
 * a.b / m^2 for two on-shell vectors of common mass m.
 *
 * Evaluated as 1 - (a-b)^2 / (2 m^2), which stays >= 1 for the equal-energy
 * pairs of the CM frame and avoids the E^2 - P^2 cancellation near 1.
 */
double invariant_ratio(FourVector const& a, FourVector const& b, double mass);

//! a.b for two massless vectors, computed as -(a-b)^2 / 2
double massless_invariant(FourVector const& a, FourVector const& b);

//---------------------------------------------------------------------------//
/*!
 * Equal-mass elastic event p + p' -> q + q' in the CM frame.
 *
 * Incoming momenta run along +/- z; the outgoing pair is rotated by the
 * scattering angle in the x-z plane.
 */
class ElasticKinematics
{
  public:
    double mass() const { return mass_; }
    double cm_momentum() const { return cm_momentum_; }
    double scatter_angle() const { return scatter_angle_; }
    double energy() const { return energy_; }
    bool massless() const { return mass_ == 0; }

    FourVector const& p() const { return p_; }
    FourVector const& p_prime() const { return p_prime_; }
    FourVector const& q() const { return q_; }
    FourVector const& q_prime() const { return q_prime_; }

    double s() const { return s_; }
    double t() const { return t_; }
    double u() const { return u_; }

  private:
    friend ElasticKinematics
    build_elastic_cm(double mass, double cm_momentum, double scatter_angle);

    ElasticKinematics() = default;

    double mass_{};
    double cm_momentum_{};
    double scatter_angle_{};
    double energy_{};
    FourVector p_, p_prime_, q_, q_prime_;
    double s_{}, t_{}, u_{};
};

ElasticKinematics
build_elastic_cm(double mass, double cm_momentum, double scatter_angle);

//---------------------------------------------------------------------------//
/*!
 * Two candidate final states sharing the same total four-momentum.
 *
 * Branch 1 is the outgoing pair of the base event. Branch 2 is branch 1
 * rigidly rotated by the split angle about the y axis (normal to the
 * scattering plane), so q1 + q1' == q2 + q2' holds exactly.
 */
class SuperpositionPair
{
  public:
    ElasticKinematics const& base() const { return base_; }
    double split_angle() const { return split_angle_; }
    double mass() const { return base_.mass(); }

    FourVector const& q1() const { return q1_; }
    FourVector const& q1_prime() const { return q1_prime_; }
    FourVector const& q2() const { return q2_; }
    FourVector const& q2_prime() const { return q2_prime_; }

    //! delta_q . q1 = 2 Q^2 sin^2(phi/2)
    double delta_q_dot_q1() const { return delta_q_dot_q1_; }

    //! Same states with the branch labels exchanged
    SuperpositionPair swapped() const;

  private:
    friend SuperpositionPair
    superpose(ElasticKinematics const& kin, double split_angle);

    explicit SuperpositionPair(ElasticKinematics const& kin) : base_(kin) {}

    ElasticKinematics base_;
    double split_angle_{};
    FourVector q1_, q1_prime_, q2_, q2_prime_;
    double delta_q_dot_q1_{};
};

SuperpositionPair superpose(ElasticKinematics const& kin, double split_angle);

//! Rotation of a spatial vector about the y axis
Vec3 rotate_about_y(Vec3 v, double angle);

//---------------------------------------------------------------------------//
}  // namespace softgrav
