/*---------------------------------*-C-*-----------------------------------*/
/* Copyright 2026 softgrav developers.                                     */
/* SPDX-License-Identifier: Apache-2.0                                     */
/*-------------------------------------------------------------------------*/
/*! \file softgrav/softgrav.h
 *  C interface to the soft graviton emission and decoherence library.
 *
 *  Every fallible call returns an sg_status; on failure a description is
 *  available from sg_last_error() on the calling thread. Output arguments
 *  are written only on success, except for SG_ERR_NO_CONVERGENCE where the
 *  best available estimate is written.
 */
/*-------------------------------------------------------------------------*/
#ifndef SOFTGRAV_SOFTGRAV_H
#define SOFTGRAV_SOFTGRAV_H

#include <stddef.h>

#if defined(_WIN32)
#    if defined(SOFTGRAV_BUILDING_LIBRARY)
#        define SG_API __declspec(dllexport)
#    else
#        define SG_API __declspec(dllimport)
#    endif
#else
#    define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*-------------------------------------------------------------------------*/
/* Status and library info */
/*-------------------------------------------------------------------------*/
typedef enum sg_status
{
    SG_OK = 0,
    SG_ERR_NULL_ARGUMENT = 1,
    SG_ERR_DOMAIN = 2,
    SG_ERR_NO_CONVERGENCE = 3,
    SG_ERR_INTERNAL = 4
} sg_status;

SG_API char const* sg_version(void);
SG_API char const* sg_status_string(sg_status status);
/*! Message for the last failed call on this thread ("" if none) */
SG_API char const* sg_last_error(void);

/*-------------------------------------------------------------------------*/
/* Plain data */
/*-------------------------------------------------------------------------*/
typedef struct sg_four_vector
{
    double t, x, y, z;
} sg_four_vector;

/*! Unit direction as polar cosine and azimuth */
typedef struct sg_direction
{
    double z;
    double azimuth;
} sg_direction;

typedef struct sg_quad_spec
{
    double rel_tol;
    double abs_tol;
    int max_subdivisions;
    double singularity_guard;
} sg_quad_spec;

typedef struct sg_quad_result
{
    double value;
    double error_estimate;
    long evaluations;
    int subdivisions;
} sg_quad_result;

typedef struct sg_emission_spec
{
    double lambda_ir;
    double lambda_uv;
    double newton_g;
    double m0_squared;
} sg_emission_spec;

/*! prefactor * bracket_value * log_factor = total */
typedef struct sg_coefficient
{
    double bracket_value;
    double log_factor;
    double prefactor;
    double total;
    char const* convention_tag; /* static storage */
} sg_coefficient;

typedef struct sg_leg
{
    sg_four_vector momentum;
    double sign;
} sg_leg;

typedef struct sg_branch_velocities
{
    double speed;
    double gamma;
    double opening_angle;
} sg_branch_velocities;

typedef struct sg_finite_time_spec
{
    double time;
    double ir_cutoff;
    double uv_cutoff;
    double reference_frequency;
} sg_finite_time_spec;

SG_API sg_quad_spec sg_quad_spec_default(void);
SG_API sg_emission_spec sg_emission_spec_default(void);
SG_API sg_finite_time_spec sg_finite_time_spec_default(void);
SG_API sg_status sg_branch_velocities_make(double speed, double opening_angle,
                                           sg_branch_velocities* out);

/*-------------------------------------------------------------------------*/
/* Kinematics */
/*-------------------------------------------------------------------------*/
typedef struct sg_kinematics sg_kinematics;
typedef struct sg_pair sg_pair;

typedef struct sg_kinematics_info
{
    double mass;
    double cm_momentum;
    double scatter_angle;
    double energy;
    double s, t, u;
    sg_four_vector p, p_prime, q, q_prime;
} sg_kinematics_info;

typedef struct sg_pair_info
{
    double mass;
    double split_angle;
    double delta_q_dot_q1;
    sg_four_vector q1, q1_prime, q2, q2_prime;
} sg_pair_info;

SG_API sg_status sg_kinematics_create(double mass, double cm_momentum,
                                      double scatter_angle,
                                      sg_kinematics** out);
SG_API void sg_kinematics_destroy(sg_kinematics* kin);
SG_API sg_status sg_kinematics_info_get(sg_kinematics const* kin,
                                        sg_kinematics_info* out);

SG_API sg_status sg_pair_create(sg_kinematics const* kin, double split_angle,
                                sg_pair** out);
SG_API sg_status sg_pair_swapped(sg_pair const* pair, sg_pair** out);
SG_API void sg_pair_destroy(sg_pair* pair);
SG_API sg_status sg_pair_info_get(sg_pair const* pair, sg_pair_info* out);
SG_API sg_status sg_conservation_defect(sg_pair const* pair, double* out);

SG_API sg_status sg_invariant_ratio(sg_four_vector const* a,
                                    sg_four_vector const* b, double mass,
                                    double* out);
SG_API sg_status sg_massless_invariant(sg_four_vector const* a,
                                       sg_four_vector const* b, double* out);

/*-------------------------------------------------------------------------*/
/* Special functions */
/*-------------------------------------------------------------------------*/
SG_API sg_status sg_d_weinberg(double x, double* out);
SG_API sg_status sg_d_weinberg_deriv(double x, double* out);
SG_API sg_status sg_cosine_integral(double x, double* out);
SG_API sg_status sg_cin(double x, double* out);

/*-------------------------------------------------------------------------*/
/* Soft radiation densities */
/*-------------------------------------------------------------------------*/
SG_API sg_status sg_polarization_contraction(double const a[3],
                                             double const b[3],
                                             sg_direction khat, double* out);
SG_API sg_status sg_covariant_soft_density(sg_leg const* legs, size_t n_legs,
                                           double mass, sg_direction khat,
                                           double* out);
SG_API sg_status sg_transverse_soft_density(sg_leg const* legs,
                                            size_t n_legs, sg_direction khat,
                                            double* out);
SG_API sg_status sg_eikonal_bracket_density(sg_kinematics const* kin,
                                            sg_direction khat, double* out);
SG_API sg_status sg_branch_difference_density(sg_pair const* pair,
                                              sg_direction khat, double* out);

/*-------------------------------------------------------------------------*/
/* Emission and interference coefficients */
/*-------------------------------------------------------------------------*/
SG_API sg_status sg_emission_log_coefficient(sg_kinematics const* kin,
                                             sg_emission_spec const* spec,
                                             sg_coefficient* out);
SG_API sg_status sg_interference_coefficient(sg_pair const* pair,
                                             sg_emission_spec const* spec,
                                             double m1m2_re,
                                             sg_coefficient* out);
SG_API sg_status sg_interference_coefficient_small_angle(
    sg_kinematics const* kin, double split_angle,
    sg_emission_spec const* spec, double m1m2_re, sg_coefficient* out);
SG_API sg_status sg_interference_coefficient_massless(
    sg_pair const* pair, double s, sg_emission_spec const* spec,
    double m1m2_re, sg_coefficient* out);
SG_API sg_status sg_interference_coefficient_massless_small_angle(
    double cm_momentum, double split_angle, sg_emission_spec const* spec,
    double m1m2_re, sg_coefficient* out);

/*! Quadrature routes; bracket_error may be NULL */
SG_API sg_status sg_emission_log_coefficient_quadrature(
    sg_kinematics const* kin, sg_emission_spec const* spec,
    sg_quad_spec const* quad, sg_coefficient* out, double* bracket_error);
SG_API sg_status sg_interference_coefficient_quadrature(
    sg_pair const* pair, sg_emission_spec const* spec,
    sg_quad_spec const* quad, double m1m2_re, sg_coefficient* out,
    double* bracket_error);

/*-------------------------------------------------------------------------*/
/* Velocity superpositions */
/*-------------------------------------------------------------------------*/
SG_API sg_status sg_xi_density(sg_branch_velocities const* branches,
                               double newton_g, double mass,
                               sg_direction khat, double* out);
SG_API sg_status sg_x_coefficient(sg_branch_velocities const* branches,
                                  double newton_g, double mass,
                                  sg_quad_spec const* quad,
                                  sg_quad_result* out);
SG_API sg_status sg_x0_closed_form(double speed, double gamma,
                                   double newton_g, double mass, double* out);
SG_API sg_status sg_x_delta_relativistic(double gm2gamma2, double delta,
                                         double gamma, double* out);
SG_API sg_status sg_x_delta_nonrelativistic(double gm2, double speed,
                                            double delta, double* out);
SG_API sg_status sg_x0_nonrelativistic(double gm2, double speed,
                                       double* out);
SG_API sg_status sg_nu_relativistic(double gm2gamma2, double delta,
                                    double gamma, double* out);
SG_API sg_status sg_nu_nonrelativistic(double gm2, double speed, double delta,
                                       double* out);
SG_API sg_status sg_interference_ratio(double t1, double t2, double nu,
                                       double* out);
SG_API sg_status sg_finite_time_real_factor(
    sg_branch_velocities const* branches, double newton_g, double mass,
    sg_finite_time_spec const* spec, sg_quad_spec const* quad,
    sg_quad_result* out);
SG_API sg_status sg_finite_time_bracket(sg_branch_velocities const* branches,
                                        sg_finite_time_spec const* spec,
                                        sg_direction khat, double* out);

/*-------------------------------------------------------------------------*/
/* Quadrature */
/*-------------------------------------------------------------------------*/
typedef double (*sg_integrand_1d)(double x, void* user_data);
typedef double (*sg_integrand_sphere)(sg_direction khat, void* user_data);

SG_API sg_status sg_integrate_interval(sg_integrand_1d f, void* user_data,
                                       double a, double b,
                                       sg_quad_spec const* quad,
                                       sg_quad_result* out);
/*! flagged may be NULL when n_flagged is 0 */
SG_API sg_status sg_integrate_sphere(sg_integrand_sphere f, void* user_data,
                                     sg_quad_spec const* quad,
                                     int azimuth_symmetric,
                                     double const (*flagged)[3],
                                     size_t n_flagged, sg_quad_result* out);

#ifdef __cplusplus
}
#endif

#endif /* SOFTGRAV_SOFTGRAV_H */
