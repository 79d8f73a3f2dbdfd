//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file c_api.cpp
//---------------------------------------------------------------------------//
#include "softgrav/softgrav.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "softgrav/bloch_nordsieck.hpp"
#include "softgrav/decoherence.hpp"
#include "softgrav/error.hpp"
#include "softgrav/kinematics.hpp"
#include "softgrav/quadrature.hpp"
#include "softgrav/soft_radiation.hpp"
#include "softgrav/special_functions.hpp"

namespace sg = softgrav;

struct sg_kinematics
{
    sg::ElasticKinematics kin;
};

struct sg_pair
{
    sg::SuperpositionPair pair;
};

namespace
{
//---------------------------------------------------------------------------//
thread_local std::string last_error;

// Tag storage outliving every returned sg_coefficient
std::string const convention_tag_storage{sg::coefficient_convention};

sg_status fail(sg_status status, char const* what)
{
    last_error = what;
    return status;
}

struct NullArgument
{
};

template<class... Ts>
void require(Ts const*... ptrs)
{
    if (((ptrs == nullptr) || ...))
        throw NullArgument{};
}

// Run body and translate exceptions; on_no_convergence receives the best
// estimate carried by a ConvergenceError
template<class F, class G>
sg_status guarded(F&& body, G&& on_no_convergence)
{
    try
    {
        body();
        last_error.clear();
        return SG_OK;
    }
    catch (NullArgument const&)
    {
        return fail(SG_ERR_NULL_ARGUMENT, "null argument");
    }
    catch (sg::DomainError const& e)
    {
        return fail(SG_ERR_DOMAIN, e.what());
    }
    catch (sg::ConvergenceError const& e)
    {
        try
        {
            on_no_convergence(e);
        }
        catch (...)
        {
        }
        return fail(SG_ERR_NO_CONVERGENCE, e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(SG_ERR_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(SG_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(SG_ERR_INTERNAL, "unknown exception");
    }
}

template<class F>
sg_status guarded(F&& body)
{
    return guarded(std::forward<F>(body), [](sg::ConvergenceError const&) {});
}

//---------------------------------------------------------------------------//
sg::FourVector to_cpp(sg_four_vector const& v)
{
    return {v.t, v.x, v.y, v.z};
}

sg_four_vector to_c(sg::FourVector const& v)
{
    return {v.t, v.x, v.y, v.z};
}

sg::UnitDirection to_cpp(sg_direction const& d)
{
    return {d.z, d.azimuth};
}

sg::QuadratureSpec to_cpp(sg_quad_spec const& q)
{
    sg::QuadratureSpec s;
    s.rel_tol = q.rel_tol;
    s.abs_tol = q.abs_tol;
    s.max_subdivisions = q.max_subdivisions;
    s.singularity_guard = q.singularity_guard;
    return s;
}

sg_quad_result to_c(sg::QuadratureResult const& r)
{
    return {r.value, r.error_estimate, r.evaluations, r.subdivisions};
}

sg::EmissionSpec to_cpp(sg_emission_spec const& e)
{
    sg::EmissionSpec s;
    s.lambda_ir = e.lambda_ir;
    s.lambda_uv = e.lambda_uv;
    s.newton_g = e.newton_g;
    s.m0_squared = e.m0_squared;
    return s;
}

sg_coefficient to_c(sg::CoefficientResult const& r)
{
    return {r.bracket_value, r.log_factor, r.prefactor, r.total,
            convention_tag_storage.c_str()};
}

sg::BranchVelocities to_cpp(sg_branch_velocities const& b)
{
    sg::BranchVelocities r;
    r.speed = b.speed;
    r.gamma = b.gamma;
    r.opening_angle = b.opening_angle;
    return r;
}

sg::FiniteTimeSpec to_cpp(sg_finite_time_spec const& f)
{
    sg::FiniteTimeSpec s;
    s.time = f.time;
    s.ir_cutoff = f.ir_cutoff;
    s.uv_cutoff = f.uv_cutoff;
    s.reference_frequency = f.reference_frequency;
    return s;
}

std::vector<sg::Leg> to_cpp(sg_leg const* legs, size_t n)
{
    std::vector<sg::Leg> result(n);
    for (size_t i = 0; i < n; ++i)
        result[i] = {to_cpp(legs[i].momentum), legs[i].sign};
    return result;
}

// Fill a coefficient from a bracket estimate, taking prefactor and log
// factor from the closed-form route (they do not depend on the bracket)
void partial_coefficient(sg::CoefficientResult shape, double bracket,
                         sg_coefficient* out)
{
    shape.bracket_value = bracket;
    shape.total = shape.prefactor * bracket * shape.log_factor;
    *out = to_c(shape);
}

template<class F>
sg_status scalar(double* out, F&& f)
{
    return guarded([&] {
        require(out);
        *out = f();
    });
}
}  // namespace

extern "C" {
//---------------------------------------------------------------------------//
char const* sg_version(void)
{
    return SOFTGRAV_VERSION;
}

char const* sg_status_string(sg_status status)
{
    switch (status)
    {
        case SG_OK:
            return "ok";
        case SG_ERR_NULL_ARGUMENT:
            return "null argument";
        case SG_ERR_DOMAIN:
            return "domain error";
        case SG_ERR_NO_CONVERGENCE:
            return "no convergence";
        case SG_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

char const* sg_last_error(void)
{
    return last_error.c_str();
}

//---------------------------------------------------------------------------//
sg_quad_spec sg_quad_spec_default(void)
{
    sg::QuadratureSpec const s;
    return {s.rel_tol, s.abs_tol, s.max_subdivisions, s.singularity_guard};
}

sg_emission_spec sg_emission_spec_default(void)
{
    sg::EmissionSpec const s;
    return {s.lambda_ir, s.lambda_uv, s.newton_g, s.m0_squared};
}

sg_finite_time_spec sg_finite_time_spec_default(void)
{
    sg::FiniteTimeSpec const s;
    return {s.time, s.ir_cutoff, s.uv_cutoff, s.reference_frequency};
}

sg_status sg_branch_velocities_make(double speed, double opening_angle,
                                    sg_branch_velocities* out)
{
    return guarded([&] {
        require(out);
        auto const b = sg::BranchVelocities::make(speed, opening_angle);
        *out = {b.speed, b.gamma, b.opening_angle};
    });
}

//---------------------------------------------------------------------------//
sg_status sg_kinematics_create(double mass, double cm_momentum,
                               double scatter_angle, sg_kinematics** out)
{
    return guarded([&] {
        require(out);
        *out = new sg_kinematics{
            sg::build_elastic_cm(mass, cm_momentum, scatter_angle)};
    });
}

void sg_kinematics_destroy(sg_kinematics* kin)
{
    delete kin;
}

sg_status sg_kinematics_info_get(sg_kinematics const* kin,
                                 sg_kinematics_info* out)
{
    return guarded([&] {
        require(kin, out);
        sg::ElasticKinematics const& k = kin->kin;
        *out = {k.mass(),          k.cm_momentum(),      k.scatter_angle(),
                k.energy(),        k.s(),                k.t(),
                k.u(),             to_c(k.p()),          to_c(k.p_prime()),
                to_c(k.q()),       to_c(k.q_prime())};
    });
}

sg_status sg_pair_create(sg_kinematics const* kin, double split_angle,
                         sg_pair** out)
{
    return guarded([&] {
        require(kin, out);
        *out = new sg_pair{sg::superpose(kin->kin, split_angle)};
    });
}

sg_status sg_pair_swapped(sg_pair const* pair, sg_pair** out)
{
    return guarded([&] {
        require(pair, out);
        *out = new sg_pair{pair->pair.swapped()};
    });
}

void sg_pair_destroy(sg_pair* pair)
{
    delete pair;
}

sg_status sg_pair_info_get(sg_pair const* pair, sg_pair_info* out)
{
    return guarded([&] {
        require(pair, out);
        sg::SuperpositionPair const& p = pair->pair;
        *out = {p.mass(),         p.split_angle(),       p.delta_q_dot_q1(),
                to_c(p.q1()),     to_c(p.q1_prime()),    to_c(p.q2()),
                to_c(p.q2_prime())};
    });
}

sg_status sg_conservation_defect(sg_pair const* pair, double* out)
{
    return scalar(out, [&] {
        require(pair);
        return sg::conservation_defect(pair->pair);
    });
}

sg_status sg_invariant_ratio(sg_four_vector const* a, sg_four_vector const* b,
                             double mass, double* out)
{
    return scalar(out, [&] {
        require(a, b);
        return sg::invariant_ratio(to_cpp(*a), to_cpp(*b), mass);
    });
}

sg_status sg_massless_invariant(sg_four_vector const* a,
                                sg_four_vector const* b, double* out)
{
    return scalar(out, [&] {
        require(a, b);
        return sg::massless_invariant(to_cpp(*a), to_cpp(*b));
    });
}

//---------------------------------------------------------------------------//
sg_status sg_d_weinberg(double x, double* out)
{
    return scalar(out, [&] { return sg::d_weinberg(x); });
}

sg_status sg_d_weinberg_deriv(double x, double* out)
{
    return scalar(out, [&] { return sg::d_weinberg_deriv(x); });
}

sg_status sg_cosine_integral(double x, double* out)
{
    return scalar(out, [&] { return sg::cosine_integral(x); });
}

sg_status sg_cin(double x, double* out)
{
    return scalar(out, [&] { return sg::cin(x); });
}

//---------------------------------------------------------------------------//
sg_status sg_polarization_contraction(double const a[3], double const b[3],
                                      sg_direction khat, double* out)
{
    return scalar(out, [&] {
        require(a, b);
        return sg::polarization_contraction({a[0], a[1], a[2]},
                                            {b[0], b[1], b[2]}, to_cpp(khat));
    });
}

sg_status sg_covariant_soft_density(sg_leg const* legs, size_t n_legs,
                                    double mass, sg_direction khat,
                                    double* out)
{
    return scalar(out, [&] {
        if (n_legs > 0)
            require(legs);
        auto const v = to_cpp(legs, n_legs);
        return sg::covariant_soft_density(v, mass, to_cpp(khat));
    });
}

sg_status sg_transverse_soft_density(sg_leg const* legs, size_t n_legs,
                                     sg_direction khat, double* out)
{
    return scalar(out, [&] {
        if (n_legs > 0)
            require(legs);
        auto const v = to_cpp(legs, n_legs);
        return sg::transverse_soft_density(v, to_cpp(khat));
    });
}

sg_status sg_eikonal_bracket_density(sg_kinematics const* kin,
                                     sg_direction khat, double* out)
{
    return scalar(out, [&] {
        require(kin);
        return sg::eikonal_bracket_density(kin->kin, to_cpp(khat));
    });
}

sg_status sg_branch_difference_density(sg_pair const* pair, sg_direction khat,
                                       double* out)
{
    return scalar(out, [&] {
        require(pair);
        return sg::branch_difference_density(pair->pair, to_cpp(khat));
    });
}

//---------------------------------------------------------------------------//
sg_status sg_emission_log_coefficient(sg_kinematics const* kin,
                                      sg_emission_spec const* spec,
                                      sg_coefficient* out)
{
    return guarded([&] {
        require(kin, spec, out);
        *out = to_c(sg::emission_log_coefficient(kin->kin, to_cpp(*spec)));
    });
}

sg_status sg_interference_coefficient(sg_pair const* pair,
                                      sg_emission_spec const* spec,
                                      double m1m2_re, sg_coefficient* out)
{
    return guarded([&] {
        require(pair, spec, out);
        *out = to_c(
            sg::interference_coefficient(pair->pair, to_cpp(*spec), m1m2_re));
    });
}

sg_status sg_interference_coefficient_small_angle(sg_kinematics const* kin,
                                                  double split_angle,
                                                  sg_emission_spec const* spec,
                                                  double m1m2_re,
                                                  sg_coefficient* out)
{
    return guarded([&] {
        require(kin, spec, out);
        *out = to_c(sg::interference_coefficient_small_angle(
            kin->kin, split_angle, to_cpp(*spec), m1m2_re));
    });
}

sg_status sg_interference_coefficient_massless(sg_pair const* pair, double s,
                                               sg_emission_spec const* spec,
                                               double m1m2_re,
                                               sg_coefficient* out)
{
    return guarded([&] {
        require(pair, spec, out);
        *out = to_c(sg::interference_coefficient_massless(
            pair->pair, s, to_cpp(*spec), m1m2_re));
    });
}

sg_status sg_interference_coefficient_massless_small_angle(
    double cm_momentum, double split_angle, sg_emission_spec const* spec,
    double m1m2_re, sg_coefficient* out)
{
    return guarded([&] {
        require(spec, out);
        *out = to_c(sg::interference_coefficient_massless_small_angle(
            cm_momentum, split_angle, to_cpp(*spec), m1m2_re));
    });
}

sg_status sg_emission_log_coefficient_quadrature(sg_kinematics const* kin,
                                                 sg_emission_spec const* spec,
                                                 sg_quad_spec const* quad,
                                                 sg_coefficient* out,
                                                 double* bracket_error)
{
    return guarded(
        [&] {
            require(kin, spec, quad, out);
            *out = to_c(sg::emission_log_coefficient_quadrature(
                kin->kin, to_cpp(*spec), to_cpp(*quad), bracket_error));
        },
        [&](sg::ConvergenceError const& e) {
            partial_coefficient(
                sg::emission_log_coefficient(kin->kin, to_cpp(*spec)),
                e.best_value(), out);
            if (bracket_error)
                *bracket_error = e.best_error();
        });
}

sg_status sg_interference_coefficient_quadrature(sg_pair const* pair,
                                                 sg_emission_spec const* spec,
                                                 sg_quad_spec const* quad,
                                                 double m1m2_re,
                                                 sg_coefficient* out,
                                                 double* bracket_error)
{
    return guarded(
        [&] {
            require(pair, spec, quad, out);
            *out = to_c(sg::interference_coefficient_quadrature(
                pair->pair, to_cpp(*spec), to_cpp(*quad), m1m2_re,
                bracket_error));
        },
        [&](sg::ConvergenceError const& e) {
            sg::SuperpositionPair const& p = pair->pair;
            auto const shape
                = p.mass() > 0
                      ? sg::interference_coefficient(p, to_cpp(*spec), m1m2_re)
                      : sg::interference_coefficient_massless(
                          p, p.base().s(), to_cpp(*spec), m1m2_re);
            partial_coefficient(shape, e.best_value(), out);
            if (bracket_error)
                *bracket_error = e.best_error();
        });
}

//---------------------------------------------------------------------------//
sg_status sg_xi_density(sg_branch_velocities const* branches, double newton_g,
                        double mass, sg_direction khat, double* out)
{
    return scalar(out, [&] {
        require(branches);
        auto const b = to_cpp(*branches);
        b.validate();
        return sg::xi_density(b, newton_g, mass, to_cpp(khat));
    });
}

namespace
{
void write_best(sg::ConvergenceError const& e, sg_quad_result* out)
{
    if (out)
        *out = {e.best_value(), e.best_error(), 0, 0};
}
}  // namespace

sg_status sg_x_coefficient(sg_branch_velocities const* branches,
                           double newton_g, double mass,
                           sg_quad_spec const* quad, sg_quad_result* out)
{
    return guarded(
        [&] {
            require(branches, quad, out);
            *out = to_c(sg::x_coefficient(to_cpp(*branches), newton_g, mass,
                                          to_cpp(*quad)));
        },
        [&](sg::ConvergenceError const& e) { write_best(e, out); });
}

sg_status sg_x0_closed_form(double speed, double gamma, double newton_g,
                            double mass, double* out)
{
    return scalar(out, [&] {
        return sg::x0_closed_form(speed, gamma, newton_g, mass);
    });
}

sg_status sg_x_delta_relativistic(double gm2gamma2, double delta,
                                  double gamma, double* out)
{
    return scalar(out, [&] {
        return sg::x_delta_relativistic(gm2gamma2, delta, gamma);
    });
}

sg_status sg_x_delta_nonrelativistic(double gm2, double speed, double delta,
                                     double* out)
{
    return scalar(out, [&] {
        return sg::x_delta_nonrelativistic(gm2, speed, delta);
    });
}

sg_status sg_x0_nonrelativistic(double gm2, double speed, double* out)
{
    return scalar(out, [&] { return sg::x0_nonrelativistic(gm2, speed); });
}

sg_status sg_nu_relativistic(double gm2gamma2, double delta, double gamma,
                             double* out)
{
    return scalar(out, [&] {
        return sg::nu_relativistic(gm2gamma2, delta, gamma);
    });
}

sg_status sg_nu_nonrelativistic(double gm2, double speed, double delta,
                                double* out)
{
    return scalar(out, [&] {
        return sg::nu_nonrelativistic(gm2, speed, delta);
    });
}

sg_status sg_interference_ratio(double t1, double t2, double nu, double* out)
{
    return scalar(out, [&] { return sg::interference_ratio(t1, t2, nu); });
}

sg_status sg_finite_time_real_factor(sg_branch_velocities const* branches,
                                     double newton_g, double mass,
                                     sg_finite_time_spec const* spec,
                                     sg_quad_spec const* quad,
                                     sg_quad_result* out)
{
    return guarded(
        [&] {
            require(branches, spec, quad, out);
            *out = to_c(sg::finite_time_real_factor(to_cpp(*branches),
                                                    newton_g, mass,
                                                    to_cpp(*spec),
                                                    to_cpp(*quad)));
        },
        [&](sg::ConvergenceError const& e) { write_best(e, out); });
}

sg_status sg_finite_time_bracket(sg_branch_velocities const* branches,
                                 sg_finite_time_spec const* spec,
                                 sg_direction khat, double* out)
{
    return scalar(out, [&] {
        require(branches, spec);
        auto const b = to_cpp(*branches);
        auto const s = to_cpp(*spec);
        b.validate();
        s.validate();
        return sg::finite_time_bracket(b, s, to_cpp(khat));
    });
}

//---------------------------------------------------------------------------//
sg_status sg_integrate_interval(sg_integrand_1d f, void* user_data, double a,
                                double b, sg_quad_spec const* quad,
                                sg_quad_result* out)
{
    return guarded(
        [&] {
            if (!f)
                throw NullArgument{};
            require(quad, out);
            *out = to_c(sg::integrate_interval(
                [f, user_data](double x) { return f(x, user_data); }, a, b,
                to_cpp(*quad)));
        },
        [&](sg::ConvergenceError const& e) { write_best(e, out); });
}

sg_status sg_integrate_sphere(sg_integrand_sphere f, void* user_data,
                              sg_quad_spec const* quad, int azimuth_symmetric,
                              double const (*flagged)[3], size_t n_flagged,
                              sg_quad_result* out)
{
    return guarded(
        [&] {
            if (!f)
                throw NullArgument{};
            require(quad, out);
            if (n_flagged > 0)
                require(flagged);
            std::vector<sg::Vec3> dirs(n_flagged);
            for (size_t i = 0; i < n_flagged; ++i)
                dirs[i] = {flagged[i][0], flagged[i][1], flagged[i][2]};
            sg::SphereOptions options;
            options.azimuth_symmetric = azimuth_symmetric != 0;
            options.flagged_directions = dirs;
            *out = to_c(sg::integrate_sphere(
                [f, user_data](sg::UnitDirection const& k) {
                    return f(sg_direction{k.z, k.azimuth}, user_data);
                },
                to_cpp(*quad), options));
        },
        [&](sg::ConvergenceError const& e) { write_best(e, out); });
}

//---------------------------------------------------------------------------//
}  // extern "C"
