//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_decoherence.cpp
//---------------------------------------------------------------------------//
#include "softgrav/decoherence.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "softgrav/error.hpp"
#include "softgrav/special_functions.hpp"
#include "test_util.hpp"

using namespace softgrav;
using namespace softgrav::test;

namespace
{
EmissionSpec default_spec()
{
    EmissionSpec s;
    s.lambda_ir = 1e-6;
    s.lambda_uv = 1;
    s.newton_g = 1;
    return s;
}

QuadratureSpec quad(double rel)
{
    QuadratureSpec q;
    q.rel_tol = rel;
    return q;
}

void expect_total_identity(CoefficientResult const& r)
{
    double const product = r.bracket_value * r.log_factor * r.prefactor;
    EXPECT_NEAR(r.total, product, 1e-14 * std::fabs(product));
    EXPECT_EQ(r.convention_tag, coefficient_convention);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(Emission, FrozenBracket)
{
    auto const kin = build_elastic_cm(1, 1.3, 0.7);
    auto const r = emission_log_coefficient(kin, default_spec());
    EXPECT_LE(rel_diff(r.bracket_value, 0.91985157819492964659), 1e-13);
    EXPECT_NEAR(r.prefactor, 8 * pi / (2 * pi * pi), 1e-15);
    EXPECT_NEAR(r.log_factor, std::log(1e6), 1e-13);
    expect_total_identity(r);
}

TEST(Emission, ForwardAndStaticLimitsVanish)
{
    auto const fwd = emission_log_coefficient(build_elastic_cm(1, 1, 0),
                                              default_spec());
    EXPECT_EQ(fwd.bracket_value, 0);
    EXPECT_EQ(fwd.total, 0);
    auto const stat = emission_log_coefficient(build_elastic_cm(1, 1e-7, 1),
                                               default_spec());
    EXPECT_LT(std::fabs(stat.bracket_value), 1e-12);
}

TEST(Emission, MatchesDirectIntegral)
{
    auto const kin = build_elastic_cm(1, 1, pi / 2);
    auto spec = default_spec();
    spec.m0_squared = 2.5;
    auto const closed = emission_log_coefficient(kin, spec);
    double err = -1;
    auto const numeric
        = emission_log_coefficient_quadrature(kin, spec, quad(1e-9), &err);
    EXPECT_LE(rel_diff(numeric.total, closed.total), 1e-6);
    EXPECT_GE(err, 0);
    EXPECT_LE(std::fabs(numeric.bracket_value - closed.bracket_value),
              10 * err + 1e-12);
    // Direct: kappa^2 |M0|^2 ln / (2 (2 pi)^3) times the density integral
    auto const r = integrate_sphere(
        [&](UnitDirection const& k) { return eikonal_bracket_density(kin, k); },
        quad(1e-9));
    double const direct = spec.kappa_squared() * spec.m0_squared
                          * spec.log_factor() * r.value
                          / (2 * 8 * pi * pi * pi);
    EXPECT_LE(rel_diff(direct, closed.total), 1e-6);
}

TEST(Emission, Rejections)
{
    EXPECT_THROW(emission_log_coefficient(build_elastic_cm(0, 1, 1),
                                          default_spec()),
                 DomainError);
    auto spec = default_spec();
    spec.lambda_ir = 2;
    EXPECT_THROW(emission_log_coefficient(build_elastic_cm(1, 1, 1), spec),
                 DomainError);
}

//---------------------------------------------------------------------------//
TEST(Interference, FrozenBracketIndependentOfScatterAngle)
{
    for (double theta : {0.0, 0.4, pi / 2, 2.9})
    {
        auto const pair = superpose(build_elastic_cm(1, 1, theta), 0.2);
        auto const r = interference_coefficient(pair, default_spec());
        EXPECT_LE(rel_diff(r.bracket_value, 0.038705244445592428258), 1e-12)
            << "theta=" << theta;
        EXPECT_LT(r.total, 0);
        expect_total_identity(r);
    }
}

TEST(Interference, ZeroSplitIsExactlyZero)
{
    auto const pair = superpose(build_elastic_cm(1.4, 0.9, 1.1), 0);
    auto const r = interference_coefficient(pair, default_spec());
    EXPECT_EQ(r.bracket_value, 0);
    EXPECT_EQ(r.total, 0);
    auto const sa = interference_coefficient_small_angle(pair.base(), 0,
                                                         default_spec());
    EXPECT_EQ(sa.total, 0);
}

TEST(Interference, AmplitudeScalesLinearly)
{
    auto const pair = superpose(build_elastic_cm(1, 1, 1), 0.3);
    auto const one = interference_coefficient(pair, default_spec(), 1);
    auto const neg = interference_coefficient(pair, default_spec(), -0.4);
    EXPECT_NEAR(neg.total, -0.4 * one.total, 1e-15 * std::fabs(one.total));
}

TEST(Interference, SwapSymmetry)
{
    for (int i = 0; i < 100; ++i)
    {
        auto const pair = superpose(
            build_elastic_cm(uniform(0.2, 3), uniform(0.05, 5), uniform(0, pi)),
            uniform(0.01, 3));
        auto const a = interference_coefficient(pair, default_spec());
        auto const b = interference_coefficient(pair.swapped(), default_spec());
        EXPECT_LE(rel_diff(b.total, a.total), 1e-12)
            << "m=" << pair.mass() << " Q=" << pair.base().cm_momentum()
            << " phi=" << pair.split_angle() << " bracket=" << a.bracket_value;
    }
}

TEST(Interference, BracketMatchesVectorInvariants)
{
    for (int i = 0; i < 100; ++i)
    {
        double const m = uniform(0.2, 3);
        auto const pair = superpose(
            build_elastic_cm(m, uniform(0.05, 5), uniform(0, pi)),
            uniform(0.3, 3));
        double const da
            = d_weinberg(invariant_ratio(pair.q1(), pair.q1_prime(), m));
        double const db = d_weinberg(invariant_ratio(pair.q1(), pair.q2(), m));
        double const dc
            = d_weinberg(invariant_ratio(pair.q1(), pair.q2_prime(), m));
        double const direct = 1 + da - db - dc;
        // roundoff scale of the cancelling sum
        double const scale = 1e-13 * (1 + da + db + dc);
        auto const r = interference_coefficient(pair, default_spec());
        EXPECT_NEAR(r.bracket_value, direct, scale);
    }
}

TEST(Interference, ConservationIdentity)
{
    for (int i = 0; i < 500; ++i)
    {
        double const m = i % 3 == 0 ? 0.0 : uniform(0.1, 5);
        auto const kin = build_elastic_cm(m, uniform(0.01, 30), uniform(0, pi));
        auto const pair = superpose(kin, uniform(0, pi));
        EXPECT_LE(std::fabs(conservation_defect(pair)), 1e-10 * kin.s());
    }
}

TEST(Interference, QuadratureDualityAtRandomPoints)
{
    for (int i = 0; i < 10; ++i)
    {
        double const m = uniform(0.5, 2);
        double const v = uniform(0.1, 0.9);
        auto const pair = superpose(
            build_elastic_cm(m, m * v / std::sqrt(1 - v * v), uniform(0, pi)),
            uniform(0.05, 2));
        auto const closed = interference_coefficient(pair, default_spec(), 0.7);
        double err = 0;
        auto const numeric = interference_coefficient_quadrature(
            pair, default_spec(), quad(1e-8), 0.7, &err);
        EXPECT_LE(rel_diff(numeric.total, closed.total), 1e-6)
            << "m=" << m << " v=" << v;
        EXPECT_LE(std::fabs(numeric.bracket_value - closed.bracket_value),
                  10 * err + 1e-12);
    }
}

TEST(Interference, ReferencePointQuadrature)
{
    auto const pair = superpose(build_elastic_cm(1, 1, pi / 2), 0.1);
    auto const closed = interference_coefficient(pair, default_spec());
    auto const numeric = interference_coefficient_quadrature(
        pair, default_spec(), quad(1e-9));
    EXPECT_LE(rel_diff(numeric.total, closed.total), 1e-6);
}

//---------------------------------------------------------------------------//
TEST(SmallAngle, MatchesExactAtSmallSplit)
{
    auto const kin = build_elastic_cm(1, 1, pi / 2);
    auto const exact
        = interference_coefficient(superpose(kin, 0.01), default_spec());
    auto const approx
        = interference_coefficient_small_angle(kin, 0.01, default_spec());
    EXPECT_LE(rel_diff(approx.total, exact.total), 1e-3);
    expect_total_identity(approx);
}

TEST(SmallAngle, StaticBaseVanishes)
{
    auto const kin = build_elastic_cm(1, 1e-9, 1);
    auto const r = interference_coefficient_small_angle(kin, 0.1, default_spec());
    EXPECT_LT(std::fabs(r.bracket_value), 1e-15);
}

TEST(SmallAngle, ExpansionIsSecondOrder)
{
    auto const kin = build_elastic_cm(1, 1, pi / 2);
    std::vector<double> ks;
    for (double phi : {0.2, 0.1, 0.05, 0.025})
    {
        double const exact
            = interference_coefficient(superpose(kin, phi), default_spec())
                  .total;
        double const approx
            = interference_coefficient_small_angle(kin, phi, default_spec())
                  .total;
        ks.push_back(std::fabs(exact / approx - 1) / (phi * phi));
    }
    for (std::size_t i = 1; i < ks.size(); ++i)
        EXPECT_LE(rel_diff(ks[i], ks.back()), 0.05) << "K=" << ks[i - 1];
    EXPECT_GT(ks.back(), 0);
}

TEST(SmallAngle, DerivativeDifference)
{
    auto const kin = build_elastic_cm(1.2, 0.7, 1.3);
    double const phi = 0.05;
    auto const r = interference_coefficient_small_angle(kin, phi, default_spec());
    double const m2 = 1.44;
    double const eps = 2 * 0.49 * std::pow(std::sin(phi / 2), 2) / m2;
    double const x = minkowski_dot(kin.p(), kin.p_prime()) / m2;
    EXPECT_LE(rel_diff(r.bracket_value,
                       eps * (d_weinberg_deriv(x) - d_weinberg_deriv(1))),
              1e-14);
    EXPECT_THROW(interference_coefficient_small_angle(build_elastic_cm(0, 1, 1),
                                                      0.1, default_spec()),
                 DomainError);
}

//---------------------------------------------------------------------------//
TEST(Massless, FrozenBracket)
{
    auto const kin = build_elastic_cm(0, 1, pi / 2);
    auto const pair = superpose(kin, 0.3);
    auto const r = interference_coefficient_massless(pair, kin.s(),
                                                     default_spec());
    EXPECT_LE(rel_diff(r.bracket_value, 0.21396035529496319696), 1e-13);
    EXPECT_NEAR(r.prefactor, -8 * pi / (pi * pi), 1e-15);
    expect_total_identity(r);
}

TEST(Massless, DroppedTermCoefficientVanishes)
{
    auto const pair = superpose(build_elastic_cm(0, 2, 1.1), 0.6);
    double const coeff = minkowski_dot(pair.q1(), pair.q1_prime())
                         - minkowski_dot(pair.q1(), pair.q2())
                         - minkowski_dot(pair.q1(), pair.q2_prime());
    EXPECT_NEAR(coeff, 0, 1e-14 * pair.base().s());
}

TEST(Massless, VanishesAsSplitCloses)
{
    auto const kin = build_elastic_cm(0, 1, pi / 2);
    auto const spec = default_spec();
    auto const r
        = interference_coefficient_massless(superpose(kin, 1e-4), kin.s(), spec);
    EXPECT_LT(std::fabs(r.total),
              1e-6 * spec.kappa_squared() * kin.s() * spec.log_factor());
}

TEST(Massless, SmallAngleCore)
{
    auto const r = interference_coefficient_massless_small_angle(
        1, 0.02, default_spec());
    double const sh = std::sin(0.01);
    EXPECT_NEAR(2 * std::log(sh) - 1, -10.210374, 1e-6);
    double const core = 2 * sh * sh * (2 * std::log(sh) - 1);
    EXPECT_NEAR(core, -2.042033e-3, 1e-6);
    EXPECT_LE(rel_diff(r.bracket_value, core), 1e-14);
    EXPECT_GT(r.prefactor, 0);
    expect_total_identity(r);
}

TEST(Massless, SmallAngleAgreesWithExact)
{
    auto const kin = build_elastic_cm(0, 1, pi / 2);
    auto const exact = interference_coefficient_massless(superpose(kin, 0.02),
                                                         kin.s(), default_spec());
    auto const approx = interference_coefficient_massless_small_angle(
        1, 0.02, default_spec());
    EXPECT_LE(rel_diff(approx.total, exact.total), 1e-3);
}

TEST(Massless, QuadratureMatchesClosedForm)
{
    for (double phi : {0.3, 1.0})
    {
        auto const kin = build_elastic_cm(0, 1, pi / 2);
        auto const pair = superpose(kin, phi);
        auto const closed
            = interference_coefficient_massless(pair, kin.s(), default_spec());
        double err = 0;
        auto const numeric = interference_coefficient_quadrature(
            pair, default_spec(), quad(1e-8), 1, &err);
        EXPECT_LE(rel_diff(numeric.total, closed.total), 1e-6) << "phi=" << phi;
    }
}

TEST(Massless, Rejections)
{
    auto const spec = default_spec();
    auto const massive = superpose(build_elastic_cm(1, 1, 1), 0.2);
    EXPECT_THROW(interference_coefficient_massless(massive, 4, spec),
                 DomainError);
    auto const kin = build_elastic_cm(0, 1, 1);
    EXPECT_THROW(interference_coefficient_massless(superpose(kin, 0.2), 0, spec),
                 DomainError);
    EXPECT_THROW(interference_coefficient_massless(superpose(kin, 0), kin.s(),
                                                   spec),
                 DomainError);
    EXPECT_THROW(interference_coefficient(superpose(kin, 0.2), spec),
                 DomainError);
    EXPECT_THROW(interference_coefficient_massless_small_angle(1, 0, spec),
                 DomainError);
    EXPECT_THROW(interference_coefficient_massless_small_angle(1, 2, spec),
                 DomainError);
}
