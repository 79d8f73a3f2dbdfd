//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadrature.cpp
//---------------------------------------------------------------------------//
#include "softgrav/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "softgrav/error.hpp"

namespace softgrav
{
namespace
{
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double two_pi = 2 * std::numbers::pi;

//---------------------------------------------------------------------------//
// Gauss-Kronrod (7,15) nodes on [0,1]; Gauss nodes sit at even indices.
struct GaussKronrod15
{
    std::array<double, 8> abscissa;
    std::array<double, 8> kronrod;
    std::array<double, 4> gauss;

    GaussKronrod15()
    {
        namespace bq = boost::math::quadrature;
        auto const& x = bq::gauss_kronrod<double, 15>::abscissa();
        auto const& wk = bq::gauss_kronrod<double, 15>::weights();
        auto const& wg = bq::gauss<double, 7>::weights();
        std::copy(x.begin(), x.end(), abscissa.begin());
        std::copy(wk.begin(), wk.end(), kronrod.begin());
        std::copy(wg.begin(), wg.end(), gauss.begin());
    }
};

GaussKronrod15 const& rule()
{
    static GaussKronrod15 const gk;
    return gk;
}

//---------------------------------------------------------------------------//
// Neumaier compensated sum
class CompensatedSum
{
  public:
    void add(double x)
    {
        double const t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_{0};
    double comp_{0};
};

//---------------------------------------------------------------------------//
struct Sample
{
    double value;
    double inner_error;
};

struct Interval
{
    double a;
    double b;
    double value;
    double error;
    double inner_error;
    double abs_value;
    bool at_floor;
};

template<class F>
Interval apply_rule(F const& f, double a, double b)
{
    GaussKronrod15 const& gk = rule();
    double const center = 0.5 * (a + b);
    double const half = 0.5 * (b - a);

    std::array<double, 15> fv;
    double inner = 0;
    Sample const s0 = f(center);
    fv[0] = s0.value;
    inner += gk.kronrod[0] * s0.inner_error;
    for (int i = 1; i < 8; ++i)
    {
        double const dx = half * gk.abscissa[i];
        Sample const lo = f(center - dx);
        Sample const hi = f(center + dx);
        fv[2 * i - 1] = lo.value;
        fv[2 * i] = hi.value;
        inner += gk.kronrod[i] * (lo.inner_error + hi.inner_error);
    }
    for (double v : fv)
    {
        if (!std::isfinite(v))
        {
            std::ostringstream os;
            os << "quadrature: integrand is not finite on [" << a << ", " << b
               << "]";
            detail::throw_domain(os.str());
        }
    }

    double res_k = gk.kronrod[0] * fv[0];
    double res_g = gk.gauss[0] * fv[0];
    double res_abs = gk.kronrod[0] * std::fabs(fv[0]);
    for (int i = 1; i < 8; ++i)
    {
        double const pair = fv[2 * i - 1] + fv[2 * i];
        res_k += gk.kronrod[i] * pair;
        res_abs += gk.kronrod[i]
                   * (std::fabs(fv[2 * i - 1]) + std::fabs(fv[2 * i]));
        if (i % 2 == 0)
        {
            res_g += gk.gauss[i / 2] * pair;
        }
    }
    double const mean = 0.5 * res_k;
    double res_asc = gk.kronrod[0] * std::fabs(fv[0] - mean);
    for (int i = 1; i < 8; ++i)
    {
        res_asc += gk.kronrod[i]
                   * (std::fabs(fv[2 * i - 1] - mean)
                      + std::fabs(fv[2 * i] - mean));
    }

    double const scale = std::fabs(half);
    res_asc *= scale;
    res_abs *= scale;
    double err = std::fabs((res_k - res_g) * half);
    if (res_asc != 0 && err != 0)
    {
        err = res_asc * std::min(1.0, std::pow(200 * err / res_asc, 1.5));
    }
    double const floor = 50 * eps * res_abs;
    bool at_floor = false;
    if (err <= floor)
    {
        err = floor;
        at_floor = true;
    }
    return {a, b, res_k * half, err, inner * half, res_abs, at_floor};
}

struct WorstFirst
{
    bool operator()(Interval const& lhs, Interval const& rhs) const
    {
        if (lhs.error != rhs.error)
            return lhs.error < rhs.error;
        return lhs.a > rhs.a;
    }
};

struct AdaptiveOutcome
{
    QuadratureResult result;
    bool converged;
};

template<class F>
AdaptiveOutcome
adaptive(F const& f, double a, double b, QuadratureSpec const& spec)
{
    std::priority_queue<Interval, std::vector<Interval>, WorstFirst> active;
    std::vector<Interval> done;
    long evaluations = 0;

    auto push = [&](Interval const& iv) {
        evaluations += 15;
        bool const splittable = 0.5 * (iv.a + iv.b) > iv.a
                                && 0.5 * (iv.a + iv.b) < iv.b;
        if (iv.at_floor || !splittable)
            done.push_back(iv);
        else
            active.push(iv);
    };

    auto totals = [&](double& value, double& error, double& inner) {
        std::vector<Interval> all(done);
        auto copy = active;
        while (!copy.empty())
        {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(),
                  [](Interval const& l, Interval const& r) { return l.a < r.a; });
        CompensatedSum v, e, in;
        for (Interval const& iv : all)
        {
            v.add(iv.value);
            e.add(iv.error);
            in.add(iv.inner_error);
        }
        value = v.value();
        error = e.value();
        inner = in.value();
    };

    push(apply_rule(f, a, b));
    double run_value = 0, run_error = 0, run_inner = 0;
    totals(run_value, run_error, run_inner);

    int n_intervals = 1;
    bool converged = false;
    while (true)
    {
        double const tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(run_value));
        if (run_error <= tol || active.empty())
        {
            // Confirm with an exact recomputation before stopping
            double inner = 0;
            totals(run_value, run_error, inner);
            double const tol2
                = std::max(spec.abs_tol, spec.rel_tol * std::fabs(run_value));
            if (run_error <= tol2 || active.empty())
            {
                converged = true;
                break;
            }
        }
        if (n_intervals >= spec.max_subdivisions)
            break;

        Interval const worst = active.top();
        active.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        Interval const left = apply_rule(f, worst.a, mid);
        Interval const right = apply_rule(f, mid, worst.b);
        run_value += left.value + right.value - worst.value;
        run_error += left.error + right.error - worst.error;
        push(left);
        push(right);
        ++n_intervals;
    }

    double value = 0, error = 0, inner = 0;
    totals(value, error, inner);
    QuadratureResult result;
    result.value = value;
    result.error_estimate = error + std::fabs(inner);
    result.evaluations = evaluations;
    result.subdivisions = n_intervals;
    return {result, converged};
}

[[noreturn]] void throw_no_convergence(char const* who,
                                       QuadratureResult const& r)
{
    std::ostringstream os;
    os << who << ": no convergence after " << r.subdivisions
       << " subintervals (estimate " << r.value << " +- " << r.error_estimate
       << ")";
    throw ConvergenceError(os.str(), r.value, r.error_estimate);
}
}  // namespace

//---------------------------------------------------------------------------//
void QuadratureSpec::validate() const
{
    bool const tol_ok = (rel_tol > 0 || abs_tol > 0) && rel_tol >= 0
                        && abs_tol >= 0 && std::isfinite(rel_tol)
                        && std::isfinite(abs_tol);
    if (!tol_ok)
        detail::throw_domain("QuadratureSpec: need rel_tol > 0 or abs_tol > 0");
    if (max_subdivisions < 1)
        detail::throw_domain("QuadratureSpec: max_subdivisions must be >= 1");
    if (!(singularity_guard >= 0) || !std::isfinite(singularity_guard))
        detail::throw_domain("QuadratureSpec: invalid singularity_guard");
}

//---------------------------------------------------------------------------//
QuadratureResult integrate_interval(Integrand1D const& f, double a, double b,
                                    QuadratureSpec const& spec)
{
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        detail::throw_domain("integrate_interval: need finite a < b");

    auto sample = [&f](double x) { return Sample{f(x), 0}; };
    AdaptiveOutcome const out = adaptive(sample, a, b, spec);
    if (!out.converged)
        throw_no_convergence("integrate_interval", out.result);
    return out.result;
}

//---------------------------------------------------------------------------//
QuadratureResult integrate_sphere(SphereIntegrand const& f,
                                  QuadratureSpec const& spec,
                                  SphereOptions const& options)
{
    spec.validate();

    std::vector<Vec3> flagged;
    for (Vec3 const& d : options.flagged_directions)
    {
        double const n = norm(d);
        if (!(n > 0))
            detail::throw_domain("integrate_sphere: zero flagged direction");
        flagged.push_back((1 / n) * d);
    }
    // Cap of solid angle 2 pi (1 - cos alpha) = singularity_guard
    double const cap_one_minus_cos = spec.singularity_guard / two_pi;
    double max_abs = 0;
    long evaluations = 0;

    auto guarded = [&](UnitDirection const& k) -> double {
        ++evaluations;
        if (!flagged.empty())
        {
            Vec3 const kv = k.vector();
            for (Vec3 const& d : flagged)
            {
                if (1 - dot(kv, d) < cap_one_minus_cos)
                    return 0;
            }
        }
        double const v = f(k);
        max_abs = std::max(max_abs, std::fabs(v));
        return v;
    };

    QuadratureSpec inner_spec = spec;
    inner_spec.rel_tol = spec.rel_tol / 10;
    inner_spec.abs_tol = spec.abs_tol / 20;

    auto polar = [&](double z) -> Sample {
        if (options.azimuth_symmetric)
            return {two_pi * guarded({z, 0}), 0};
        auto azimuthal = [&](double phi) {
            return Sample{guarded({z, phi}), 0};
        };
        AdaptiveOutcome const in = adaptive(azimuthal, 0.0, two_pi, inner_spec);
        if (!in.converged)
            throw_no_convergence("integrate_sphere (azimuthal)", in.result);
        return {in.result.value, in.result.error_estimate};
    };

    AdaptiveOutcome out = adaptive(polar, -1.0, 1.0, spec);
    out.result.evaluations = evaluations;
    out.result.error_estimate += static_cast<double>(flagged.size())
                                 * spec.singularity_guard * max_abs;
    if (!out.converged)
        throw_no_convergence("integrate_sphere", out.result);
    return out.result;
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
