//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/runner.cpp
//---------------------------------------------------------------------------//
#include "runner.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "softgrav/softgrav.h"

namespace softgrav_cli
{
namespace
{
//---------------------------------------------------------------------------//
char const* status_name(sg_status s)
{
    switch (s)
    {
        case SG_OK:
            return "ok";
        case SG_ERR_NULL_ARGUMENT:
            return "null_argument";
        case SG_ERR_DOMAIN:
            return "domain_error";
        case SG_ERR_NO_CONVERGENCE:
            return "no_convergence";
        case SG_ERR_INTERNAL:
            break;
    }
    return "internal_error";
}

struct KinematicsDeleter
{
    void operator()(sg_kinematics* k) const { sg_kinematics_destroy(k); }
};
struct PairDeleter
{
    void operator()(sg_pair* p) const { sg_pair_destroy(p); }
};
using KinematicsPtr = std::unique_ptr<sg_kinematics, KinematicsDeleter>;
using PairPtr = std::unique_ptr<sg_pair, PairDeleter>;

//! Accumulates outputs; the first failing call fixes the status
class Evaluation
{
  public:
    Record outputs = Record::object();

    bool check(sg_status s)
    {
        if (s != SG_OK && status_ == SG_OK)
        {
            status_ = s;
            error_ = sg_last_error();
        }
        return s == SG_OK;
    }
    bool ok() const { return status_ == SG_OK; }
    sg_status status() const { return status_; }
    std::string const& error() const { return error_; }

    void coefficient(sg_coefficient const& c)
    {
        outputs["value"] = c.total;
        outputs["bracket"] = c.bracket_value;
        outputs["prefactor"] = c.prefactor;
        outputs["log_factor"] = c.log_factor;
        outputs["convention_tag"] = c.convention_tag;
    }
    void quad(sg_quad_result const& r)
    {
        outputs["value"] = r.value;
        outputs["error_estimate"] = r.error_estimate;
    }

  private:
    sg_status status_{SG_OK};
    std::string error_;
};

double param(std::map<std::string, double> const& p, char const* key)
{
    return p.at(key);
}

sg_emission_spec emission_spec(std::map<std::string, double> const& p)
{
    sg_emission_spec s = sg_emission_spec_default();
    s.lambda_ir = param(p, "lambda-ir");
    s.lambda_uv = param(p, "lambda-uv");
    s.newton_g = param(p, "G");
    if (auto it = p.find("m0sq"); it != p.end())
        s.m0_squared = it->second;
    return s;
}

void run_coefficient_quadrature(Evaluation& ev, sg_status s,
                                sg_coefficient const& c, double bracket_err)
{
    if (s == SG_OK || s == SG_ERR_NO_CONVERGENCE)
    {
        ev.coefficient(c);
        ev.outputs["error_estimate"]
            = std::fabs(c.prefactor * c.log_factor) * bracket_err;
        ev.outputs["bracket_error"] = bracket_err;
    }
    ev.check(s);
}

void evaluate_emission(Evaluation& ev, RunConfig const& cfg,
                       std::map<std::string, double> const& p,
                       sg_quad_spec const& quad)
{
    sg_kinematics* raw = nullptr;
    if (!ev.check(sg_kinematics_create(param(p, "m"), param(p, "Q"),
                                       param(p, "theta"), &raw)))
    {
        return;
    }
    KinematicsPtr kin(raw);
    sg_emission_spec const spec = emission_spec(p);
    sg_coefficient c{};
    if (cfg.method == "quadrature")
    {
        double err = 0;
        sg_status const s = sg_emission_log_coefficient_quadrature(
            kin.get(), &spec, &quad, &c, &err);
        run_coefficient_quadrature(ev, s, c, err);
    }
    else if (ev.check(sg_emission_log_coefficient(kin.get(), &spec, &c)))
    {
        ev.coefficient(c);
    }
}

void evaluate_interference(Evaluation& ev, RunConfig const& cfg,
                           std::map<std::string, double> const& p,
                           sg_quad_spec const& quad)
{
    sg_emission_spec const spec = emission_spec(p);
    double const re = param(p, "m1m2-re");
    sg_coefficient c{};
    if (cfg.regime == "massless-small-angle")
    {
        if (ev.check(sg_interference_coefficient_massless_small_angle(
                param(p, "Q"), param(p, "phi"), &spec, re, &c)))
        {
            ev.coefficient(c);
        }
        return;
    }

    bool const massless = cfg.regime == "massless";
    double const mass = massless ? 0.0 : param(p, "m");
    sg_kinematics* raw_kin = nullptr;
    if (!ev.check(sg_kinematics_create(mass, param(p, "Q"), param(p, "theta"),
                                       &raw_kin)))
    {
        return;
    }
    KinematicsPtr kin(raw_kin);

    if (cfg.regime == "small-angle")
    {
        if (ev.check(sg_interference_coefficient_small_angle(
                kin.get(), param(p, "phi"), &spec, re, &c)))
        {
            ev.coefficient(c);
        }
        return;
    }

    sg_pair* raw_pair = nullptr;
    if (!ev.check(sg_pair_create(kin.get(), param(p, "phi"), &raw_pair)))
        return;
    PairPtr pair(raw_pair);

    if (cfg.method == "quadrature")
    {
        double err = 0;
        sg_status const s = sg_interference_coefficient_quadrature(
            pair.get(), &spec, &quad, re, &c, &err);
        run_coefficient_quadrature(ev, s, c, err);
        return;
    }
    sg_status s;
    if (massless)
    {
        sg_kinematics_info info{};
        if (!ev.check(sg_kinematics_info_get(kin.get(), &info)))
            return;
        s = sg_interference_coefficient_massless(pair.get(), info.s, &spec, re,
                                                 &c);
    }
    else
    {
        s = sg_interference_coefficient(pair.get(), &spec, re, &c);
    }
    if (ev.check(s))
        ev.coefficient(c);
}

bool make_branches(Evaluation& ev, std::map<std::string, double> const& p,
                   sg_branch_velocities* out)
{
    return ev.check(
        sg_branch_velocities_make(param(p, "v"), param(p, "delta"), out));
}

void evaluate_velocity(Evaluation& ev, RunConfig const& cfg,
                       std::map<std::string, double> const& p,
                       sg_quad_spec const& quad)
{
    std::string const& command = cfg.target();
    double const gm2 = param(p, "gm2");
    double value = 0;
    if (command == "nu")
    {
        sg_status s;
        if (cfg.regime == "nonrel")
        {
            s = sg_nu_nonrelativistic(gm2, param(p, "v"), param(p, "delta"),
                                      &value);
        }
        else
        {
            double const gamma = param(p, "gamma");
            s = sg_nu_relativistic(gm2 * gamma * gamma, param(p, "delta"),
                                   gamma, &value);
        }
        if (ev.check(s))
            ev.outputs["value"] = value;
        return;
    }

    sg_branch_velocities bv{};
    if (!make_branches(ev, p, &bv))
        return;
    if (command == "xi")
    {
        sg_direction const k{param(p, "z"), param(p, "azimuth")};
        if (ev.check(sg_xi_density(&bv, gm2, 1.0, k, &value)))
            ev.outputs["value"] = value;
        return;
    }
    sg_quad_result r{};
    if (command == "xcoeff")
    {
        sg_status const s = sg_x_coefficient(&bv, gm2, 1.0, &quad, &r);
        if (s == SG_OK || s == SG_ERR_NO_CONVERGENCE)
            ev.quad(r);
        ev.check(s);
        if (ev.ok() && bv.opening_angle == 0 && bv.speed > 0
            && ev.check(sg_x0_closed_form(bv.speed, bv.gamma, gm2, 1.0, &value)))
        {
            ev.outputs["closed_form"] = value;
        }
        return;
    }
    // finite-time
    sg_finite_time_spec fs = sg_finite_time_spec_default();
    fs.time = param(p, "t");
    fs.ir_cutoff = param(p, "lambda-ir");
    fs.uv_cutoff = param(p, "lambda-uv");
    fs.reference_frequency = param(p, "omega-r");
    sg_status const s
        = sg_finite_time_real_factor(&bv, gm2, 1.0, &fs, &quad, &r);
    if (s == SG_OK || s == SG_ERR_NO_CONVERGENCE)
    {
        ev.quad(r);
        ev.outputs["log_reference_time"]
            = std::log(fs.reference_frequency * fs.time);
    }
    ev.check(s);
}

//---------------------------------------------------------------------------//
void csv_field(std::ostream& os, std::string const& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
    {
        os << s;
        return;
    }
    os << '"';
    for (char c : s)
    {
        if (c == '"')
            os << '"';
        os << c;
    }
    os << '"';
}

std::string cell(Record const& j)
{
    if (j.is_null())
        return {};
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_float())
        return format_number(j.get<double>());
    return j.dump();
}
}  // namespace

//---------------------------------------------------------------------------//
std::string format_number(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, ptr);
}

//---------------------------------------------------------------------------//
Record evaluate(RunConfig const& cfg, std::map<std::string, double> const& params)
{
    std::string const& command = cfg.target();
    ParameterSet const ps = parameters_for(command, cfg.regime, cfg.method);

    sg_quad_spec quad = sg_quad_spec_default();
    quad.rel_tol = cfg.rel_tol;
    quad.abs_tol = cfg.abs_tol;

    Record inputs = Record::object();
    if (!cfg.regime.empty())
        inputs["regime"] = cfg.regime;
    if (!cfg.method.empty())
        inputs["method"] = cfg.method;
    for (auto const& [key, value] : params)
        inputs[key] = value;
    if (ps.uses_quadrature)
    {
        inputs["rel_tol"] = cfg.rel_tol;
        inputs["abs_tol"] = cfg.abs_tol;
    }

    Evaluation ev;
    if (command == "dfunc")
    {
        double d = 0, dd = 0;
        double const x = params.at("x");
        if (ev.check(sg_d_weinberg(x, &d)) && ev.check(sg_d_weinberg_deriv(x, &dd)))
        {
            ev.outputs["value"] = d;
            ev.outputs["derivative"] = dd;
        }
    }
    else if (command == "emission")
    {
        evaluate_emission(ev, cfg, params, quad);
    }
    else if (command == "interference")
    {
        evaluate_interference(ev, cfg, params, quad);
    }
    else if (command == "ratio")
    {
        double value = 0;
        if (ev.check(sg_interference_ratio(params.at("t1"), params.at("t2"),
                                           params.at("nu"), &value)))
        {
            ev.outputs["value"] = value;
        }
    }
    else
    {
        evaluate_velocity(ev, cfg, params, quad);
    }

    Record rec = Record::object();
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    rec["outputs"] = std::move(ev.outputs);
    rec["status"] = status_name(ev.status());
    if (!ev.ok())
        rec["error"] = ev.error();
    rec["version"] = sg_version();
    return rec;
}

//---------------------------------------------------------------------------//
std::vector<double> axis_values(SweepAxis const& axis, std::string const& spacing)
{
    std::vector<double> values(axis.steps);
    int const n = axis.steps;
    for (int i = 0; i < n; ++i)
    {
        if (n == 1)
        {
            values[i] = axis.from;
            continue;
        }
        double const frac = static_cast<double>(i) / (n - 1);
        if (spacing == "log")
        {
            double const la = std::log(axis.from);
            double const lb = std::log(axis.to);
            values[i] = std::exp(la + (lb - la) * frac);
        }
        else
        {
            values[i] = axis.from + (axis.to - axis.from) * frac;
        }
    }
    if (n > 1)
    {
        values.front() = axis.from;
        values.back() = axis.to;
    }
    return values;
}

RunOutcome run(RunConfig const& cfg)
{
    RunOutcome outcome;
    auto add = [&outcome](Record rec) {
        if (rec["status"] != "ok")
            outcome.all_ok = false;
        outcome.records.push_back(std::move(rec));
    };

    if (cfg.command != "sweep")
    {
        add(evaluate(cfg, cfg.params));
        return outcome;
    }

    for (auto const& axis : cfg.axes)
        outcome.swept.push_back(axis.param);
    std::vector<double> const first = axis_values(cfg.axes[0], cfg.spacing);
    std::vector<double> second{0.0};
    if (cfg.axes.size() > 1)
        second = axis_values(cfg.axes[1], cfg.spacing);

    for (double a : first)
    {
        for (double b : second)
        {
            std::map<std::string, double> point = cfg.params;
            point[cfg.axes[0].param] = a;
            if (cfg.axes.size() > 1)
                point[cfg.axes[1].param] = b;
            add(evaluate(cfg, point));
        }
    }
    return outcome;
}

//---------------------------------------------------------------------------//
void write_json(RunOutcome const& outcome, std::ostream& os)
{
    for (Record const& rec : outcome.records)
        os << rec.dump() << '\n';
}

void write_csv(RunOutcome const& outcome, std::ostream& os)
{
    std::vector<std::string> lead = outcome.swept;
    if (lead.empty() && !outcome.records.empty())
    {
        for (auto const& [key, value] : outcome.records.front()["inputs"].items())
            lead.push_back(key);
    }
    std::vector<std::string> const tail
        = {"value", "error_estimate", "convention_tag"};

    bool first = true;
    auto sep = [&]() {
        if (!first)
            os << ',';
        first = false;
    };
    for (auto const& h : lead)
    {
        sep();
        csv_field(os, h);
    }
    for (auto const& h : tail)
    {
        sep();
        csv_field(os, h);
    }
    sep();
    os << "status\r\n";

    for (Record const& rec : outcome.records)
    {
        first = true;
        Record const& in = rec["inputs"];
        Record const& out = rec["outputs"];
        for (auto const& h : lead)
        {
            sep();
            csv_field(os, in.contains(h) ? cell(in[h]) : std::string{});
        }
        for (auto const& h : tail)
        {
            sep();
            csv_field(os, out.contains(h) ? cell(out[h]) : std::string{});
        }
        sep();
        csv_field(os, rec["status"].get<std::string>());
        os << "\r\n";
    }
}

//---------------------------------------------------------------------------//
int run_main(std::vector<std::string> const& args, std::ostream& out,
             std::ostream& err)
{
    RunConfig cfg;
    try
    {
        cfg = parse_config(args);
    }
    catch (HelpRequest const& h)
    {
        out << h.text;
        return 0;
    }
    catch (UsageError const& e)
    {
        Record rec = Record::object();
        rec["status"] = "usage_error";
        rec["key"] = e.key();
        rec["error"] = e.what();
        rec["version"] = sg_version();
        err << rec.dump() << '\n';
        return 2;
    }

    RunOutcome const outcome = run(cfg);
    std::ostringstream text;
    if (cfg.format == "csv")
        write_csv(outcome, text);
    else
        write_json(outcome, text);

    if (cfg.out.empty())
    {
        out << text.str();
    }
    else
    {
        std::ofstream file(cfg.out, std::ios::binary);
        file << text.str();
        if (!file)
        {
            err << "error: cannot write '" << cfg.out << "'\n";
            return 1;
        }
    }
    return outcome.all_ok ? 0 : 1;
}

//---------------------------------------------------------------------------//
}  // namespace softgrav_cli
