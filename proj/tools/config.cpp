//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/config.cpp
//---------------------------------------------------------------------------//
#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace softgrav_cli
{
namespace
{
//---------------------------------------------------------------------------//
std::vector<std::string> const global_keys
    = {"out", "format", "rel-tol", "abs-tol"};

std::vector<std::string> const sweep_keys
    = {"over", "param", "from", "to", "steps", "param2",
       "from2", "to2", "steps2", "spacing"};

std::map<std::string, std::vector<std::string>> const regimes = {
    {"interference", {"exact", "small-angle", "massless", "massless-small-angle"}},
    {"nu", {"rel", "nonrel"}},
};

bool velocity_command(std::string const& c)
{
    return c == "xi" || c == "xcoeff" || c == "nu" || c == "finite-time";
}

bool has_method(std::string const& command, std::string const& regime)
{
    return command == "emission"
           || (command == "interference"
               && (regime == "exact" || regime == "massless"));
}

std::string default_regime(std::string const& command)
{
    if (command == "interference")
        return "exact";
    if (command == "nu")
        return "rel";
    return {};
}

bool contains(std::vector<std::string> const& v, std::string const& s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

// Every physics key the command can take under some regime or method
std::set<std::string> keys_of_command(std::string const& command)
{
    std::set<std::string> keys;
    std::vector<std::string> regs{""};
    if (auto it = regimes.find(command); it != regimes.end())
        regs = it->second;
    for (auto const& r : regs)
    {
        for (char const* method : {"closed", "quadrature"})
        {
            ParameterSet const ps = parameters_for(command, r, method);
            keys.insert(ps.required.begin(), ps.required.end());
            for (auto const& [k, v] : ps.defaults)
                keys.insert(k);
        }
    }
    if (velocity_command(command))
    {
        keys.insert("G");
        keys.insert("m");
    }
    return keys;
}

int parse_int(std::string const& key, std::string const& text)
{
    int value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
    {
        throw UsageError("malformed integer for '" + key + "': '" + text + "'",
                         key);
    }
    return value;
}

std::string trim(std::string const& s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file '" + path + "'", "config");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
// Name the argument CLI11 rejected: a missing or unknown command, or the
// first flag the selected command does not define
std::string offending_key(CLI::App& app, std::vector<std::string> const& args)
{
    CLI::App* sub = nullptr;
    for (auto const& a : args)
    {
        if (a.rfind("-", 0) == 0)
            continue;
        if (contains(command_names(), a))
            sub = app.get_subcommand(a);
        break;
    }
    if (!sub)
        return "command";
    for (auto const& a : args)
    {
        if (a.rfind("--", 0) != 0 || a == "--help")
            continue;
        std::string const name = a.substr(2, a.find('=') - 2);
        if (!sub->get_option_no_throw("--" + name)
            && !app.get_option_no_throw("--" + name))
        {
            return name;
        }
    }
    return {};
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> const& command_names()
{
    static std::vector<std::string> const names
        = {"dfunc", "emission", "interference", "xi",   "xcoeff",
           "nu",    "ratio",    "finite-time",  "sweep"};
    return names;
}

//---------------------------------------------------------------------------//
ParameterSet parameters_for(std::string const& command,
                            std::string const& regime,
                            std::string const& method)
{
    std::map<std::string, double> const emission_defaults{
        {"G", 1}, {"lambda-ir", 1e-6}, {"lambda-uv", 1}};
    bool const quadrature = method == "quadrature";

    ParameterSet ps;
    if (command == "dfunc")
    {
        ps.required = {"x"};
    }
    else if (command == "emission")
    {
        ps.required = {"Q", "theta"};
        ps.defaults = emission_defaults;
        ps.defaults["m"] = 1;
        ps.defaults["m0sq"] = 1;
        ps.uses_quadrature = quadrature;
    }
    else if (command == "interference")
    {
        ps.defaults = emission_defaults;
        ps.defaults["m1m2-re"] = 1;
        if (regime == "massless-small-angle")
        {
            ps.required = {"Q", "phi"};
        }
        else
        {
            ps.required = {"Q", "theta", "phi"};
            if (regime != "massless")
                ps.defaults["m"] = 1;
            ps.uses_quadrature = quadrature && has_method(command, regime);
        }
    }
    else if (command == "xi")
    {
        ps.required = {"v", "delta", "z", "azimuth"};
        ps.defaults = {{"gm2", 1}};
    }
    else if (command == "xcoeff")
    {
        ps.required = {"v", "delta"};
        ps.defaults = {{"gm2", 1}};
        ps.uses_quadrature = true;
    }
    else if (command == "nu")
    {
        if (regime == "nonrel")
            ps.required = {"v", "delta"};
        else
            ps.required = {"delta", "gamma"};
        ps.defaults = {{"gm2", 1}};
    }
    else if (command == "ratio")
    {
        ps.required = {"t1", "t2", "nu"};
    }
    else if (command == "finite-time")
    {
        ps.required = {"v", "delta"};
        ps.defaults = {{"gm2", 1},
                       {"t", 1},
                       {"lambda-ir", 1e-4},
                       {"lambda-uv", 1e4},
                       {"omega-r", 1}};
        ps.uses_quadrature = true;
    }
    else
    {
        throw UsageError("unknown command '" + command + "'", "command");
    }
    return ps;
}

//---------------------------------------------------------------------------//
std::map<std::string, std::string> parse_key_values(std::string const& text)
{
    std::map<std::string, std::string> result;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos)
        {
            throw UsageError("config line " + std::to_string(lineno)
                             + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
        {
            throw UsageError("config line " + std::to_string(lineno)
                             + ": empty key");
        }
        if (value.empty())
        {
            throw UsageError("config line " + std::to_string(lineno)
                                 + ": empty value for '" + key + "'",
                             key);
        }
        if (result.count(key))
            throw UsageError("config key '" + key + "' given twice", key);
        result[key] = value;
    }
    return result;
}

double parse_number(std::string const& key, std::string const& text)
{
    double value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last
        || !std::isfinite(value))
    {
        throw UsageError("malformed number for '" + key + "': '" + text + "'",
                         key);
    }
    return value;
}

//---------------------------------------------------------------------------//
RunConfig parse_config(std::vector<std::string> const& args,
                       std::optional<std::string> file_text)
{
    CLI::App app{"softgrav: soft graviton emission and decoherence"};
    app.fallthrough();
    app.require_subcommand(1);

    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option*> flag_options;
    std::string config_path;
    std::map<std::string, std::string> const global_help{
        {"out", "write results to PATH instead of stdout"},
        {"format", "json (default) or csv (default for sweep)"},
        {"rel-tol", "relative quadrature tolerance (default 1e-8)"},
        {"abs-tol", "absolute quadrature tolerance (default 0)"},
    };
    for (auto const& key : global_keys)
    {
        flag_options[key] = app.add_option("--" + key, flag_values[key],
                                           global_help.at(key));
    }
    app.add_option("--config", config_path, "key=value config file");

    std::map<std::string, std::string> const command_help{
        {"dfunc", "D(x) and D'(x)"},
        {"emission", "real-emission log coefficient of an elastic event"},
        {"interference", "interference coefficient of two superposed final states"},
        {"xi", "angular density xi at one direction"},
        {"xcoeff", "solid-angle integral X of xi"},
        {"nu", "power-law decay exponent (--regime rel|nonrel)"},
        {"ratio", "interference ratio (t1/t2)^-nu"},
        {"finite-time", "real emission factor at finite time t"},
        {"sweep", "grid over one or two parameters of another command"},
    };
    std::map<std::string, CLI::App*> subs;
    for (auto const& name : command_names())
    {
        CLI::App* sub = app.add_subcommand(name, command_help.at(name));
        subs[name] = sub;
        std::set<std::string> keys;
        if (name == "sweep")
        {
            for (auto const& c : command_names())
            {
                if (c != "sweep")
                {
                    auto const k = keys_of_command(c);
                    keys.insert(k.begin(), k.end());
                }
            }
            keys.insert(sweep_keys.begin(), sweep_keys.end());
            keys.insert("regime");
            keys.insert("method");
        }
        else
        {
            keys = keys_of_command(name);
            if (regimes.count(name))
                keys.insert("regime");
            if (name == "emission" || name == "interference")
                keys.insert("method");
        }
        for (auto const& key : keys)
            sub->add_option("--" + key, flag_values[key]);
    }

    std::vector<char const*> argv{"softgrav"};
    for (auto const& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        throw HelpRequest{app.help()};
    }
    catch (CLI::ParseError const& e)
    {
        throw UsageError(e.what(), offending_key(app, args));
    }

    RunConfig cfg;
    for (auto const& [name, sub] : subs)
    {
        if (sub->parsed())
            cfg.command = name;
    }

    // Flags given on the command line (either level)
    std::map<std::string, std::string> given;
    for (auto const& [name, sub] : subs)
    {
        if (!sub->parsed())
            continue;
        for (CLI::Option const* opt : sub->get_options())
        {
            if (opt->count() > 0 && !opt->get_lnames().empty())
                given[opt->get_lnames().front()] = opt->as<std::string>();
        }
    }
    for (auto const& key : global_keys)
    {
        if (flag_options[key]->count() > 0)
            given[key] = flag_options[key]->as<std::string>();
    }

    if (!file_text && !config_path.empty())
        file_text = read_file(config_path);

    // Merge: file values first, flags override
    std::map<std::string, std::string> merged;
    if (file_text)
        merged = parse_key_values(*file_text);

    {
        std::set<std::string> allowed(global_keys.begin(), global_keys.end());
        for (CLI::Option const* opt : subs[cfg.command]->get_options())
        {
            if (!opt->get_lnames().empty())
                allowed.insert(opt->get_lnames().front());
        }
        allowed.erase("help");
        for (auto const& [key, value] : merged)
        {
            if (!allowed.count(key))
            {
                throw UsageError("unknown config key '" + key + "' for command '"
                                     + cfg.command + "'",
                                 key);
            }
        }
    }
    for (auto const& [key, value] : given)
        merged[key] = value;

    auto take = [&merged](std::string const& key) -> std::optional<std::string> {
        auto it = merged.find(key);
        if (it == merged.end())
            return std::nullopt;
        std::string v = it->second;
        merged.erase(it);
        return v;
    };

    // Globals
    if (auto v = take("rel-tol"))
        cfg.rel_tol = parse_number("rel-tol", *v);
    if (auto v = take("abs-tol"))
        cfg.abs_tol = parse_number("abs-tol", *v);
    if (cfg.rel_tol < 0 || cfg.abs_tol < 0 || (cfg.rel_tol == 0 && cfg.abs_tol == 0))
        throw UsageError("need rel-tol > 0 or abs-tol > 0", "rel-tol");
    cfg.out = take("out").value_or("");
    cfg.format = take("format").value_or(cfg.command == "sweep" ? "csv" : "json");
    if (cfg.format != "json" && cfg.format != "csv")
        throw UsageError("format must be json or csv", "format");

    // Sweep grid
    if (cfg.command == "sweep")
    {
        auto over = take("over");
        if (!over)
            throw UsageError("sweep needs --over COMMAND", "over");
        if (*over == "sweep" || !contains(command_names(), *over))
            throw UsageError("cannot sweep over '" + *over + "'", "over");
        cfg.sweep_over = *over;
        cfg.spacing = take("spacing").value_or("lin");
        if (cfg.spacing != "lin" && cfg.spacing != "log")
            throw UsageError("spacing must be lin or log", "spacing");
        for (std::string suffix : {"", "2"})
        {
            auto param = take("param" + suffix);
            auto from = take("from" + suffix);
            auto to = take("to" + suffix);
            auto steps = take("steps" + suffix);
            if (!param)
            {
                if (suffix.empty())
                    throw UsageError("sweep needs --param", "param");
                for (auto const* extra : {&from, &to, &steps})
                {
                    if (*extra)
                        throw UsageError("grid bounds for param2 given without "
                                         "--param2",
                                         "param2");
                }
                continue;
            }
            SweepAxis axis;
            axis.param = *param;
            if (!from || !to || !steps)
            {
                throw UsageError("sweep axis '" + *param
                                     + "' needs from, to and steps",
                                 "param" + suffix);
            }
            axis.from = parse_number("from" + suffix, *from);
            axis.to = parse_number("to" + suffix, *to);
            axis.steps = parse_int("steps" + suffix, *steps);
            if (axis.steps < 1)
                throw UsageError("steps must be >= 1", "steps" + suffix);
            if (cfg.spacing == "log" && !(axis.from > 0 && axis.to > 0))
            {
                throw UsageError("log spacing needs positive bounds",
                                 "from" + suffix);
            }
            cfg.axes.push_back(axis);
        }
        if (cfg.axes.size() == 2 && cfg.axes[0].param == cfg.axes[1].param)
            throw UsageError("param and param2 must differ", "param2");
    }

    std::string const& target = cfg.target();

    // Regime and method
    if (auto r = take("regime"))
    {
        auto it = regimes.find(target);
        if (it == regimes.end())
        {
            throw UsageError("command '" + target + "' takes no regime",
                             "regime");
        }
        if (!contains(it->second, *r))
            throw UsageError("unknown regime '" + *r + "' for " + target,
                             "regime");
        cfg.regime = *r;
    }
    else
    {
        cfg.regime = default_regime(target);
    }
    if (auto m = take("method"))
    {
        if (!has_method(target, cfg.regime))
        {
            throw UsageError("method does not apply to " + target
                                 + (cfg.regime.empty() ? "" : " " + cfg.regime),
                             "method");
        }
        if (*m != "closed" && *m != "quadrature")
            throw UsageError("method must be closed or quadrature", "method");
        cfg.method = *m;
    }
    else if (has_method(target, cfg.regime))
    {
        cfg.method = "closed";
    }

    // Physics parameters
    ParameterSet const ps = parameters_for(target, cfg.regime, cfg.method);
    std::map<std::string, double> given_params;
    for (auto const& [key, text] : merged)
        given_params[key] = parse_number(key, text);

    bool const velocity = velocity_command(target);
    if (velocity && (given_params.count("G") || given_params.count("m")))
    {
        if (given_params.count("gm2"))
            throw UsageError("give either gm2 or G and m", "gm2");
        double const g = given_params.count("G") ? given_params["G"] : 1;
        double const m = given_params.count("m") ? given_params["m"] : 1;
        given_params.erase("G");
        given_params.erase("m");
        given_params["gm2"] = g * m * m;
    }

    std::set<std::string> swept;
    for (auto const& axis : cfg.axes)
    {
        if (velocity && (axis.param == "G" || axis.param == "m"))
        {
            throw UsageError("sweep gm2 instead of G or m for " + target,
                             axis.param);
        }
        if (!contains(ps.required, axis.param) && !ps.defaults.count(axis.param))
        {
            throw UsageError("cannot sweep '" + axis.param + "': not a "
                                 "parameter of " + target,
                             axis.param);
        }
        if (given_params.count(axis.param))
        {
            throw UsageError("'" + axis.param + "' is both swept and fixed",
                             axis.param);
        }
        swept.insert(axis.param);
    }

    for (auto const& [key, value] : given_params)
    {
        if (!contains(ps.required, key) && !ps.defaults.count(key))
        {
            std::string what = "parameter '" + key + "' does not apply to "
                               + target;
            if (!cfg.regime.empty())
                what += " (regime " + cfg.regime + ")";
            throw UsageError(what, key);
        }
    }
    for (auto const& key : ps.required)
    {
        if (!given_params.count(key) && !swept.count(key))
            throw UsageError("missing parameter '" + key + "'", key);
    }
    cfg.params = ps.defaults;
    for (auto const& [key, value] : given_params)
        cfg.params[key] = value;
    for (auto const& key : swept)
        cfg.params.erase(key);

    if (!swept.count("lambda-ir") && !swept.count("lambda-uv")
        && cfg.params.count("lambda-ir") && cfg.params.count("lambda-uv")
        && !(cfg.params["lambda-ir"] < cfg.params["lambda-uv"]))
    {
        throw UsageError("need lambda-ir < lambda-uv", "lambda-ir");
    }
    return cfg;
}

//---------------------------------------------------------------------------//
}  // namespace softgrav_cli
