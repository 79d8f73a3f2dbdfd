//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/config.hpp
//! Run configuration for the softgrav command-line tool.
//---------------------------------------------------------------------------//
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace softgrav_cli
{
//---------------------------------------------------------------------------//
//! Bad command line or config file; key() names the offending key if any
class UsageError : public std::runtime_error
{
  public:
    UsageError(std::string const& what, std::string key = {})
        : std::runtime_error(what), key_(std::move(key))
    {
    }
    std::string const& key() const { return key_; }

  private:
    std::string key_;
};

//! --help was given; text is the usage message
struct HelpRequest
{
    std::string text;
};

struct SweepAxis
{
    std::string param;
    double from{0};
    double to{0};
    int steps{0};
};

/*!
 * Fully resolved run request.
 *
 * params holds every physics parameter of the command, including defaults,
 * so that output records echo all inputs. String-valued choices (regime,
 * method) are kept separately.
 */
struct RunConfig
{
    std::string command;
    std::string regime;
    std::string method;
    std::map<std::string, double> params;

    double rel_tol{1e-8};
    double abs_tol{0};
    std::string format;
    std::string out;

    // sweep only: the swept command and its grid
    std::string sweep_over;
    std::vector<SweepAxis> axes;
    std::string spacing{"lin"};

    //! Command that is actually evaluated (sweep_over for sweeps)
    std::string const& target() const
    {
        return command == "sweep" ? sweep_over : command;
    }
};

//! Commands accepted on the command line
std::vector<std::string> const& command_names();

/*!
 * Parse argv (without the program name) and optional config file text.
 *
 * When file_text is empty and --config is given, the named file is read.
 * Command-line flags override file values.
 */
RunConfig parse_config(std::vector<std::string> const& args,
                       std::optional<std::string> file_text = {});

//! key=value lines with # comments; throws UsageError on malformed lines
std::map<std::string, std::string> parse_key_values(std::string const& text);

//! Strict decimal parse of a finite double; throws UsageError naming key
double parse_number(std::string const& key, std::string const& text);

//! Physics parameter names and defaults for a command and regime
struct ParameterSet
{
    std::vector<std::string> required;
    std::map<std::string, double> defaults;
    bool uses_quadrature{false};
};
ParameterSet parameters_for(std::string const& command,
                            std::string const& regime,
                            std::string const& method);

//---------------------------------------------------------------------------//
}  // namespace softgrav_cli
