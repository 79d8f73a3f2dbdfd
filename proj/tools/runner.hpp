//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/runner.hpp
//! Evaluation and output of run configurations.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace softgrav_cli
{
//---------------------------------------------------------------------------//
using Record = nlohmann::ordered_json;

struct RunOutcome
{
    //! One record per evaluation, in grid order for sweeps
    std::vector<Record> records;
    //! Names of swept parameters (CSV leading columns)
    std::vector<std::string> swept;
    bool all_ok{true};
};

//! Evaluate one parameter point of a non-sweep command
Record evaluate(RunConfig const& cfg, std::map<std::string, double> const& params);

//! Evaluate every point of the configuration
RunOutcome run(RunConfig const& cfg);

//! Grid values of one sweep axis
std::vector<double> axis_values(SweepAxis const& axis, std::string const& spacing);

//! One JSON object per line
void write_json(RunOutcome const& outcome, std::ostream& os);

/*!
 * RFC 4180 CSV: swept parameters (or all inputs for a single evaluation),
 * then value, error_estimate, convention_tag, status.
 */
void write_csv(RunOutcome const& outcome, std::ostream& os);

//! Shortest decimal string that parses back to the same double
std::string format_number(double x);

/*!
 * Full command-line entry point. Returns 0 when every evaluation
 * succeeded, 1 when any evaluation failed and 2 on usage errors.
 */
int run_main(std::vector<std::string> const& args, std::ostream& out,
             std::ostream& err);

//---------------------------------------------------------------------------//
}  // namespace softgrav_cli
