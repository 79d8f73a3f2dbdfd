//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/main.cpp
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "runner.hpp"

int main(int argc, char* argv[])
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return softgrav_cli::run_main(args, std::cout, std::cerr);
}
