//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/error.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace softgrav
{
//---------------------------------------------------------------------------//
//! Base class for all errors raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! An argument lies outside the domain of the requested operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! Adaptive quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error
{
  public:
    ConvergenceError(std::string const& what, double best_value,
                     double best_error)
        : Error(what), best_value_(best_value), best_error_(best_error)
    {
    }

    //! Estimate available when the subdivision budget ran out
    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

  private:
    double best_value_;
    double best_error_;
};

namespace detail
{
[[noreturn]] void throw_domain(std::string const& what);
}

//---------------------------------------------------------------------------//
}  // namespace softgrav
