//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace trigzero
{
//! Caller violated a precondition (bad order, bad flag, too few samples).
class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! A numerical procedure failed to converge or hit an ill-posed input.
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Variance or Gram matrix is degenerate beyond the allowed jitter.
class DegeneracyError : public NumericError
{
  public:
    using NumericError::NumericError;
};

//! Filesystem or stream failure.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace trigzero
