//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/cli.hpp
//! Command-line front end.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigzero::cli
{
enum ExitCode : int
{
    exit_success = 0,
    exit_usage = 2,
    exit_numeric = 3,
    exit_io = 4,
};

/*!
 * Run one command.
 *
 * \c args excludes the program name. Subcommands: simulate, rice,
 * chaos-var, clt, oracle-check, bounds-check. JSON goes to \c out,
 * diagnostics to \c err.
 */
int run(std::vector<std::string> const& args,
        std::ostream& out,
        std::ostream& err);

// Worker count from TRIGZERO_THREADS (unset or 0 = OpenMP default)
int threads_from_env();

std::string version();

}  // namespace trigzero::cli
