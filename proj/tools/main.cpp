//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file main.cpp
//---------------------------------------------------------------------------//
#include <exception>
#include <iostream>

#include "trigzero/cli.hpp"

int main(int argc, char* argv[])
{
    try
    {
        return trigzero::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    }
    catch (std::exception const& e)
    {
        std::cerr << "trigzero: " << e.what() << '\n';
        return 1;
    }
}
