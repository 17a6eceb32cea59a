#pragma once

#include <cstdint>

#include "mroot/quotient.hpp"
#include "mroot/roots.hpp"
#include "mroot/system.hpp"

namespace mroot {

// Builds the quotient structure for the system's mode and extracts its
// roots.
RootSet solve(const PolynomialSystem& system, const BuildOptions& options = {});

// Dense system of n polynomials of degree d in n variables with every
// monomial of degree <= d present and real N(0, 1) coefficients.
PolynomialSystem generate_dense_system(int n, int d, std::uint64_t seed);

// Entries of the dense Macaulay matrix for n equations of degree d
// (rows * columns), without building it.
std::int64_t dense_macaulay_entries(int n, int d);

}  // namespace mroot
