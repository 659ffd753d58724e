#pragma once

// Small dense linear algebra over the rationals.  Sizes here are at most a few
// dozen, so plain Gaussian elimination with exact pivots is all we need.

#include "arthur/real.hpp"

#include <vector>

namespace arthur {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);
/// Throws std::domain_error when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace arthur
