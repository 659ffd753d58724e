#pragma once

// Arbitrary precision scalars used throughout the library.
//
// Real is an MPFR float whose precision is chosen at run time.  A value keeps
// the precision it was created with; arithmetic produces the larger of the two
// operand precisions.  New values take the process-wide working precision,
// which is set through PrecisionScope.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace arthur {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Requested working precision in bits (the MPFR mantissa may be a few bits wider).
unsigned working_precision();

/// Sets the working precision for the lifetime of the scope and restores the
/// previous value on exit.  The setting is process-wide: do not open scopes
/// with different precisions from concurrently running threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// 2^{-bits/2}: the default threshold below which a coefficient counts as zero.
Real default_tolerance();
Real pow2(long exponent);

Real to_real(const Rational& q);
Real to_real(const Integer& z);
Real to_real(long v);

/// Parses a decimal or fraction literal ("2", "-0.25", "3/7", "1e-3") exactly.
Rational parse_rational(const std::string& text);

Real const_pi();
Real const_euler();
Real const_log2();

/// Decimal scientific notation with every significant digit the precision supports.
std::string to_decimal(const Real& x);
std::string to_decimal(const Real& x, unsigned digits);
std::string to_string(const Rational& q);

/// |a - b| / max(|a|, |b|), or |a - b| when both are zero.
Real relative_difference(const Real& a, const Real& b);

}  // namespace arthur
