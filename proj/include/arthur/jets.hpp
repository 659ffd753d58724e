#pragma once

// Truncated univariate Laurent series over Real.
//
// A Jet stores  sum_{i < size} c_i t^{v + i} + O(t^{v + size}),  where v is the
// valuation (lowest stored power, possibly negative).  Every limit at lambda = 0
// in the library is computed by restricting to a line t * lambda0 and reading
// off a coefficient of such a series.

#include "arthur/linear_form.hpp"
#include "arthur/real.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arthur {

class Jet {
 public:
  /// The jet O(t^0).
  Jet() = default;
  Jet(int valuation, std::vector<Real> coefficients);

  static Jet constant(const Real& c, int order);
  /// c * t^power, known through t^order.
  static Jet monomial(const Real& c, int power, int order);
  /// The series of exp(rate * t) through t^order.
  static Jet exponential(const Real& rate, int order);

  int valuation() const { return valuation_; }
  /// First power whose coefficient is unknown.
  int truncation_order() const { return valuation_ + static_cast<int>(coeffs_.size()); }
  /// Highest power whose coefficient is known.
  int order() const { return truncation_order() - 1; }
  bool is_analytic() const { return valuation_ >= 0; }
  const std::vector<Real>& coefficients() const { return coeffs_; }

  /// Coefficient of t^power; zero below the valuation, throws at or past truncation.
  Real coefficient(int power) const;
  Real constant_term() const { return coefficient(0); }

  /// Largest |c_p| over stored powers p < bound.
  Real max_abs_below(int bound) const;
  Real max_abs() const;

  Jet truncated(int order) const;
  /// Multiplication by t^k; exact, any sign of k.
  Jet shifted(int k) const;
  /// Drops leading coefficients that are exactly zero.
  Jet normalized() const;

  /// Sum of the stored terms at t = h.
  Real evaluate(const Real& h) const;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Jet& other);
  Jet& operator*=(const Real& c);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator*(Jet a, const Real& c) { return a *= c; }
  friend Jet operator*(const Real& c, Jet a) { return a *= c; }
  friend Jet operator-(Jet a) { return a *= Real(-1); }
  friend Jet operator/(const Jet& a, const Jet& b);

 private:
  int valuation_ = 0;
  std::vector<Real> coeffs_;
};

Jet scale(const Jet& a, const Real& c);
Jet negate(const Jet& a);

/// 1 / a.  The leading stored coefficient must be nonzero.
Jet inverse(const Jet& a);
/// exp(a) for an analytic jet.
Jet exp(const Jet& a);
/// log(a) for an analytic jet with positive constant term.
Jet log(const Jet& a);
/// a^p = exp(p log a) for an analytic jet with positive constant term.
Jet pow(const Jet& a, const Real& p);

/// Raised when a series that must vanish below some order does not.
class CancellationError : public std::runtime_error {
 public:
  CancellationError(const std::string& what, int power, Real residual)
      : std::runtime_error(what), power_(power), residual_(std::move(residual)) {}
  int power() const { return power_; }
  const Real& residual() const { return residual_; }

 private:
  int power_;
  Real residual_;
};

struct MonomialQuotient {
  Jet jet;        ///< analytic result
  Real residual;  ///< largest discarded coefficient
};

/// Divides by t^k and checks that every coefficient landing at a negative power
/// is at most tolerance * scale in absolute value; those are then discarded.
MonomialQuotient divide_by_monomial(const Jet& a, int k, const Real& tolerance, const Real& scale = Real(1));
/// Same as divide_by_monomial with the working default tolerance, returning only the jet.
Jet div_by_monomial(const Jet& a, int k);

/// Jet in t of f(rate * t) given the jet of f in s: coefficient p is scaled by rate^p.
Jet compose_linear(const Jet& base, const Real& rate);
Jet compose_linear(const Jet& base, const Rational& rate);

/// A scalar function known through its Taylor/Laurent jet at s = 0.
using ScalarHandle = std::function<Jet(int order)>;

/// Jet in t of lambda -> f(<lambda, axis>) restricted to lambda = t * direction.
Jet compose_linear(const ScalarHandle& f, const LinearForm& axis, const LinearForm& direction, int order);

}  // namespace arthur
