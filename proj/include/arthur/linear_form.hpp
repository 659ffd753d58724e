#pragma once

#include "arthur/real.hpp"

#include <initializer_list>
#include <vector>

namespace arthur {

/// An exact vector of R^n, read both as a point of a_T and as a linear form on
/// it through the standard inner product.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::size_t n) : coords_(n) {}
  explicit LinearForm(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  LinearForm(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  Rational sum() const;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& c);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// The Euclidean pairing <a, b>.
Rational pairing(const LinearForm& a, const LinearForm& b);

}  // namespace arthur
