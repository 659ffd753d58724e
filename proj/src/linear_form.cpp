#include "arthur/linear_form.hpp"

#include <stdexcept>

namespace arthur {

bool LinearForm::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Rational LinearForm::sum() const {
  Rational s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (other.size() != size()) throw std::invalid_argument("LinearForm: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  if (other.size() != size()) throw std::invalid_argument("LinearForm: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

Rational pairing(const LinearForm& a, const LinearForm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace arthur
