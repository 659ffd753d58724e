#include "arthur/jets.hpp"

#include <algorithm>
#include <sstream>

namespace arthur {

Jet::Jet(int valuation, std::vector<Real> coefficients)
    : valuation_(valuation), coeffs_(std::move(coefficients)) {}

Jet Jet::constant(const Real& c, int order) { return monomial(c, 0, order); }

Jet Jet::monomial(const Real& c, int power, int order) {
  if (order < power) return Jet(power, {});
  std::vector<Real> coeffs(static_cast<std::size_t>(order - power + 1), Real(0));
  coeffs[0] = c;
  return Jet(power, std::move(coeffs));
}

Jet Jet::exponential(const Real& rate, int order) {
  std::vector<Real> coeffs;
  if (order < 0) return Jet(0, {});
  coeffs.reserve(order + 1);
  Real term = 1;
  for (int k = 0; k <= order; ++k) {
    coeffs.push_back(term);
    term = term * rate / (k + 1);
  }
  return Jet(0, std::move(coeffs));
}

Real Jet::coefficient(int power) const {
  if (power >= truncation_order()) {
    std::ostringstream msg;
    msg << "Jet: coefficient of t^" << power << " requested but only known through t^" << order();
    throw std::out_of_range(msg.str());
  }
  if (power < valuation_) return Real(0);
  return coeffs_[static_cast<std::size_t>(power - valuation_)];
}

Real Jet::max_abs_below(int bound) const {
  Real m = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (valuation_ + static_cast<int>(i) >= bound) break;
    m = std::max(m, Real(abs(coeffs_[i])));
  }
  return m;
}

Real Jet::max_abs() const { return max_abs_below(truncation_order()); }

Jet Jet::truncated(int order) const {
  if (order >= this->order()) return *this;
  if (order < valuation_) return Jet(order + 1, {});
  return Jet(valuation_, std::vector<Real>(coeffs_.begin(), coeffs_.begin() + (order - valuation_ + 1)));
}

Jet Jet::shifted(int k) const { return Jet(valuation_ + k, coeffs_); }

Jet Jet::normalized() const {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  return Jet(valuation_ + static_cast<int>(skip), std::vector<Real>(coeffs_.begin() + skip, coeffs_.end()));
}

Real Jet::evaluate(const Real& h) const {
  Real sum = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) sum = sum * h + coeffs_[i];
  if (valuation_ != 0) {
    Real factor = pow(h, valuation_);
    sum *= factor;
  }
  return sum;
}

Jet& Jet::operator+=(const Jet& other) {
  const int v = std::min(valuation_, other.valuation_);
  const int t = std::min(truncation_order(), other.truncation_order());
  std::vector<Real> out(static_cast<std::size_t>(std::max(0, t - v)), Real(0));
  for (int p = v; p < t; ++p) {
    Real c = 0;
    if (p >= valuation_) c += coeffs_[p - valuation_];
    if (p >= other.valuation_) c += other.coeffs_[p - other.valuation_];
    out[p - v] = c;
  }
  valuation_ = v;
  coeffs_ = std::move(out);
  return *this;
}

Jet& Jet::operator-=(const Jet& other) { return *this += -other; }

Jet& Jet::operator*=(const Jet& other) {
  const int v = valuation_ + other.valuation_;
  const int t = std::min(truncation_order() + other.valuation_, other.truncation_order() + valuation_);
  const int len = std::max(0, t - v);
  std::vector<Real> out(static_cast<std::size_t>(len), Real(0));
  for (int i = 0; i < static_cast<int>(coeffs_.size()) && i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < static_cast<int>(other.coeffs_.size()) && i + j < len; ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  valuation_ = v;
  coeffs_ = std::move(out);
  return *this;
}

Jet& Jet::operator*=(const Real& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

Jet scale(const Jet& a, const Real& c) { return a * c; }
Jet negate(const Jet& a) { return -a; }

Jet inverse(const Jet& a) {
  Jet b = a.normalized();
  const auto& c = b.coefficients();
  if (c.empty()) throw std::domain_error("inverse: jet has no known nonzero coefficient");
  const std::size_t len = c.size();
  std::vector<Real> out(len, Real(0));
  Real lead_inv = 1 / c[0];
  out[0] = lead_inv;
  for (std::size_t k = 1; k < len; ++k) {
    Real s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += c[j] * out[k - j];
    out[k] = -s * lead_inv;
  }
  return Jet(-b.valuation(), std::move(out));
}

namespace {

// Coefficients c_0..c_{order} of an analytic jet, padding with zeros below the valuation.
std::vector<Real> analytic_coefficients(const Jet& a, const char* op) {
  for (int p = a.valuation(); p < 0 && p < a.truncation_order(); ++p)
    if (a.coefficient(p) != 0) throw std::domain_error(std::string(op) + ": jet has a pole");
  std::vector<Real> c(static_cast<std::size_t>(std::max(0, a.truncation_order())), Real(0));
  for (int p = std::max(0, a.valuation()); p < a.truncation_order(); ++p) c[p] = a.coefficient(p);
  return c;
}

}  // namespace

Jet exp(const Jet& a) {
  auto c = analytic_coefficients(a, "exp");
  if (c.empty()) return Jet(0, {});
  const std::size_t len = c.size();
  std::vector<Real> out(len, Real(0));
  out[0] = exp(c[0]);
  for (std::size_t k = 1; k < len; ++k) {
    Real s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += Real(static_cast<long>(j)) * c[j] * out[k - j];
    out[k] = s / static_cast<long>(k);
  }
  return Jet(0, std::move(out));
}

Jet log(const Jet& a) {
  auto c = analytic_coefficients(a, "log");
  if (c.empty()) return Jet(0, {});
  if (c[0] <= 0) throw std::domain_error("log: constant term must be positive");
  const std::size_t len = c.size();
  std::vector<Real> out(len, Real(0));
  out[0] = log(c[0]);
  for (std::size_t k = 1; k < len; ++k) {
    Real s = 0;
    for (std::size_t j = 1; j < k; ++j) s += Real(static_cast<long>(j)) * out[j] * c[k - j];
    out[k] = (c[k] - s / static_cast<long>(k)) / c[0];
  }
  return Jet(0, std::move(out));
}

Jet pow(const Jet& a, const Real& p) { return exp(log(a) * p); }

MonomialQuotient divide_by_monomial(const Jet& a, int k, const Real& tolerance, const Real& scale) {
  if (k < 1) throw std::invalid_argument("divide_by_monomial: k must be at least 1");
  Jet shifted = a.shifted(-k);
  Real residual = 0;
  int worst = 0;
  for (int p = shifted.valuation(); p < 0 && p < shifted.truncation_order(); ++p) {
    Real c = abs(shifted.coefficient(p));
    if (c > residual) {
      residual = c;
      worst = p;
    }
  }
  if (residual > tolerance * scale) {
    std::ostringstream msg;
    msg << "cancellation failure: coefficient of t^" << worst << " after division by t^" << k << " is "
        << residual.str(10, std::ios::scientific) << " (tolerance " << Real(tolerance * scale).str(5, std::ios::scientific)
        << ")";
    throw CancellationError(msg.str(), worst, residual);
  }
  if (shifted.truncation_order() <= 0) return {Jet(0, {}), residual};
  std::vector<Real> out;
  for (int p = 0; p < shifted.truncation_order(); ++p) out.push_back(shifted.coefficient(p));
  return {Jet(0, std::move(out)), residual};
}

Jet div_by_monomial(const Jet& a, int k) { return divide_by_monomial(a, k, default_tolerance()).jet; }

Jet compose_linear(const Jet& base, const Real& rate) {
  std::vector<Real> out = base.coefficients();
  if (rate == 0) {
    if (base.valuation() < 0) {
      for (int p = base.valuation(); p < 0 && p < base.truncation_order(); ++p)
        if (base.coefficient(p) != 0) throw std::domain_error("compose_linear: zero rate on a pole");
    }
    Jet c = Jet::constant(base.truncation_order() > 0 ? base.coefficient(0) : Real(0), base.order());
    return c;
  }
  Real factor = pow(rate, base.valuation());
  for (auto& c : out) {
    c *= factor;
    factor *= rate;
  }
  return Jet(base.valuation(), std::move(out));
}

Jet compose_linear(const Jet& base, const Rational& rate) { return compose_linear(base, to_real(rate)); }

Jet compose_linear(const ScalarHandle& f, const LinearForm& axis, const LinearForm& direction, int order) {
  return compose_linear(f(order), pairing(axis, direction));
}

}  // namespace arthur
