#include "arthur/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arthur::zeta {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

Integer binomial(int n, int k) {
  Integer b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// a + t through t^order
Jet affine(const Real& a, int order) {
  std::vector<Real> c(static_cast<std::size_t>(std::max(order + 1, 2)), Real(0));
  c[0] = a;
  c[1] = 1;
  return Jet(0, std::move(c)).truncated(order);
}

// base^{-(c + t)} given log(base)
Jet power_jet(const Real& log_base, const Rational& c, int order) {
  return Jet::exponential(-log_base, order) * exp(-to_real(c) * log_base);
}

// 1 / (c - 1 + t), a Laurent jet when c = 1
Jet pole_jet(const Rational& c, int order) {
  if (c == 1) {
    std::vector<Real> coeffs(static_cast<std::size_t>(order + 2), Real(0));
    coeffs[0] = 1;
    return Jet(-1, std::move(coeffs));
  }
  return inverse(affine(to_real(c - 1), order));
}

// log(b + t) for b > 0
Jet log_affine(const Real& b, int order) {
  std::vector<Real> c(static_cast<std::size_t>(order + 1), Real(0));
  c[0] = log(b);
  Real power = 1;
  for (int k = 1; k <= order; ++k) {
    power /= b;
    c[k] = (k % 2 ? power : Real(-power)) / k;
  }
  return Jet(0, std::move(c));
}

Real target_error() { return pow2(-static_cast<long>(working_precision()) - 16); }

std::string key_of(const char* kind, const Rational& c, int order) {
  std::ostringstream out;
  out << kind << '|' << c.str() << '|' << order << '|' << working_precision();
  return out.str();
}

Jet analytic_or_throw(const Jet& j, const char* what) {
  const Real scale = std::max(Real(1), j.max_abs());
  Real residual = j.max_abs_below(0);
  if (residual > default_tolerance() * scale)
    throw CancellationError(std::string(what) + ": pole did not cancel", -1, residual);
  std::vector<Real> out;
  for (int p = 0; p < j.truncation_order(); ++p) out.push_back(j.coefficient(p));
  return Jet(0, std::move(out));
}

}  // namespace

Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  while (static_cast<int>(g_bernoulli.size()) <= m) {
    const int k = static_cast<int>(g_bernoulli.size());
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / (k + 1));
  }
  return g_bernoulli[m];
}

Jet hurwitz_zeta_jet(const Rational& center, const Rational& a, int order) {
  if (a <= 0 || a > 1) throw std::invalid_argument("hurwitz_zeta_jet: a must lie in (0, 1]");
  if (order < 0) return Jet(0, {});
  const int final_order = order;
  ++order;  // the pole term costs one order at c = 1
  const Real target = target_error();
  const double c_abs = std::abs(center.convert_to<double>());
  int n_terms = static_cast<int>(0.3 * working_precision()) + 10 + static_cast<int>(c_abs) + 2 * order;
  for (int attempt = 0; attempt < 5; ++attempt, n_terms *= 2) {
    Jet sum = Jet::constant(Real(0), order);
    for (int k = 0; k < n_terms; ++k) sum += power_jet(log(to_real(a + k)), center, order);
    const Real big = to_real(a + n_terms);
    const Jet tail_power = power_jet(log(big), center, order);  // (N+a)^{-s}
    sum += (tail_power * big) * pole_jet(center, order);
    sum += tail_power * Real(0.5);
    Jet poch = affine(to_real(center), order);  // (s)_{2j-1}
    const Real big_inv2 = 1 / (big * big);
    Real scale = big;  // (N+a)^{1-2j}
    Integer fact = 1;  // (2j)!
    bool converged = false;
    for (int j = 1; j <= n_terms; ++j) {
      scale *= big_inv2;
      fact *= Integer(2 * j - 1) * Integer(2 * j);
      const Jet term = poch * tail_power * (to_real(Rational(bernoulli(2 * j)) / Rational(fact)) * scale);
      sum += term;
      if (term.max_abs() < target) {
        converged = true;
        break;
      }
      poch *= affine(to_real(center + 2 * j - 1), order) * affine(to_real(center + 2 * j), order);
    }
    if (converged) return sum.truncated(final_order);
  }
  throw std::runtime_error("hurwitz_zeta_jet: insufficient precision budget for center " + center.str());
}

Jet riemann_zeta_jet(const Rational& center, int order) { return hurwitz_zeta_jet(center, Rational(1), order); }

Jet log_gamma_jet(const Rational& w, int order) {
  if (w <= 0) throw std::domain_error("log_gamma_jet: argument must be positive");
  const Rational shift_target(static_cast<long>(working_precision() / 3) + 1);
  long shift = 0;
  while (w + shift < shift_target) ++shift;
  const Rational big_q = w + shift;
  const Real big = to_real(big_q);
  const Jet z = affine(big, order);
  const Jet log_z = log_affine(big, order);
  Jet result = (z - Jet::constant(Real(0.5), order)) * log_z - z + Jet::constant(log(2 * const_pi()) / 2, order);
  const Jet z_inv = inverse(z);
  const Jet z_inv2 = z_inv * z_inv;
  Jet power = z_inv;
  const Real target = target_error();
  bool converged = false;
  for (int j = 1; j <= static_cast<int>(working_precision()); ++j) {
    const Rational coef = bernoulli(2 * j) / Rational(2 * j * (2 * j - 1));
    const Jet term = power * to_real(coef);
    result += term;
    if (term.max_abs() < target) {
      converged = true;
      break;
    }
    power *= z_inv2;
  }
  if (!converged) throw std::runtime_error("log_gamma_jet: Stirling series did not converge");
  for (long i = 0; i < shift; ++i) result -= log_affine(to_real(w + i), order);
  return result;
}

ZetaProvider::ZetaProvider(NumberFieldData field) : field_(std::move(field)) { field_.validate(); }

Jet ZetaProvider::memo(const std::string& key, const std::function<Jet()>& compute) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Jet value = compute();
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(value)).first->second;
}

Jet ZetaProvider::xi_archimedean_jet(const Rational& center, int order) const {
  return memo(key_of("xi_inf", center, order), [&] {
    const Real log_pi = log(const_pi());
    Jet out = power_jet(-log(to_real(Rational(std::abs(field_.discriminant)))) / 2, center, order);
    for (const auto& mu : field_.gamma_shifts) {
      const Rational arg = center + mu;
      if (arg <= 0) throw std::domain_error("xi_archimedean_jet: Gamma factor evaluated at a pole or across one");
      // Gamma_R(arg + t) = exp(-(arg + t) log(pi) / 2 + log Gamma(arg/2 + t/2))
      Jet exponent = compose_linear(log_gamma_jet(arg / 2, order), Rational(1, 2));
      exponent -= affine(to_real(arg), order) * (log_pi / 2);
      out *= exp(exponent);
    }
    return out;
  });
}

Jet ZetaProvider::xi_prime_jet(long p, const Rational& center, int order) const {
  if (p < 2) throw std::invalid_argument("xi_prime_jet: not a prime");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("xi_prime_jet: " + std::to_string(p) + " is not prime");
  return memo(key_of(("xi_p" + std::to_string(p)).c_str(), center, order), [&] {
    const Jet x = power_jet(log(Real(p)), center, order);  // p^{-s}
    const Jet one = Jet::constant(Real(1), order);
    Jet out = inverse(one - x);
    for (const auto& chi : field_.characters) {
      const long value = chi[static_cast<std::size_t>((p - 1) % static_cast<long>(chi.size()))];
      if (value == 0) continue;
      out *= inverse(one - x * Real(value));
    }
    return out;
  });
}

Jet ZetaProvider::xi_places_jet(const PlaceSet& s, const Rational& center, int order) const {
  Jet out = Jet::constant(Real(1), order);
  for (long p : s.primes) out *= xi_prime_jet(p, center, order);
  if (s.archimedean) out *= xi_archimedean_jet(center, order);
  return out;
}

Jet ZetaProvider::xi_jet_uncached(const Rational& center, int order) const {
  if (center <= 0) {
    // xi(c + t) = xi(1 - c - t)
    return compose_linear(xi_jet(1 - center, order), Rational(-1));
  }
  Jet out = xi_archimedean_jet(center, order + 1) * riemann_zeta_jet(center, order + 1);
  for (const auto& chi : field_.characters) {
    const long period = static_cast<long>(chi.size());
    Jet l = Jet::constant(Real(0), order + 1);
    for (long a = 1; a <= period; ++a) {
      const long value = chi[static_cast<std::size_t>(a - 1)];
      if (value == 0) continue;
      l += hurwitz_zeta_jet(center, Rational(a, period), order + 1) * Real(value);
    }
    out *= l * power_jet(log(Real(period)), center, order + 1);
  }
  return out.truncated(order);
}

Jet ZetaProvider::xi_jet(const Rational& center, int order) const {
  return memo(key_of("xi", center, order), [&] { return xi_jet_uncached(center, order); });
}

Real ZetaProvider::xi(const Rational& s) const {
  if (s == 0 || s == 1) throw std::domain_error("xi: pole at s = " + s.str());
  return xi_jet(s, 0).coefficient(0);
}

Jet ZetaProvider::Z_jet(int n, const Rational& x, int order) const {
  if (n < 1) throw std::invalid_argument("Z_jet: n must be positive");
  Jet out = Jet::constant(Real(1), order + 1);
  for (int j = 1; j <= n; ++j) out *= xi_jet(x + j, order + 1);
  return out.truncated(order);
}

Jet ZetaProvider::Ztilde_jet(int n, const Rational& x, int order) const {
  return memo(key_of(("Zt" + std::to_string(n)).c_str(), x, order), [&] {
    return analytic_or_throw(affine(to_real(x), order + 1) * Z_jet(n, x, order + 1), "Ztilde_jet").truncated(order);
  });
}

Jet ZetaProvider::Z_local_jet(int n, const PlaceSet& s, const Rational& x, int order) const {
  Jet out = Jet::constant(Real(1), order);
  for (int j = 1; j <= n; ++j) out *= xi_places_jet(s, x + j, order);
  return out;
}

Jet ZetaProvider::ZS_jet(int n, const PlaceSet& s, const Rational& x, int order) const {
  return Z_jet(n, x, order) * inverse(Z_local_jet(n, s, x, order + 1));
}

Jet ZetaProvider::Ztilde_S_jet(int n, const PlaceSet& s, const Rational& x, int order) const {
  if (s.empty()) return Ztilde_jet(n, x, order);
  return memo(key_of(("ZtS" + std::to_string(n) + "|" + s.str()).c_str(), x, order), [&] {
    return Ztilde_jet(n, x, order) * inverse(Z_local_jet(n, s, x, order));
  });
}

Real ZetaProvider::Ztilde_value(int n) const { return Ztilde_jet(n, Rational(0), 0).coefficient(0); }

Real ZetaProvider::vol_GL(int m) const { return sqrt(Real(m)) * Ztilde_value(m); }

Real ZetaProvider::vol_MX(const rootdata::BlockProfile& p) const {
  const auto data = rootdata::simple_data(rootdata::BlockProfile::minimal(1, p.n()), p.borel_relative());
  const auto cov = rootdata::covolume(data.coroots);
  return pow(p.d() * Ztilde_value(p.d()), Real(p.length())) * cov.inverse_value();
}

Real ZetaProvider::vol_M0(int d, int r) const { return pow(vol_GL(d), Real(r)); }

}  // namespace arthur::zeta
