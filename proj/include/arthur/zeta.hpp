#pragma once

// Completed zeta functions and the Z_n towers built from them.
//
// All jets are in a variable t around a rational center: xi_jet(c, m) is the
// expansion of xi(c + t) through t^m.  The Riemann zeta part is computed by
// Euler-Maclaurin summation carried out directly in jet arithmetic, and the
// Gamma part by Stirling's series after shifting the argument.

#include "arthur/jets.hpp"
#include "arthur/real.hpp"
#include "arthur/rootdata.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace arthur::zeta {

/// A finite set of places: rational primes, sorted without duplicates, and
/// optionally the archimedean places (all of them at once).
struct PlaceSet {
  std::vector<long> primes;
  bool archimedean = false;

  /// Parses "2,3,5", "2,inf", "" ...; throws std::invalid_argument on bad tokens.
  static PlaceSet parse(const std::string& text);
  PlaceSet with_prime(long p) const;
  bool empty() const { return primes.empty() && !archimedean; }
  std::string str() const;

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;
  friend auto operator<=>(const PlaceSet&, const PlaceSet&) = default;
};

/// The number field F, described through its completed Dedekind zeta
///   xi_F(s) = |d_F|^{s/2} prod_mu Gamma_R(s + mu) zeta(s) prod_i L(s, chi_i),
/// where Gamma_R(s) = pi^{-s/2} Gamma(s/2) and each chi_i is a periodic,
/// completely multiplicative coefficient sequence with zero sum over a period.
struct NumberFieldData {
  int degree = 1;
  long discriminant = 1;
  int real_places = 1;
  int complex_places = 0;
  std::vector<std::vector<long>> characters;  ///< chi(1..M) for each factor
  std::vector<Rational> gamma_shifts{Rational(0)};

  static NumberFieldData rationals();
  /// Reads the JSON data file; throws std::runtime_error on schema violations.
  static NumberFieldData from_json_file(const std::string& path);
  static NumberFieldData from_json_text(const std::string& text);
  void validate() const;
  bool is_rationals() const;
  std::string label() const;
};

/// Riemann zeta(c + t) (Laurent at c = 1) through t^order.
Jet riemann_zeta_jet(const Rational& center, int order);
/// Hurwitz zeta(c + t, a) for 0 < a <= 1 through t^order.
Jet hurwitz_zeta_jet(const Rational& center, const Rational& a, int order);
/// log Gamma(w + t) for w > 0 through t^order.
Jet log_gamma_jet(const Rational& w, int order);
/// Exact Bernoulli number B_m.
Rational bernoulli(int m);

class ZetaProvider {
 public:
  explicit ZetaProvider(NumberFieldData field = NumberFieldData::rationals());

  const NumberFieldData& field() const { return field_; }

  /// xi_F(c + t); a Laurent jet with a simple pole at c = 0 and c = 1.
  Jet xi_jet(const Rational& center, int order) const;
  Real xi(const Rational& s) const;

  /// Euler factor of xi_F at all places above p, or the archimedean part.
  Jet xi_prime_jet(long p, const Rational& center, int order) const;
  Jet xi_archimedean_jet(const Rational& center, int order) const;
  /// prod_{v in S} xi_v(c + t).
  Jet xi_places_jet(const PlaceSet& s, const Rational& center, int order) const;

  /// Z_n(n + x + t) = prod_{j=1}^n xi(x + j + t).
  Jet Z_jet(int n, const Rational& x, int order) const;
  /// Z~_n(n + x + t) = (x + t) Z_n(n + x + t); the pole at x = 0 is cancelled and checked.
  Jet Ztilde_jet(int n, const Rational& x, int order) const;
  /// Z_{n,S}(n + x + t) = prod_{v in S} prod_{j=1}^n xi_v(x + j + t).
  Jet Z_local_jet(int n, const PlaceSet& s, const Rational& x, int order) const;
  /// Z^S_n = Z_n / Z_{n,S}.
  Jet ZS_jet(int n, const PlaceSet& s, const Rational& x, int order) const;
  /// Z~^S_n(n + x + t) = (x + t) Z^S_n(n + x + t).
  Jet Ztilde_S_jet(int n, const PlaceSet& s, const Rational& x, int order) const;

  Real Ztilde_value(int n) const;  ///< Z~_n(n)

  /// vol([GL_m]^1) = sqrt(m) Z~_m(m).
  Real vol_GL(int m) const;
  /// vol([M_X]^1) = (d Z~_d(d))^{k} covol(Delta^{M,v})^{-1}, k the number of blocks of P.
  Real vol_MX(const rootdata::BlockProfile& p) const;
  /// vol([M_0]^1) = vol([GL_d]^1)^r.
  Real vol_M0(int d, int r) const;

 private:
  Jet xi_jet_uncached(const Rational& center, int order) const;
  Jet memo(const std::string& key, const std::function<Jet()>& compute) const;

  NumberFieldData field_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Jet> cache_;
};

}  // namespace arthur::zeta
