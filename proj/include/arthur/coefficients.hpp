#pragma once

// The global coefficients a^L(S) and ã^L(S, o') of the fine expansion of the
// regular-by-blocks orbit (r^d), the unit-function integrals J_{P,X}(1, λ) and
// J~_{G,X}(1, λ), and the value J_o(1).

#include "arthur/gmfamily.hpp"
#include "arthur/orbits.hpp"
#include "arthur/real.hpp"
#include "arthur/rootdata.hpp"
#include "arthur/zeta.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace arthur::coeff {

using rootdata::BlockProfile;
using rootdata::Composition;

struct Options {
  int guard_order = 4;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Relative tolerance for cancellations; zero means 2^{-prec/2}.
  Real cancellation_tolerance = 0;
  /// Largest allowed relative spread between routes; zero means 2^{-prec/3}.
  Real route_tolerance = 0;
};

Real route_tolerance(const Options& opt);

class RouteDisagreement : public std::runtime_error {
 public:
  RouteDisagreement(const std::string& what, Real spread) : std::runtime_error(what), spread_(std::move(spread)) {}
  const Real& spread() const { return spread_; }

 private:
  Real spread_;
};

struct RouteReport {
  std::string name;
  Real value;
  Real residual;
};

struct Diagnostics {
  std::vector<RouteReport> routes;
  Real max_route_disagreement = 0;
  Real cancellation_residual = 0;
  LinearForm direction;         ///< λ0 for the three limit routes
  LinearForm second_direction;  ///< λ1 for the derivative route
};

struct CoefficientResult {
  orbits::LeviDatum levi;
  Composition levi_m0;  ///< standard representative: composition of r, sorted descending
  orbits::Partition orbit;
  Real a_value;
  Real a_tilde_value;
  Rational weyl_weight;
  zeta::PlaceSet s;
  Diagnostics diagnostics;
};

/// φ(λ) = Π_{α ∈ Δ_0^L} Z~^S_d(d + <λ, ϖ_α^∨>/d) / Z~^S_d(d).
gm::SmoothGerm phi_for_L(const zeta::ZetaProvider& provider, int d, const Composition& levi, const zeta::PlaceSet& s);

/// a^L(S) from all four routes; throws RouteDisagreement when they spread by more than the route tolerance.
CoefficientResult a_coefficient(const zeta::ZetaProvider& provider, int d, const Composition& levi,
                                const zeta::PlaceSet& s, const Options& opt = {});

/// ã^L(S, o') = vol([M_0]^1) a^{L'} for the standard representative L' of the pair.
CoefficientResult a_tilde(const zeta::ZetaProvider& provider, int d, int r, const orbits::InducingPair& pair,
                          const zeta::PlaceSet& s, const Options& opt = {});
/// Same, for a Levi given as a pair (levi, orbit); throws std::invalid_argument unless it induces (r^d).
CoefficientResult a_tilde(const zeta::ZetaProvider& provider, int d, int r, const orbits::LeviDatum& levi,
                          const zeta::PlaceSet& s, const Options& opt = {});

/// J_{P,X}(1, t λ0) = vol([M_X]^1) θ_P(λ)^{-1} Π_{α ∈ Δ_0^P} Z_d(d + <λ^P, ϖ_α^{P,∨}>/d), a Laurent jet.
Jet J_P_unit(const zeta::ZetaProvider& provider, const BlockProfile& p, const LinearForm& direction, int order);
/// J~_{G,X}(1, t λ0) = d^{r-1} covol(Δ̂_0^{G,∨})^{-1} vol([G_X]^1) Π_{α ∈ Δ_0^G} Z~_d(d + <λ, ϖ_α^∨>/d).
Jet J_tilde_unit(const zeta::ZetaProvider& provider, int d, int r, const LinearForm& direction, int order);

/// Point values at a rational λ ∈ a_0^G where nothing vanishes.
Real J_P_unit_value(const zeta::ZetaProvider& provider, const BlockProfile& p, const LinearForm& lambda);
Real J_tilde_unit_value(const zeta::ZetaProvider& provider, int d, int r, const LinearForm& lambda);

/// J_o(1) = value at 0 of |W_0|^{-1} Σ_w J~(1, wλ) θ_{P_0}(wλ)^{-1}.
gm::RouteValue J_o_unit(const zeta::ZetaProvider& provider, int d, int r, const Options& opt = {});

struct ExpansionTerm {
  CoefficientResult coefficient;
  orbits::InducingPair pair;
  std::string local_symbol;  ///< opaque label for the local weighted orbital integral
};

struct FormalExpansion {
  int d = 1;
  int r = 1;
  orbits::Partition orbit;
  zeta::PlaceSet s;
  Real vol_m0;
  std::vector<ExpansionTerm> terms;
};

/// One term per W-class of inducing pairs, in canonical order; with opt.jobs > 1 terms are computed concurrently.
FormalExpansion expansion(const zeta::ZetaProvider& provider, int d, int r, const zeta::PlaceSet& s,
                          const Options& opt = {});

}  // namespace arthur::coeff
