#pragma once

// Values at lambda = 0 of the expressions built from a smooth function phi on
// a_0^L: the alternating sums c~ and c, the W_0^L-symmetrized sum, and the
// k-th derivative formula for (G,M)-families.  Each is computed on a line
// lambda = t * lambda0 through a certified generic point lambda0.

#include "arthur/jets.hpp"
#include "arthur/linear_form.hpp"
#include "arthur/real.hpp"
#include "arthur/rootdata.hpp"
#include "arthur/zeta.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace arthur::gm {

using rootdata::BlockProfile;
using rootdata::Composition;

/// phi through its jets on lines: jet(lambda0, m) is phi(t * lambda0) through t^m.
struct SmoothGerm {
  std::function<Jet(const LinearForm& direction, int order)> jet;
  std::string label;
};

SmoothGerm constant_germ(const Real& c);
/// exp <lambda, H>.
SmoothGerm exponential_germ(const LinearForm& h);
/// sum_i coefficient_i * prod_{h in factors_i} <lambda, h>.
struct Monomial {
  Real coefficient;
  std::vector<LinearForm> factors;
};
SmoothGerm polynomial_germ(std::vector<Monomial> terms);
/// prod_i Z~^S_m(m + <lambda, axis_i>) / Z~^S_m(m).
SmoothGerm zeta_product_germ(const zeta::ZetaProvider& provider, int m, const zeta::PlaceSet& s,
                             std::vector<LinearForm> axes);
SmoothGerm product_germ(SmoothGerm a, SmoothGerm b);
/// lambda -> phi(w lambda) for a coordinate permutation w (w lambda)_i = lambda_{perm[i]}.
SmoothGerm permuted_germ(SmoothGerm phi, std::vector<int> perm);

class Level;

/// The germ families exercised by the identity suites, drawn from a seed:
/// index % 3 selects exp <., H>, a polynomial with monomials of degree k..k+2
/// plus 1, or a product of Z~^S_d factors with an exponential.
SmoothGerm random_test_germ(const Level& level, const zeta::ZetaProvider& provider, std::uint64_t seed, int index);

/// The pair P_0 ⊆ L: every quantity needed by the four routes, computed once.
class Level {
 public:
  Level(int d, Composition levi);

  const BlockProfile& minimal() const { return p0_; }
  const BlockProfile& levi() const { return levi_; }
  int d() const { return p0_.d(); }
  int r() const { return p0_.r(); }
  int n() const { return p0_.n(); }
  /// k = dim a_0^L.
  int k() const { return k_; }

  struct Between {
    BlockProfile q;
    int eps_q_l;                   ///< ε_Q^L
    int eps_0_q;                   ///< ε_{P_0}^Q
    rootdata::ThetaFactor hat_theta_0_q;
    rootdata::ThetaFactor theta_q_l;
  };
  const std::vector<Between>& between() const { return between_; }
  const rootdata::ThetaFactor& theta_0_l() const { return theta_0_l_; }

  /// W_0^L as permutations of coordinates that permute the d-blocks inside each L-block.
  const std::vector<std::vector<int>>& weyl_group() const { return weyl_; }

 private:
  BlockProfile p0_;
  BlockProfile levi_;
  int k_;
  std::vector<Between> between_;
  rootdata::ThetaFactor theta_0_l_;
  std::vector<std::vector<int>> weyl_;
};

/// (w lambda)_i = lambda_{perm[i]}.
LinearForm act(const std::vector<int>& perm, const LinearForm& lambda);

/// A point of a_0^L at which every θ and θ̂ factor used by the routes is nonzero.
struct GenericDirection {
  LinearForm lambda;
  std::vector<Rational> certificate;  ///< the exact nonzero products that were checked
};

/// Throws std::domain_error when lambda is not in a_0^L or some factor vanishes.
GenericDirection certify(const Level& level, const LinearForm& lambda);
/// Draws integer d-block values from a seeded generator, projects into a_0^L, and certifies.
GenericDirection random_direction(const Level& level, std::uint64_t seed);

struct RouteValue {
  Real value;
  Real residual;  ///< largest cancelled coefficient relative to the largest term
  int k = 0;
};

/// Options shared by the routes.
struct RouteOptions {
  int guard_order = 4;
  Real tolerance = 0;  ///< zero means default_tolerance()
};

/// Σ_Q ε_Q^L θ̂_0^Q(λ)^{-1} φ(λ^Q) θ_Q^L(λ)^{-1} at λ = 0.
RouteValue tilde_c(const SmoothGerm& phi, const Level& level, const GenericDirection& dir, const RouteOptions& opt = {});
/// Σ_Q ε_0^Q θ̂_0^Q(λ)^{-1} φ(λ_Q) θ_Q^L(λ)^{-1} at λ = 0.
RouteValue c(const SmoothGerm& phi, const Level& level, const GenericDirection& dir, const RouteOptions& opt = {});
/// |W_0^L|^{-1} Σ_w φ(wλ) θ_0^L(wλ)^{-1} at λ = 0.
RouteValue symmetrized_value(const SmoothGerm& phi, const Level& level, const GenericDirection& dir,
                             const RouteOptions& opt = {});
/// |W_0^L|^{-1} Σ_w (1/k!) (d/dt)^k φ(t wλ)|_{t=0} θ_0^L(wλ)^{-1}: no pole bookkeeping at all.
RouteValue arthur_derivative_value(const SmoothGerm& phi, const Level& level, const GenericDirection& dir,
                                   const RouteOptions& opt = {});

}  // namespace arthur::gm
