#pragma once

// Root data of GL(n), n = r*d, relative to the standard parabolics that contain
// the block-upper-triangular P_0 with Levi factor GL(d)^r.
//
// a_T is modelled as R^n with the standard inner product.  A standard parabolic
// P containing P_0 is a composition (r_1, ..., r_k) of r; its i-th block spans
// r_i*d consecutive coordinates, and a_P is the space of vectors that are
// constant on each block.  Everything is exact except covolumes, which are
// square roots of exact Gram determinants.

#include "arthur/jets.hpp"
#include "arthur/linear_form.hpp"
#include "arthur/real.hpp"

#include <utility>
#include <vector>

namespace arthur::rootdata {

using Composition = std::vector<int>;

struct AmbientSpace {
  int n = 1;

  LinearForm zero() const { return LinearForm(static_cast<std::size_t>(n)); }
  LinearForm basis_vector(int i) const;
  bool contains(const LinearForm& v) const { return v.size() == static_cast<std::size_t>(n); }
};

class BlockProfile {
 public:
  BlockProfile(int d, Composition composition);

  /// P = G.
  static BlockProfile full(int d, int r);
  /// P = P_0, one block per GL(d) factor.
  static BlockProfile minimal(int d, int r);

  int d() const { return d_; }
  int r() const { return r_; }
  int n() const { return r_ * d_; }
  const Composition& composition() const { return composition_; }
  /// Number of blocks k; dim a_P^G = k - 1.
  int length() const { return static_cast<int>(composition_.size()); }

  /// First coordinate of block i and its width r_i * d.
  int block_start(int i) const;
  int block_width(int i) const { return composition_[i] * d_; }
  /// Index of the block containing coordinate j.
  int block_of(int coordinate) const;

  /// True when every block of *this lies inside a block of coarser.
  bool refines(const BlockProfile& coarser) const;

  /// Composition of n describing the same parabolic relative to the Borel subgroup.
  BlockProfile borel_relative() const;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;

 private:
  int d_;
  int r_;
  Composition composition_;
};

/// All 2^{r-1} standard parabolics P_0 ⊆ P ⊆ G, in reverse lexicographic order.
std::vector<BlockProfile> enumerate_parabolics(int d, int r);

/// All parabolics P with lower ⊆ P ⊆ upper, in reverse lexicographic order.
std::vector<BlockProfile> parabolics_between(const BlockProfile& lower, const BlockProfile& upper);

/// Simple roots of P inside Q together with their dual bases in a_P^Q.
struct SimpleData {
  std::vector<LinearForm> roots;      ///< Δ_P^Q as vectors of a_P via the pairing
  std::vector<LinearForm> coroots;    ///< Δ_P^{Q,∨}
  std::vector<LinearForm> weights;    ///< ϖ_α, <ϖ_β, α^∨> = δ_αβ
  std::vector<LinearForm> coweights;  ///< ϖ_α^∨, <β, ϖ_α^∨> = δ_αβ
};

/// Throws std::invalid_argument unless p refines q.
SimpleData simple_data(const BlockProfile& p, const BlockProfile& q);

/// Lattice covolume stored as the exact Gram determinant; the square root is
/// taken at the working precision on demand.
struct Covolume {
  Rational gram_determinant = 1;
  Real value() const;
  Real inverse_value() const;
};

/// Covolume of the lattice spanned by linearly independent vectors; the empty
/// family has covolume 1.  Throws std::domain_error on dependent input.
Covolume covolume(const std::vector<LinearForm>& vectors);

/// covolume^{-1} * prod <λ, form>.
class ThetaFactor {
 public:
  ThetaFactor(Covolume covolume, std::vector<LinearForm> forms);

  const Covolume& covol() const { return covolume_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  int degree() const { return static_cast<int>(forms_.size()); }

  /// prod <λ, form>, exactly.
  Rational product(const LinearForm& lambda) const;
  Real evaluate(const LinearForm& lambda) const;
  /// θ(t λ0) = θ(λ0) t^degree as a jet known through t^order.
  Jet along_line(const LinearForm& lambda0, int order) const;

 private:
  Covolume covolume_;
  std::vector<LinearForm> forms_;
};

/// θ_P^Q built on the coroots Δ_P^{Q,∨}.
ThetaFactor theta(const BlockProfile& p, const BlockProfile& q);
/// θ̂_P^Q built on the coweights of P inside Q.
ThetaFactor hat_theta(const BlockProfile& p, const BlockProfile& q);

/// ε_P^Q = (-1)^{dim a_P^Q}.
int epsilon(const BlockProfile& p, const BlockProfile& q);
/// ε_P^G.
int epsilon(const BlockProfile& p);

/// Orthogonal projection onto a_P (block means).
LinearForm project_to_a(const LinearForm& lambda, const BlockProfile& p);

struct Projection {
  LinearForm upper;  ///< λ^P, the component orthogonal to a_P
  LinearForm lower;  ///< λ_P ∈ a_P
};

/// λ = λ^P + λ_P, computed exactly.
Projection project(const LinearForm& lambda, const BlockProfile& p);

/// Vector that is constant on the d-blocks of P_0 with the given block values.
LinearForm from_block_values(const std::vector<Rational>& values, int d);
/// Values of a vector constant on d-blocks; throws if it is not.
std::vector<Rational> block_values(const LinearForm& lambda, int d);
/// True when lambda is constant on every block of p.
bool is_block_constant(const LinearForm& lambda, const BlockProfile& p);
/// True when lambda sums to zero over every block of p.
bool has_zero_block_sums(const LinearForm& lambda, const BlockProfile& p);

}  // namespace arthur::rootdata
