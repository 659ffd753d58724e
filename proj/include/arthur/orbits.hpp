#pragma once

// Nilpotent orbits of gl(n) labelled by Jordan types, induction from Levi
// subalgebras, and the (Levi, orbit) pairs that induce the regular-by-blocks
// orbit (r^d).

#include "arthur/real.hpp"
#include "arthur/rootdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arthur::orbits {

/// A weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  ///< sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of m, largest first part first.
std::vector<Partition> partitions_of(int m);

/// (s, s, ..., s) with `count` parts.
Partition rectangle(int s, int count);

/// A Levi subgroup GL(m_1) x ... x GL(m_k) together with a nilpotent orbit of
/// each factor.  The order of the factors is the block order of a standard
/// Levi; W-conjugacy classes are represented by the canonical form.
struct LeviDatum {
  std::vector<int> parts;
  std::vector<Partition> orbit;

  int n() const;
  /// Throws std::invalid_argument unless each orbit partitions its part.
  void validate() const;
  /// Factors sorted by (part, orbit) descending: the W-class representative.
  LeviDatum canonical() const;
  std::string str() const;

  friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
  friend auto operator<=>(const LeviDatum&, const LeviDatum&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// X_P: block diagonal with X_{r_i d} (identity blocks I_d on the block superdiagonal).
IntMatrix block_nilpotent_matrix(const rootdata::BlockProfile& profile);

/// Jordan type of X_P: each r_i repeated d times.
Partition jordan_type(const rootdata::BlockProfile& profile);

/// I_L^G: padded componentwise sum of the orbit partitions.
Partition induce(const LeviDatum& levi);

/// Dominance order: a >= b when every partial sum of a is at least that of b.
bool dominates(const Partition& a, const Partition& b);

/// Every W-class of pairs (Levi of GL(n), nilpotent orbit of it), as canonical data.
std::vector<LeviDatum> enumerate_levi_data(int n);

/// Jordan type of a nilpotent integer matrix from the ranks of its powers.
/// Throws std::domain_error when the matrix is not nilpotent.
Partition rank_powers_oracle(const IntMatrix& m);

/// A nilpotent matrix in o' + n_P for the standard parabolic with Levi `levi`:
/// Jordan blocks on the diagonal, pseudo-random integers strictly above the
/// block diagonal.  Its Jordan type is the induced orbit for almost every seed.
IntMatrix induction_witness(const LeviDatum& levi, std::uint64_t seed);

struct InducingPair {
  LeviDatum levi;               ///< canonical representative
  rootdata::Composition levi_m0;  ///< the same Levi as a composition of r (contains M_0), sorted descending
  Rational weyl_weight;         ///< |W^L| / |W|
  Integer levi_group_order;     ///< |W^L| = prod m_j!
  Integer weyl_group_order;     ///< |W| = n!
  Integer class_size;           ///< number of pairs (L', o'') with L' ∈ L(T) in the W-class
  Integer standard_count;       ///< number of standard Levis (compositions of n) in the class
  Integer normalizer_order;     ///< |W(L)| restricted to the orbit: prod over equal factors of mult!
};

/// Every W-class of pairs (L, o') with I_L^G(o') = (r^d), by exhaustive search
/// over Levi part multisets and orbit tuples; canonical order (descending).
std::vector<InducingPair> enumerate_inducing_pairs(int d, int r);

Integer factorial(int m);

}  // namespace arthur::orbits
