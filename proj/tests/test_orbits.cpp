#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arthur/orbits.hpp"

using namespace arthur;
using namespace arthur::orbits;

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int m = 0; m <= 8; ++m) CHECK(partitions_of(m).size() == static_cast<std::size_t>(expected[m]));
}

TEST_CASE("induction adds partitions columnwise") {
  const LeviDatum levi{{3, 2}, {Partition({2, 1}), Partition({1, 1})}};
  CHECK(induce(levi) == Partition({3, 2}));
  const LeviDatum zero{{1, 1, 1}, {Partition({1}), Partition({1}), Partition({1})}};
  CHECK(induce(zero) == Partition({3}));
}

TEST_CASE("X_P Jordan types agree with ranks of powers") {
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 4; ++r)
      for (const auto& p : rootdata::enumerate_parabolics(d, r))
        CHECK(rank_powers_oracle(block_nilpotent_matrix(p)) == jordan_type(p));
}

TEST_CASE("rank oracle rejects non-nilpotent input") {
  CHECK_THROWS_AS(rank_powers_oracle({{1, 0}, {0, 0}}), std::domain_error);
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition({3}), Partition({2, 1})));
  CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK(!dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK(!dominates(Partition({4, 1, 1}), Partition({3, 3})));
}

TEST_CASE("inducing pairs of (2,2)") {
  const auto pairs = enumerate_inducing_pairs(2, 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].levi_m0 == rootdata::Composition{2});
  CHECK(pairs[0].weyl_weight == 1);
  CHECK(pairs[1].levi_m0 == rootdata::Composition{1, 1});
  CHECK(pairs[1].weyl_weight == Rational(1, 6));
}

TEST_CASE("inducing pairs of the zero orbit for d = 1 are the compositions up to order") {
  // Levis containing the torus carry only the zero orbit; classes are partitions of r
  for (int r = 1; r <= 6; ++r) CHECK(enumerate_inducing_pairs(1, r).size() == partitions_of(r).size());
}

TEST_CASE("class sizes sum over standard Levis") {
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 4; ++r) {
      Rational total = 0;
      for (const auto& pair : enumerate_inducing_pairs(d, r)) {
        CHECK(pair.class_size * pair.normalizer_order * pair.levi_group_order == pair.weyl_group_order);
        total += Rational(pair.standard_count);
      }
      CHECK(total == Rational(Integer(1) << (r - 1)));
    }
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}
