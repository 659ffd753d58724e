#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arthur/coefficients.hpp"

using namespace arthur;
using namespace arthur::coeff;

namespace {

Real tol() { return Real("1e-60"); }

// a^G for GL(3), d = 1, from an independent evaluation of the symmetrized sum
// at t = 1e-120 with 400 digits
const char* kGL3Empty = "1.1284831489163945787519381912285968358074550040610785460609";
const char* kGL3Two = "0.0943397795448199014164291055924265815196457111370461436876034";
const char* kGL3TwoThreeFive = "-0.0840402131727787904260752985209507591902482435579416935294716";

const CoefficientResult& find(const std::vector<CoefficientResult>& all, const Composition& levi) {
  for (const auto& c : all)
    if (c.levi_m0 == levi) return c;
  throw std::logic_error("missing Levi");
}

}  // namespace

TEST_CASE("GL(2) closed forms") {
  zeta::ZetaProvider z;
  const Real g = const_euler() / 2 - log(const_pi()) / 2;
  const auto empty = a_coefficient(z, 1, {2}, zeta::PlaceSet{});
  CHECK(abs(empty.a_value - (g - const_log2()) / sqrt(Real(2))) < tol());
  const auto two = a_coefficient(z, 1, {2}, zeta::PlaceSet::parse("2"));
  CHECK(abs(two.a_value - g / sqrt(Real(2))) < tol());
}

TEST_CASE("GL(3) against the independent oracle") {
  zeta::ZetaProvider z;
  CHECK(abs(a_coefficient(z, 1, {3}, zeta::PlaceSet{}).a_value - Real(kGL3Empty)) < Real("1e-55"));
  CHECK(abs(a_coefficient(z, 1, {3}, zeta::PlaceSet::parse("2")).a_value - Real(kGL3Two)) < Real("1e-55"));
  CHECK(abs(a_coefficient(z, 1, {3}, zeta::PlaceSet::parse("2,3,5")).a_value - Real(kGL3TwoThreeFive)) <
        Real("1e-55"));
}

TEST_CASE("routes agree and are reported") {
  zeta::ZetaProvider z;
  const auto res = a_coefficient(z, 2, {2, 1}, zeta::PlaceSet::parse("3"));
  CHECK(res.diagnostics.routes.size() == 4);
  CHECK(res.diagnostics.max_route_disagreement < Real("1e-60"));
  CHECK(res.diagnostics.cancellation_residual < pow2(-128));
}

TEST_CASE("minimal Levi has coefficient 1 and a~ = vol(M_0)") {
  zeta::ZetaProvider z;
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; d * r <= 6; ++r) {
      const auto pairs = orbits::enumerate_inducing_pairs(d, r);
      const auto& m0 = pairs.back();
      REQUIRE(m0.levi_m0 == Composition(static_cast<std::size_t>(r), 1));
      const auto res = a_tilde(z, d, r, m0, zeta::PlaceSet{});
      CHECK(abs(res.a_value - 1) < tol());
      const Real expected = pow(sqrt(Real(d)) * z.Ztilde_value(d), r);
      CHECK(abs(res.a_tilde_value - expected) / expected < tol());
    }
}

TEST_CASE("a~ accepts only pairs that induce (r^d)") {
  zeta::ZetaProvider z;
  const orbits::LeviDatum wrong{{2, 2}, {orbits::Partition({2}), orbits::Partition({1, 1})}};
  CHECK_THROWS_AS(a_tilde(z, 2, 2, wrong, zeta::PlaceSet{}), std::invalid_argument);
}

TEST_CASE("unit-function extension identity at a sample point") {
  zeta::ZetaProvider z;
  const int d = 2, r = 3;
  const LinearForm lambda =
      rootdata::from_block_values({Rational(3, 40), Rational(-1, 25), Rational(-7, 200)}, d);
  const auto p0 = rootdata::BlockProfile::minimal(d, r);
  for (const auto& p : rootdata::enumerate_parabolics(d, r)) {
    const auto pr = rootdata::project(lambda, p);
    const Real lhs = J_tilde_unit_value(z, d, r, pr.upper);
    const Real rhs = rootdata::hat_theta(p0, p).evaluate(lambda) * J_P_unit_value(z, p, lambda) *
                     rootdata::theta(p, rootdata::BlockProfile::full(d, r)).evaluate(lambda);
    CHECK(relative_difference(lhs, rhs) < tol());
  }
}

TEST_CASE("expansion is deterministic across job counts") {
  zeta::ZetaProvider z;
  Options one;
  Options four;
  four.jobs = 4;
  const auto a = expansion(z, 1, 4, zeta::PlaceSet::parse("2"), one);
  const auto b = expansion(z, 1, 4, zeta::PlaceSet::parse("2"), four);
  REQUIRE(a.terms.size() == b.terms.size());
  CHECK(a.terms.size() == 5);
  Rational total = 0;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    CHECK(a.terms[i].coefficient.a_value == b.terms[i].coefficient.a_value);
    CHECK(a.terms[i].local_symbol == b.terms[i].local_symbol);
    total += a.terms[i].pair.weyl_weight * Rational(a.terms[i].pair.class_size);
  }
  CHECK(total > 0);
}

TEST_CASE("J_o for GL(1) is the constant 1") {
  zeta::ZetaProvider z;
  CHECK(abs(J_o_unit(z, 1, 1).value - 1) < tol());
}

TEST_CASE("changing precision moves values by little") {
  Real lo, hi;
  {
    PrecisionScope scope(256);
    zeta::ZetaProvider z;
    lo = a_coefficient(z, 2, {2}, zeta::PlaceSet{}).a_value;
  }
  {
    PrecisionScope scope(512);
    zeta::ZetaProvider z;
    hi = a_coefficient(z, 2, {2}, zeta::PlaceSet{}).a_value;
  }
  CHECK(abs(hi - lo) / abs(hi) < pow2(-120));
}
