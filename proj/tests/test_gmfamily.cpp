#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arthur/gmfamily.hpp"

using namespace arthur;
using namespace arthur::gm;

namespace {

Real tol() { return Real("1e-60"); }

Real relative(const Real& a, const Real& b) {
  const Real scale = std::max(Real(1), std::max(abs(a), abs(b)));
  return abs(a - b) / scale;
}

}  // namespace

TEST_CASE("exponential germ on GL(2): (H1 - H2) / sqrt 2") {
  const Level level(1, {2});
  const auto dir = random_direction(level, 1);
  const LinearForm h{Rational(3, 4), Rational(-1, 5)};
  const auto phi = exponential_germ(h);
  const Real expected = to_real(h[0] - h[1]) / sqrt(Real(2));
  CHECK(relative(symmetrized_value(phi, level, dir).value, expected) < tol());
  CHECK(relative(tilde_c(phi, level, dir).value, expected) < tol());
  CHECK(relative(c(phi, level, dir).value, expected) < tol());
  CHECK(relative(arthur_derivative_value(phi, level, dir).value, expected) < tol());
}

TEST_CASE("level data") {
  const Level level(2, {2, 1});
  CHECK(level.n() == 6);
  CHECK(level.k() == 1);
  CHECK(level.weyl_group().size() == 2);
  CHECK(level.between().size() == 2);
  const Level full(1, {4});
  CHECK(full.k() == 3);
  CHECK(full.weyl_group().size() == 24);
  CHECK(full.between().size() == 8);
}

TEST_CASE("generic directions are certified") {
  const Level level(1, {4});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto dir = random_direction(level, seed);
    for (const auto& q : dir.certificate) CHECK(q != 0);
    CHECK(dir.lambda.sum() == 0);
  }
  CHECK_THROWS_AS(certify(level, LinearForm{Rational(1), Rational(1), Rational(-1), Rational(-1)}), std::domain_error);
  CHECK_THROWS_AS(certify(level, LinearForm{Rational(1), Rational(2), Rational(3), Rational(4)}), std::domain_error);
}

TEST_CASE("c and c~ agree on random germs") {
  zeta::ZetaProvider provider;
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r * d <= 4; ++r) {
      const Level level(d, {r});
      const auto dir = random_direction(level, 7);
      for (int i = 0; i < 6; ++i) {
        const auto phi = random_test_germ(level, provider, 42, i);
        const auto a = c(phi, level, dir);
        const auto b = tilde_c(phi, level, dir);
        CHECK(relative(a.value, b.value) < tol());
        CHECK(a.residual < pow2(-128));
        CHECK(b.residual < pow2(-128));
      }
    }
}

TEST_CASE("value is independent of the direction") {
  zeta::ZetaProvider provider;
  const Level level(1, {3, 1});
  const auto phi = random_test_germ(level, provider, 9, 2);
  const auto v1 = symmetrized_value(phi, level, random_direction(level, 1)).value;
  const auto v2 = symmetrized_value(phi, level, random_direction(level, 2)).value;
  CHECK(relative(v1, v2) < tol());
}

TEST_CASE("degree below k gives zero") {
  const Level level(1, {3});
  const auto dir = random_direction(level, 4);
  const LinearForm h{Rational(1), Rational(0), Rational(-1)};
  const auto phi = polynomial_germ({{Real(1), {}}, {Real(2), {h}}});
  CHECK(abs(tilde_c(phi, level, dir).value) < tol());
  CHECK(abs(arthur_derivative_value(phi, level, dir).value) < tol());
}

TEST_CASE("failed cancellation is reported") {
  const Level level(1, {2});
  const auto dir = random_direction(level, 1);
  const SmoothGerm bad{[](const LinearForm& dir, int order) {
                         std::vector<Real> c(static_cast<std::size_t>(order + 2), Real(1));
                         c[0] = to_real(dir[0]);
                         return Jet(-1, c);
                       },
                       "pole"};
  CHECK_THROWS_AS(tilde_c(bad, level, dir), CancellationError);
}
