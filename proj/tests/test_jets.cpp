#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arthur/jets.hpp"

#include <random>

using namespace arthur;

namespace {

Real tol() { return pow2(-200); }

Jet random_jet(std::mt19937_64& rng, int valuation, int size) {
  std::uniform_int_distribution<int> draw(-9, 9);
  std::vector<Real> c;
  for (int i = 0; i < size; ++i) c.emplace_back(Real(draw(rng)) / 7);
  if (c[0] == 0) c[0] = 1;
  return Jet(valuation, c);
}

bool close(const Jet& a, const Jet& b, int upto) {
  for (int p = std::min(a.valuation(), b.valuation()); p <= upto; ++p)
    if (abs(a.coefficient(p) - b.coefficient(p)) > tol()) return false;
  return true;
}

}  // namespace

TEST_CASE("truncation orders of products") {
  const Jet a(-1, {Real(1), Real(2), Real(3)});  // known through t^1
  const Jet b(0, {Real(1), Real(1), Real(1), Real(1), Real(1)});  // through t^4
  const Jet p = a * b;
  CHECK(p.valuation() == -1);
  CHECK(p.truncation_order() == 2);
  CHECK_THROWS(p.coefficient(2));
  CHECK(p.coefficient(-1) == 1);
  CHECK(p.coefficient(0) == 3);
  CHECK(p.coefficient(1) == 6);
}

TEST_CASE("ring axioms hold on random jets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Jet a = random_jet(rng, 0, 8), b = random_jet(rng, -1, 9), c = random_jet(rng, 1, 7);
    CHECK(close(a * b, b * a, 6));
    CHECK(close((a * b) * c, a * (b * c), 6));
    CHECK(close(a * (b + c), a * b + a * c, 6));
    CHECK(close(a * inverse(a), Jet::constant(Real(1), 7), 7));
    CHECK(close((b / a) * a, b, 6));
  }
}

TEST_CASE("exp and log are inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Jet a = random_jet(rng, 0, 8);
    a = a * a + Jet::constant(Real(1), 7);
    CHECK(close(exp(log(a)), a, 7));
    CHECK(close(pow(a, Real(2)), a * a, 7));
  }
}

TEST_CASE("exponential jet coefficients") {
  const Jet e = Jet::exponential(Real(3), 6);
  Real fact = 1;
  for (int p = 0; p <= 6; ++p) {
    if (p > 0) fact *= p;
    CHECK(abs(e.coefficient(p) - boost::multiprecision::pow(Real(3), Real(p)) / fact) < tol());
  }
  CHECK(abs(e.evaluate(Real(1) / 1000) - boost::multiprecision::exp(Real(3) / 1000)) < Real(1e-20));
}

TEST_CASE("compose_linear scales coefficients") {
  const Jet base = Jet::exponential(Real(1), 5);
  const Jet scaled = compose_linear(base, Rational(2, 3));
  CHECK(close(scaled, Jet::exponential(Real(2) / 3, 5), 5));
  const Jet laurent(-1, {Real(1), Real(5), Real(7)});
  const Jet s2 = compose_linear(laurent, Real(2));
  CHECK(s2.coefficient(-1) == Real(1) / 2);
  CHECK(s2.coefficient(0) == 5);
  CHECK(s2.coefficient(1) == 14);
}

TEST_CASE("division by monomial checks cancellation") {
  const Jet good(0, {Real(0), Real(0), Real(4), Real(5)});
  const auto q = divide_by_monomial(good, 2, pow2(-100));
  CHECK(q.jet.coefficient(0) == 4);
  CHECK(q.jet.coefficient(1) == 5);
  const Jet bad(0, {Real(0), Real(1) / 1000, Real(4)});
  CHECK_THROWS_AS(divide_by_monomial(bad, 2, pow2(-100)), CancellationError);
}

TEST_CASE("shift and normalize") {
  const Jet a(0, {Real(0), Real(0), Real(2), Real(3)});
  const Jet n = a.normalized();
  CHECK(n.valuation() == 2);
  CHECK(n.truncation_order() == a.truncation_order());
  const Jet s = a.shifted(-3);
  CHECK(s.coefficient(-1) == 2);
  CHECK(s.coefficient(0) == 3);
}
