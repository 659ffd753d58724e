#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arthur/zeta.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cstdio>
#include <fstream>

using namespace arthur;
using namespace arthur::zeta;

namespace {

// frozen 70-digit reference values from an independent arbitrary-precision library
const char* kZeta3 = "1.202056903159594285399738161511449990764986292340498881792271555341838";
const char* kZetaPrime3 = "-0.1981262428856368533306818215032857968755427934638350033468899631927257";
const char* kStieltjes1 = "-0.07281584548367672486058637587490131913773633833433795259900655974140143";
const char* kHurwitz2Third = "10.09559712542709408179200409989251636051890411928097814194168320083102";
const char* kZetaHalf = "-1.460354508809586812889499152515298012467229331012581490542886087825531";
const char* kXi3 = "0.1913132980155851711250765701204330685129918642752333535415149681631054";
const char* kXiPrime2 = "-0.7492351691331513313029103702099390120494717469204992240087508762765573";
const char* kXiConstantAt1 = "-0.9769042910338789661856897520935047083781";

Real ref(const char* s) { return Real(s); }
Real tol60() { return Real("1e-60"); }

}  // namespace

TEST_CASE("Riemann zeta values and derivatives") {
  const Jet z3 = riemann_zeta_jet(Rational(3), 1);
  CHECK(abs(z3.coefficient(0) - ref(kZeta3)) < tol60());
  CHECK(abs(z3.coefficient(1) - ref(kZetaPrime3)) < tol60());
  const Jet z12 = riemann_zeta_jet(Rational(1, 2), 0);
  CHECK(abs(z12.coefficient(0) - ref(kZetaHalf)) < tol60());
  CHECK(abs(riemann_zeta_jet(Rational(0), 0).coefficient(0) + Real(1) / 2) < tol60());
}

TEST_CASE("Laurent expansion of zeta at 1") {
  const Jet z = riemann_zeta_jet(Rational(1), 1);
  CHECK(z.valuation() == -1);
  CHECK(abs(z.coefficient(-1) - 1) < tol60());
  CHECK(abs(z.coefficient(0) - const_euler()) < tol60());
  CHECK(abs(z.coefficient(1) + ref(kStieltjes1)) < tol60());
}

TEST_CASE("Hurwitz zeta") {
  CHECK(abs(hurwitz_zeta_jet(Rational(2), Rational(1, 3), 0).coefficient(0) - ref(kHurwitz2Third)) < tol60());
  const Jet a = hurwitz_zeta_jet(Rational(5, 2), Rational(1), 2);
  const Jet b = riemann_zeta_jet(Rational(5, 2), 2);
  for (int p = 0; p <= 2; ++p) CHECK(abs(a.coefficient(p) - b.coefficient(p)) < tol60());
}

TEST_CASE("log Gamma jet against Boost.Math at double precision") {
  const Jet g = log_gamma_jet(Rational(7, 3), 1);
  CHECK(static_cast<double>(g.coefficient(0)) == doctest::Approx(boost::math::lgamma(7.0 / 3.0)).epsilon(1e-14));
  CHECK(static_cast<double>(g.coefficient(1)) == doctest::Approx(boost::math::digamma(7.0 / 3.0)).epsilon(1e-14));
  const Jet h = log_gamma_jet(Rational(1, 2), 0);
  CHECK(abs(h.coefficient(0) - log(const_pi()) / 2) < tol60());
}

TEST_CASE("Riemann zeta against Boost.Math over a range") {
  for (int i = -7; i <= 12; ++i) {
    if (i == 2) continue;
    const Rational s(i, 2);
    const double expected = boost::math::zeta(static_cast<double>(i) / 2);
    CHECK(static_cast<double>(riemann_zeta_jet(s, 0).coefficient(0)) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
}

TEST_CASE("completed zeta over the rationals") {
  ZetaProvider z;
  const Jet at1 = z.xi_jet(Rational(1), 1);
  CHECK(abs(at1.coefficient(-1) - 1) < tol60());
  CHECK(abs(at1.coefficient(0) - ref(kXiConstantAt1)) < pow2(-128));
  CHECK(abs(z.xi(Rational(2)) - const_pi() / 6) < tol60());
  CHECK(abs(z.xi(Rational(3)) - ref(kXi3)) < tol60());
  CHECK(abs(z.xi_jet(Rational(2), 1).coefficient(1) - ref(kXiPrime2)) < tol60());
  const Jet at0 = z.xi_jet(Rational(0), 0);
  CHECK(abs(at0.coefficient(-1) + 1) < tol60());
}

TEST_CASE("functional equation xi(s) = xi(1 - s) as jets") {
  ZetaProvider z;
  for (const Rational c : {Rational(3, 10), Rational(-2, 3), Rational(5, 2)}) {
    const Jet a = z.xi_jet(c, 3);
    const Jet b = compose_linear(z.xi_jet(1 - c, 3), Rational(-1));
    for (int p = 0; p <= 3; ++p) CHECK(abs(a.coefficient(p) - b.coefficient(p)) < tol60());
  }
}

TEST_CASE("local factors") {
  ZetaProvider z;
  CHECK(abs(z.xi_prime_jet(2, Rational(2), 0).coefficient(0) - Real(4) / 3) < tol60());
  CHECK(abs(z.xi_prime_jet(3, Rational(1), 0).coefficient(0) - Real(3) / 2) < tol60());
  const Jet inf = z.xi_archimedean_jet(Rational(2), 0);
  CHECK(abs(inf.coefficient(0) - 1 / const_pi()) < tol60());
}

TEST_CASE("truncated Euler product approaches zeta(3)") {
  ZetaProvider z;
  Real product = 1;
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (long p : primes) product *= z.xi_prime_jet(p, Rational(3), 0).coefficient(0);
  const Real error = ref(kZeta3) - product;
  CHECK(error > 0);
  CHECK(error < Real("2e-4"));
  PlaceSet s;
  for (long p : primes) s = s.with_prime(p);
  CHECK(abs(z.xi_places_jet(s, Rational(3), 0).coefficient(0) - product) < tol60());
}

TEST_CASE("Z towers") {
  ZetaProvider z;
  CHECK(abs(z.Ztilde_value(1) - 1) < tol60());
  CHECK(abs(z.Ztilde_value(2) - const_pi() / 6) < tol60());
  const Jet zt = z.Ztilde_jet(2, Rational(0), 2);
  const Jet direct = Jet(1, {Real(1), Real(0), Real(0), Real(0)}) * z.xi_jet(Rational(1), 3) * z.xi_jet(Rational(2), 3);
  for (int p = 0; p <= 2; ++p) CHECK(abs(zt.coefficient(p) - direct.coefficient(p)) < tol60());
  const auto s = PlaceSet::parse("2,3");
  const Jet zs = z.ZS_jet(2, s, Rational(1), 2);
  const Jet recon = zs * z.Z_local_jet(2, s, Rational(1), 2);
  const Jet full = z.Z_jet(2, Rational(1), 2);
  for (int p = 0; p <= 2; ++p) CHECK(abs(recon.coefficient(p) - full.coefficient(p)) < tol60());
}

TEST_CASE("volumes") {
  ZetaProvider z;
  CHECK(abs(z.vol_GL(1) - 1) < tol60());
  CHECK(abs(z.vol_GL(2) - sqrt(Real(2)) * const_pi() / 6) < tol60());
  CHECK(abs(z.vol_M0(2, 3) - pow(z.vol_GL(2), 3)) < tol60());
}

TEST_CASE("place sets") {
  const auto s = PlaceSet::parse("5, 2,3,2");
  CHECK(s.primes == std::vector<long>{2, 3, 5});
  CHECK(!s.archimedean);
  CHECK(PlaceSet::parse("2,inf").archimedean);
  CHECK(PlaceSet::parse("").empty());
  CHECK(PlaceSet::parse(s.str()) == s);
  CHECK_THROWS_AS(PlaceSet::parse("4"), std::invalid_argument);
  CHECK_THROWS_AS(PlaceSet::parse("x"), std::invalid_argument);
}

TEST_CASE("field data files") {
  const char* gaussian = R"({"degree": 2, "discriminant": -4, "signature": [0, 1],
    "dirichlet_coefficients": [[1, 0, -1, 0]], "gamma_factor_shifts": [0, 1]})";
  const auto f = NumberFieldData::from_json_text(gaussian);
  CHECK(f.degree == 2);
  CHECK(!f.is_rationals());
  ZetaProvider z(f);
  // 4 * 2 (2π)^{-2} Γ(2) ζ(2) L(2, χ_4) = G / 3, residue 2^{r1} h R / w = 1/2
  const Real catalan("0.9159655941772190150546035149323841107741493742816721342664981196217630");
  CHECK(abs(z.xi(Rational(2)) - catalan / 3) < tol60());
  CHECK(abs(z.xi_jet(Rational(1), 0).coefficient(-1) - Real(1) / 2) < tol60());
  CHECK_THROWS(NumberFieldData::from_json_text(R"({"degree": 2})"));
  CHECK_THROWS(NumberFieldData::from_json_text(
      R"({"degree": 2, "discriminant": -4, "signature": [0, 1],
          "dirichlet_coefficients": [[1, 0, 1, 0]], "gamma_factor_shifts": [0, 1]})"));
}

TEST_CASE("order-one coefficient of Z~^S_1 with S = {2}") {
  ZetaProvider z;
  const Real derivative = const_euler() / 2 - const_log2() - log(const_pi()) / 2;
  const Jet plain = z.Ztilde_jet(1, Rational(0), 1);
  CHECK(abs(plain.coefficient(1) - derivative) < tol60());
  const Jet local = z.Ztilde_S_jet(1, PlaceSet::parse("2"), Rational(0), 1);
  CHECK(abs(local.coefficient(0) - Real(1) / 2) < tol60());
  CHECK(abs(local.coefficient(1) - (derivative + const_log2()) / 2) < tol60());
  const Real normalized = local.coefficient(1) / local.coefficient(0);
  CHECK(abs(normalized - (derivative + const_log2())) < tol60());
}
