// One line per acceptance criterion; exit status 1 when any criterion fails.

#include "arthur/cli_commands.hpp"
#include "arthur/coefficients.hpp"
#include "arthur/orbits.hpp"
#include "arthur/rootdata.hpp"
#include "arthur/zeta.hpp"

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace arthur;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(const Real& x) { return to_decimal(x, 3); }

std::string measured(const Real& worst, const std::string& tolerance) {
  return "max " + sci(worst) + " (tol " + tolerance + ")";
}

Outcome covolume_law() {
  bool exact = true;
  Real worst = 0;
  for (int n = 2; n <= 12; ++n) {
    const auto data = rootdata::simple_data(rootdata::BlockProfile::minimal(1, n), rootdata::BlockProfile::full(1, n));
    const auto cov = rootdata::covolume(data.coroots);
    exact = exact && cov.gram_determinant == n;
    worst = std::max(worst, abs(cov.value() * cov.value() - n));
  }
  return {exact, std::string("Gram determinant = n for n = 2..12: ") + (exact ? "exact" : "mismatch")};
}

Outcome dual_product() {
  Real worst = 0;
  int count = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : rootdata::enumerate_parabolics(1, n)) {
      const auto data = rootdata::simple_data(rootdata::BlockProfile::minimal(1, n), p);
      const Real product = rootdata::covolume(data.coweights).value() * rootdata::covolume(data.coroots).value();
      worst = std::max(worst, abs(product - 1));
      ++count;
    }
  return {worst <= Real("1e-30"), std::to_string(count) + " parabolics, " + measured(worst, "1e-30")};
}

Outcome residue_normalization() {
  zeta::ZetaProvider z;
  const Real residue = z.xi_jet(Rational(1), 0).coefficient(-1);
  const Real e1 = abs(residue - 1);
  const Real e2 = abs(z.xi(Rational(2)) - const_pi() / 6);
  const Real worst = std::max(e1, e2);
  return {worst <= Real("1e-60"),
          "|res - 1| = " + sci(e1) + ", |xi(2) - pi/6| = " + sci(e2) + " (tol 1e-60)"};
}

Outcome from_suite(const std::string& suite, int n_max, int count, const std::vector<std::string>& keys,
                   const std::vector<Real>& tolerances) {
  cli::RunConfig config;
  cli::VerifyQuery q;
  q.suite = suite;
  q.n_max = n_max;
  q.count = count;
  const auto result = cli::cmd_verify(config, q);
  const auto& diag = result.document.at("diagnostics");
  bool pass = result.exit_code == 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Real worst(diag.at(keys[i]).at("max_residual").get<std::string>());
    pass = pass && worst <= tolerances[i];
    detail << (i ? ", " : "") << keys[i] << ' ' << sci(worst) << " (tol " << sci(tolerances[i]) << ')';
  }
  return {pass, detail.str()};
}

Outcome cp_identity() {
  return from_suite("cp-identity", 6, 20, {"c_vs_tilde_c"}, {Real("1e-25")});
}

Outcome route_agreement() {
  return from_suite("routes", 6, 0, {"route_agreement", "cancellation"}, {Real("1e-25"), pow2(-128)});
}

Outcome gl2_closed_form() {
  zeta::ZetaProvider z;
  const Real base = const_euler() / 2 - log(const_pi()) / 2;
  const Real a0 = coeff::a_coefficient(z, 1, {2}, zeta::PlaceSet{}).a_value;
  const Real a2 = coeff::a_coefficient(z, 1, {2}, zeta::PlaceSet::parse("2")).a_value;
  const Real e0 = abs(a0 - (base - const_log2()) / sqrt(Real(2)));
  const Real e2 = abs(a2 - (base - const_log2() + const_log2()) / sqrt(Real(2)));
  return {std::max(e0, e2) <= Real("1e-30"),
          "S = {}: " + sci(e0) + ", S = {2}: " + sci(e2) + " (tol 1e-30)"};
}

Outcome minimal_levi_anchor() {
  zeta::ZetaProvider z;
  Real worst = 0;
  int count = 0;
  for (const char* places : {"", "2"})
    for (int d = 1; d <= 8; ++d)
      for (int r = 1; d * r <= 8; ++r) {
        const auto pairs = orbits::enumerate_inducing_pairs(d, r);
        const auto& m0 = pairs.back();
        if (m0.levi_m0 != rootdata::Composition(static_cast<std::size_t>(r), 1)) return {false, "M_0 class missing"};
        const auto res = coeff::a_tilde(z, d, r, m0, zeta::PlaceSet::parse(places));
        const Real expected = pow(sqrt(Real(d)) * z.Ztilde_value(d), r);
        worst = std::max({worst, abs(res.a_value - 1), relative_difference(res.a_tilde_value, expected)});
        ++count;
      }
  return {worst <= Real("1e-25"), std::to_string(count) + " cases, " + measured(worst, "1e-25")};
}

Outcome extension_identity() {
  return from_suite("prolongement4", 6, 10, {"identity"}, {Real("1e-25")});
}

Outcome induction_oracle() {
  cli::RunConfig config;
  cli::VerifyQuery q;
  q.suite = "induction-oracle";
  q.n_max = 8;
  const auto result = cli::cmd_verify(config, q);
  bool xp = true;
  int matrices = 0;
  for (int d = 1; d <= 10; ++d)
    for (int r = 1; d * r <= 10; ++r)
      for (const auto& p : rootdata::enumerate_parabolics(d, r)) {
        xp = xp && orbits::rank_powers_oracle(orbits::block_nilpotent_matrix(p)) == orbits::jordan_type(p);
        ++matrices;
      }
  const bool pass = result.exit_code == 0 && xp;
  return {pass, result.document.at("diagnostics").dump() + ", X_P for n <= 10: " + std::to_string(matrices) +
                    (xp ? " exact" : " mismatch")};
}

void collect(const json& node, const std::string& key, std::vector<std::string>& out) {
  static const std::set<std::string> exported{"a", "a_tilde", "value", "coefficient", "vol_M0"};
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) collect(v, k, out);
  } else if (node.is_array()) {
    for (const auto& v : node) collect(v, key, out);
  } else if (node.is_string() && exported.count(key)) {
    out.push_back(node.get<std::string>());
  }
}

Outcome determinism() {
  std::vector<std::function<json(const cli::RunConfig&)>> commands{
      [](const cli::RunConfig& c) { return cli::cmd_coeff(c, 1, 4, "").document; },
      [](const cli::RunConfig& c) { return cli::cmd_coeff(c, 2, 3, "2,3,5").document; },
      [](const cli::RunConfig& c) { return cli::cmd_expansion(c, 2, 2, "2").document; },
      [](const cli::RunConfig& c) { return cli::cmd_volumes(c, 3, 2).document; },
      [](const cli::RunConfig& c) {
        cli::ZetaQuery q;
        q.eval = "ZtildeS";
        q.n = 2;
        q.at = "2";
        q.order = 3;
        q.places = "2,3";
        return cli::cmd_zeta(c, q).document;
      },
  };
  bool identical = true;
  Real worst = 0;
  int values = 0;
  for (const auto& command : commands) {
    cli::RunConfig config;
    const json first = command(config);
    identical = identical && first.dump(2) == command(config).dump(2);
    cli::RunConfig doubled = config;
    doubled.precision_bits = 2 * config.precision_bits;
    std::vector<std::string> lo, hi;
    collect(first.at("results"), "", lo);
    collect(command(doubled).at("results"), "", hi);
    if (lo.size() != hi.size()) return {false, "exported value count changed with precision"};
    for (std::size_t i = 0; i < lo.size(); ++i) {
      PrecisionScope scope(1024);
      worst = std::max(worst, relative_difference(Real(lo[i]), Real(hi[i])));
      ++values;
    }
  }
  const bool pass = identical && worst <= pow2(-120);
  return {pass, std::string(identical ? "byte-identical" : "differs") + ", " + std::to_string(values) +
                    " values at 256 vs 512 bits: " + measured(worst, "2^-120")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"covolume law", covolume_law},
      {"dual-lattice product", dual_product},
      {"residue normalization", residue_normalization},
      {"c = c~ on random germs", cp_identity},
      {"route agreement", route_agreement},
      {"GL(2) closed form", gl2_closed_form},
      {"minimal Levi anchor", minimal_levi_anchor},
      {"unit-function extension identity", extension_identity},
      {"induction oracle", induction_oracle},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << index << ". " << c.name << ": " << out.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
