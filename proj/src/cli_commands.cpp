#include "arthur/cli_commands.hpp"

#include "arthur/coefficients.hpp"
#include "arthur/gmfamily.hpp"
#include "arthur/orbits.hpp"
#include "arthur/rootdata.hpp"
#include "arthur/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace arthur::cli {

using nlohmann::json;

namespace {

std::unique_ptr<zeta::ZetaProvider> make_provider(const RunConfig& config) {
  if (config.field == "Q" || config.field.empty()) return std::make_unique<zeta::ZetaProvider>();
  return std::make_unique<zeta::ZetaProvider>(zeta::NumberFieldData::from_json_file(config.field));
}

coeff::Options options_for(const RunConfig& config) {
  coeff::Options opt;
  opt.guard_order = config.jet_guard_order;
  opt.seed = config.seed;
  opt.jobs = config.jobs;
  opt.cancellation_tolerance = pow2(-config.effective_tolerance_exponent());
  return opt;
}

json decimal(const Real& x) { return to_decimal(x); }

json rational_vector(const LinearForm& v) {
  json out = json::array();
  for (const auto& x : v.coords()) out.push_back(to_string(x));
  return out;
}

json composition_json(const rootdata::Composition& c) {
  json out = json::array();
  for (int part : c) out.push_back(part);
  return out;
}

json document(const RunConfig& config, json query) {
  return json{{"config", config.to_json()}, {"query", std::move(query)}, {"results", json::array()},
              {"diagnostics", json::object()}};
}

void check_dimensions(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("d and r must be positive integers");
}

json coefficient_row(const coeff::CoefficientResult& res) {
  json routes = json::object();
  for (const auto& route : res.diagnostics.routes)
    routes[route.name] = {{"value", decimal(route.value)}, {"cancellation_residual", decimal(route.residual)}};
  return json{{"levi", res.levi.str()},
              {"levi_parts", res.levi.parts},
              {"levi_m0", composition_json(res.levi_m0)},
              {"orbit", res.orbit.str()},
              {"S", res.s.str()},
              {"weyl_weight", to_string(res.weyl_weight)},
              {"a", decimal(res.a_value)},
              {"a_tilde", decimal(res.a_tilde_value)},
              {"precision_bits", working_precision()},
              {"diagnostics",
               {{"routes", routes},
                {"max_route_disagreement", decimal(res.diagnostics.max_route_disagreement)},
                {"cancellation_residual", decimal(res.diagnostics.cancellation_residual)},
                {"direction", rational_vector(res.diagnostics.direction)},
                {"second_direction", rational_vector(res.diagnostics.second_direction)}}}};
}

struct Tracker {
  Real worst = 0;
  Real threshold;
  bool exact_failure = false;
  void add(const Real& residual) { worst = std::max(worst, residual); }
  bool pass() const { return !exact_failure && worst <= threshold; }
};

json verdict(const Tracker& t, const char* what) {
  return json{{"quantity", what}, {"max_residual", decimal(t.worst)}, {"threshold", to_decimal(t.threshold, 6)},
              {"pass", t.pass()}};
}

// Covolume law, dual-lattice products and the volume lemma.
CommandResult verify_covolumes(const RunConfig& config, const VerifyQuery& q, json doc) {
  const int n_max = q.n_max > 0 ? q.n_max : 8;
  const auto provider = make_provider(config);
  Tracker law{0, Real(0)}, dual{0, Real("1e-30")}, lemma{0, Real("1e-30")};
  for (int n = 2; n <= std::max(12, n_max); ++n) {
    const auto borel = rootdata::BlockProfile::minimal(1, n);
    const auto data = rootdata::simple_data(borel, rootdata::BlockProfile::full(1, n));
    const auto cov = rootdata::covolume(data.coroots);
    const bool exact = cov.gram_determinant == n;
    if (!exact) law.exact_failure = true;
    const Real residual = relative_difference(cov.value(), sqrt(Real(n)));
    law.add(residual);
    doc["results"].push_back({{"check", "covolume_law"}, {"n", n}, {"gram_determinant", to_string(cov.gram_determinant)},
                              {"exact", exact}, {"relative_residual", decimal(residual)}});
  }
  for (int n = 2; n <= n_max; ++n) {
    const auto borel = rootdata::BlockProfile::minimal(1, n);
    for (const auto& p : rootdata::enumerate_parabolics(1, n)) {
      const auto data = rootdata::simple_data(borel, p);
      const auto c1 = rootdata::covolume(data.coweights);
      const auto c2 = rootdata::covolume(data.coroots);
      if (c1.gram_determinant * c2.gram_determinant != 1) dual.exact_failure = true;
      const Real residual = abs(c1.value() * c2.value() - 1);
      dual.add(residual);
      doc["results"].push_back({{"check", "dual_lattice_product"}, {"n", n}, {"P", composition_json(p.composition())},
                                {"exact", c1.gram_determinant * c2.gram_determinant == 1},
                                {"residual", decimal(residual)}});
    }
  }
  for (int d = 1; d <= n_max; ++d) {
    for (int r = 1; d * r <= n_max; ++r) {
      const auto p0 = rootdata::BlockProfile::minimal(d, r);
      const auto g = rootdata::BlockProfile::full(d, r);
      const Real z = d * provider->Ztilde_value(d);
      const Real cov_g = rootdata::covolume(rootdata::simple_data(p0, g).coweights).value();
      const Real vol_gx = provider->vol_MX(g);
      for (const auto& p : rootdata::enumerate_parabolics(d, r)) {
        const Real cov_p = rootdata::covolume(rootdata::simple_data(p0, p).coweights).value();
        const Real product = cov_p / cov_g * vol_gx / provider->vol_MX(p) * pow(z, Real(p.length() - 1));
        const Real residual = abs(product - 1);
        lemma.add(residual);
        doc["results"].push_back({{"check", "volume_lemma"}, {"d", d}, {"r", r},
                                  {"P", composition_json(p.composition())}, {"residual", decimal(residual)}});
      }
    }
  }
  doc["diagnostics"] = {{"covolume_law", verdict(law, "relative |covol - sqrt(n)|, exact Gram determinant")},
                        {"dual_lattice_product", verdict(dual, "|covol(coweights) covol(coroots) - 1|")},
                        {"volume_lemma", verdict(lemma, "|volume lemma product - 1|")}};
  const bool ok = law.pass() && dual.pass() && lemma.pass();
  doc["diagnostics"]["pass"] = ok;
  return {doc, ok ? 0 : 1};
}

CommandResult verify_cp(const RunConfig& config, const VerifyQuery& q, json doc) {
  const int n_max = q.n_max > 0 ? q.n_max : 6;
  const int count = q.count > 0 ? q.count : 20;
  const auto provider = make_provider(config);
  Tracker agree{0, Real("1e-25")};
  Tracker cancel{0, pow2(-config.effective_tolerance_exponent())};
  gm::RouteOptions ropt;
  ropt.guard_order = config.jet_guard_order;
  ropt.tolerance = cancel.threshold;
  for (int d = 1; d <= n_max; ++d) {
    for (int r = 1; d * r <= n_max; ++r) {
      const gm::Level level(d, {r});
      Real worst = 0;
      for (int i = 0; i < count; ++i) {
        const auto germ = gm::random_test_germ(level, *provider, config.seed, i);
        const auto dir = gm::random_direction(level, config.seed + 7919ULL * static_cast<std::uint64_t>(i + 1));
        const auto a = gm::c(germ, level, dir, ropt);
        const auto b = gm::tilde_c(germ, level, dir, ropt);
        const Real spread = relative_difference(a.value, b.value);
        worst = std::max(worst, spread);
        agree.add(spread);
        cancel.add(std::max(a.residual, b.residual));
      }
      doc["results"].push_back({{"d", d}, {"r", r}, {"germs", count}, {"max_relative_disagreement", decimal(worst)}});
    }
  }
  doc["diagnostics"] = {{"c_vs_tilde_c", verdict(agree, "relative |c - tilde_c|")},
                        {"cancellation", verdict(cancel, "relative cancelled coefficient")}};
  const bool ok = agree.pass() && cancel.pass();
  doc["diagnostics"]["pass"] = ok;
  return {doc, ok ? 0 : 1};
}

CommandResult verify_routes(const RunConfig& config, const VerifyQuery& q, json doc) {
  const int n_max = q.n_max > 0 ? q.n_max : 6;
  const auto provider = make_provider(config);
  std::vector<std::string> place_sets{"", "2", "2,3,5"};
  if (!q.places.empty()) place_sets.push_back(q.places);
  auto opt = options_for(config);
  opt.route_tolerance = 1;  // record the spread instead of failing fast
  Tracker spread{0, Real("1e-25")};
  Tracker cancel{0, pow2(-config.effective_tolerance_exponent())};
  Tracker invariance{0, Real("1e-25")};
  for (const auto& places : place_sets) {
    const auto s = zeta::PlaceSet::parse(places);
    for (int d = 1; d <= n_max; ++d) {
      for (int r = 1; d * r <= n_max; ++r) {
        std::map<rootdata::Composition, Real> by_multiset;
        for (const auto& levi : rootdata::enumerate_parabolics(d, r)) {
          const auto res = coeff::a_coefficient(*provider, d, levi.composition(), s, opt);
          spread.add(res.diagnostics.max_route_disagreement);
          cancel.add(res.diagnostics.cancellation_residual);
          auto key = levi.composition();
          std::sort(key.begin(), key.end(), std::greater<>());
          if (auto it = by_multiset.find(key); it != by_multiset.end())
            invariance.add(relative_difference(it->second, res.a_value));
          else
            by_multiset.emplace(key, res.a_value);
          doc["results"].push_back({{"d", d}, {"r", r}, {"L", composition_json(levi.composition())}, {"S", s.str()},
                                    {"a", decimal(res.a_value)},
                                    {"max_route_disagreement", decimal(res.diagnostics.max_route_disagreement)},
                                    {"cancellation_residual", decimal(res.diagnostics.cancellation_residual)}});
        }
      }
    }
  }
  doc["diagnostics"] = {{"route_agreement", verdict(spread, "relative spread of the four routes")},
                        {"cancellation", verdict(cancel, "relative cancelled coefficient")},
                        {"w_invariance", verdict(invariance, "relative |a^L - a^{wL}|")}};
  const bool ok = spread.pass() && cancel.pass() && invariance.pass();
  doc["diagnostics"]["pass"] = ok;
  return {doc, ok ? 0 : 1};
}

CommandResult verify_unit_extension(const RunConfig& config, const VerifyQuery& q, json doc) {
  const int n_max = q.n_max > 0 ? q.n_max : 6;
  const int count = q.count > 0 ? q.count : 10;
  const auto provider = make_provider(config);
  Tracker agree{0, Real("1e-25")};
  for (int d = 1; d <= n_max; ++d) {
    for (int r = 1; d * r <= n_max; ++r) {
      const auto p0 = rootdata::BlockProfile::minimal(d, r);
      const auto g = rootdata::BlockProfile::full(d, r);
      for (const auto& p : rootdata::enumerate_parabolics(d, r)) {
        const auto hat = rootdata::hat_theta(p0, p);
        const auto theta = rootdata::theta(p, g);
        std::mt19937_64 engine(config.seed * 31ULL + static_cast<std::uint64_t>(d * 100 + r));
        std::uniform_int_distribution<long> draw(-40, 40);
        Real worst = 0;
        int done = 0;
        for (int attempt = 0; done < count && attempt < 100 * count; ++attempt) {
          std::vector<Rational> values;
          for (int b = 0; b < r; ++b) values.emplace_back(draw(engine), 400);
          const LinearForm lambda = rootdata::project(rootdata::from_block_values(values, d), g).upper;
          if (hat.product(lambda) == 0 || theta.product(lambda) == 0) continue;
          const Real lhs = coeff::J_tilde_unit_value(*provider, d, r, rootdata::project(lambda, p).upper);
          const Real rhs = hat.evaluate(lambda) * coeff::J_P_unit_value(*provider, p, lambda) * theta.evaluate(lambda);
          const Real residual = relative_difference(lhs, rhs);
          worst = std::max(worst, residual);
          agree.add(residual);
          ++done;
        }
        if (done < count) agree.exact_failure = true;
        doc["results"].push_back({{"d", d}, {"r", r}, {"P", composition_json(p.composition())}, {"points", done},
                                  {"max_relative_residual", decimal(worst)}});
      }
    }
  }
  doc["diagnostics"] = {{"identity", verdict(agree, "relative |J~(lambda^P) - hat_theta J_P theta|")}};
  doc["diagnostics"]["pass"] = agree.pass();
  return {doc, agree.pass() ? 0 : 1};
}

orbits::Partition witness_type(const orbits::LeviDatum& levi, std::uint64_t seed) {
  orbits::Partition best;
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto type = orbits::rank_powers_oracle(orbits::induction_witness(levi, seed * 3 + s));
    if (best.empty() || orbits::dominates(type, best)) best = type;
  }
  return best;
}

CommandResult verify_induction(const RunConfig& config, const VerifyQuery& q, json doc) {
  const int n_max = q.n_max > 0 ? q.n_max : 8;
  int checked = 0;
  int failures = 0;
  for (int n = 1; n <= n_max; ++n) {
    int local = 0;
    for (const auto& levi : orbits::enumerate_levi_data(n)) {
      const auto expected = orbits::induce(levi);
      const auto found = witness_type(levi, config.seed);
      ++checked;
      ++local;
      if (expected != found) {
        ++failures;
        doc["results"].push_back({{"check", "induction"}, {"levi", levi.str()}, {"expected", expected.str()},
                                  {"rank_oracle", found.str()}});
      }
    }
    doc["results"].push_back({{"check", "induction"}, {"n", n}, {"tuples", local}});
  }
  int xp_checked = 0;
  for (int n = 1; n <= n_max + 2; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (const auto& p : rootdata::enumerate_parabolics(d, n / d)) {
        ++xp_checked;
        const auto expected = orbits::jordan_type(p);
        const auto found = orbits::rank_powers_oracle(orbits::block_nilpotent_matrix(p));
        if (expected != found) {
          ++failures;
          doc["results"].push_back({{"check", "X_P"}, {"d", d}, {"P", composition_json(p.composition())},
                                    {"expected", expected.str()}, {"rank_oracle", found.str()}});
        }
      }
    }
  }
  doc["diagnostics"] = {{"levi_orbit_tuples", checked}, {"block_matrices", xp_checked}, {"mismatches", failures},
                        {"pass", failures == 0}};
  return {doc, failures == 0 ? 0 : 1};
}

void render_value(std::ostringstream& out, const json& v) {
  if (v.is_string())
    out << v.get<std::string>();
  else
    out << v.dump();
}

}  // namespace

long RunConfig::effective_tolerance_exponent() const {
  return tolerance_exponent > 0 ? tolerance_exponent : static_cast<long>(precision_bits / 2);
}

json RunConfig::to_json() const {
  return json{{"precision_bits", precision_bits}, {"jet_guard_order", jet_guard_order}, {"seed", seed},
              {"field", field},           {"tolerance_exponent", effective_tolerance_exponent()},
              {"jobs", jobs}};
}

unsigned default_precision_from_env() {
  if (const char* env = std::getenv("ARTHUR_COEFF_PREC")) {
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 32 && bits <= 1u << 20) return static_cast<unsigned>(bits);
    throw std::invalid_argument("ARTHUR_COEFF_PREC must be an integer number of bits >= 32");
  }
  return kDefaultPrecisionBits;
}

CommandResult cmd_coeff(const RunConfig& config, int d, int r, const std::string& places) {
  check_dimensions(d, r);
  PrecisionScope scope(config.precision_bits);
  json doc = document(config, {{"command", "coeff"}, {"d", d}, {"r", r}, {"n", d * r}, {"S", places}});
  const auto provider = make_provider(config);
  const auto s = zeta::PlaceSet::parse(places);
  doc["query"]["S"] = s.str();
  try {
    const auto ex = coeff::expansion(*provider, d, r, s, options_for(config));
    Real spread = 0;
    Real residual = 0;
    for (const auto& term : ex.terms) {
      doc["results"].push_back(coefficient_row(term.coefficient));
      spread = std::max(spread, term.coefficient.diagnostics.max_route_disagreement);
      residual = std::max(residual, term.coefficient.diagnostics.cancellation_residual);
    }
    doc["diagnostics"] = {{"status", "ok"},
                          {"vol_M0", decimal(ex.vol_m0)},
                          {"max_route_disagreement", decimal(spread)},
                          {"max_cancellation_residual", decimal(residual)},
                          {"route_tolerance", to_decimal(coeff::route_tolerance(options_for(config)), 6)}};
    return {doc, 0};
  } catch (const coeff::RouteDisagreement& e) {
    doc["diagnostics"] = {{"status", "route-disagreement"}, {"error", e.what()}, {"spread", decimal(e.spread())}};
    return {doc, 3};
  } catch (const CancellationError& e) {
    doc["diagnostics"] = {{"status", "cancellation-failure"}, {"error", e.what()}, {"residual", decimal(e.residual())}};
    return {doc, 3};
  }
}

CommandResult cmd_expansion(const RunConfig& config, int d, int r, const std::string& places) {
  check_dimensions(d, r);
  PrecisionScope scope(config.precision_bits);
  const auto provider = make_provider(config);
  const auto s = zeta::PlaceSet::parse(places);
  json doc = document(config, {{"command", "expansion"}, {"d", d}, {"r", r}, {"n", d * r}, {"S", s.str()}});
  try {
    const auto ex = coeff::expansion(*provider, d, r, s, options_for(config));
    for (const auto& term : ex.terms) {
      json row = coefficient_row(term.coefficient);
      row["local_integral"] = term.local_symbol;
      row["class_size"] = term.pair.class_size.str();
      row["standard_levi_count"] = term.pair.standard_count.str();
      doc["results"].push_back(std::move(row));
    }
    doc["diagnostics"] = {{"status", "ok"},
                          {"orbit", ex.orbit.str()},
                          {"vol_M0", decimal(ex.vol_m0)},
                          {"terms", ex.terms.size()},
                          {"formula", "J_o(f_S (x) 1^S) = sum over classes of weyl_weight * a_tilde * local_integral"}};
    return {doc, 0};
  } catch (const coeff::RouteDisagreement& e) {
    doc["diagnostics"] = {{"status", "route-disagreement"}, {"error", e.what()}, {"spread", decimal(e.spread())}};
    return {doc, 3};
  } catch (const CancellationError& e) {
    doc["diagnostics"] = {{"status", "cancellation-failure"}, {"error", e.what()}, {"residual", decimal(e.residual())}};
    return {doc, 3};
  }
}

CommandResult cmd_zeta(const RunConfig& config, const ZetaQuery& q) {
  PrecisionScope scope(config.precision_bits);
  const auto provider = make_provider(config);
  const Rational at = parse_rational(q.at);
  if (q.order < 0) throw std::invalid_argument("order must be non-negative");
  json doc = document(config, {{"command", "zeta"}, {"eval", q.eval}, {"at", to_string(at)}, {"n", q.n},
                               {"order", q.order}, {"S", q.places}});
  Jet jet;
  const Rational x = at - q.n;
  const auto s = zeta::PlaceSet::parse(q.places);
  if (q.eval == "xi") {
    jet = provider->xi_jet(at, q.order);
  } else if (q.eval == "zeta") {
    jet = zeta::riemann_zeta_jet(at, q.order);
  } else if (q.eval == "xi_local") {
    if (q.places == "inf")
      jet = provider->xi_archimedean_jet(at, q.order);
    else if (s.primes.size() == 1 && !s.archimedean)
      jet = provider->xi_prime_jet(s.primes[0], at, q.order);
    else
      throw std::invalid_argument("xi_local needs --S set to one prime or 'inf'");
  } else if (q.eval == "Z") {
    jet = provider->Z_jet(q.n, x, q.order);
  } else if (q.eval == "Ztilde") {
    jet = provider->Ztilde_jet(q.n, x, q.order);
  } else if (q.eval == "ZS") {
    jet = provider->ZS_jet(q.n, s, x, q.order);
  } else if (q.eval == "ZtildeS") {
    jet = provider->Ztilde_S_jet(q.n, s, x, q.order);
  } else {
    throw std::invalid_argument("unknown --eval '" + q.eval + "' (xi, xi_local, zeta, Z, Ztilde, ZS, ZtildeS)");
  }
  for (int p = jet.valuation(); p <= q.order; ++p)
    doc["results"].push_back({{"power", p}, {"coefficient", decimal(jet.coefficient(p))}});
  doc["diagnostics"] = {{"laurent", !jet.is_analytic()}, {"precision_bits", working_precision()}};
  if (jet.is_analytic() || jet.max_abs_below(0) == 0) doc["diagnostics"]["value"] = decimal(jet.coefficient(0));
  return {doc, 0};
}

CommandResult cmd_volumes(const RunConfig& config, int d, int r) {
  check_dimensions(d, r);
  PrecisionScope scope(config.precision_bits);
  const auto provider = make_provider(config);
  json doc = document(config, {{"command", "volumes"}, {"d", d}, {"r", r}, {"n", d * r}});
  const int n = d * r;
  for (int m = 1; m <= n; ++m)
    doc["results"].push_back({{"quantity", "vol([GL_m]^1)"}, {"m", m}, {"value", decimal(provider->vol_GL(m))}});
  const auto p0 = rootdata::BlockProfile::minimal(d, r);
  const auto g = rootdata::BlockProfile::full(d, r);
  const Real z = d * provider->Ztilde_value(d);
  const Real cov_g = rootdata::covolume(rootdata::simple_data(p0, g).coweights).value();
  Real worst = 0;
  for (const auto& p : rootdata::enumerate_parabolics(d, r)) {
    const Real cov_p = rootdata::covolume(rootdata::simple_data(p0, p).coweights).value();
    const Real product = cov_p / cov_g * provider->vol_MX(g) / provider->vol_MX(p) * pow(z, Real(p.length() - 1));
    worst = std::max(worst, Real(abs(product - 1)));
    doc["results"].push_back({{"quantity", "vol([M_X]^1)"}, {"P", composition_json(p.composition())},
                              {"value", decimal(provider->vol_MX(p))}, {"volume_lemma_product", decimal(product)}});
  }
  doc["results"].push_back({{"quantity", "vol([M_0]^1)"}, {"value", decimal(provider->vol_M0(d, r))}});
  doc["diagnostics"] = {{"max_volume_lemma_residual", decimal(worst)}, {"precision_bits", working_precision()}};
  return {doc, 0};
}

CommandResult cmd_orbits(const RunConfig& config, int d, int r) {
  check_dimensions(d, r);
  json doc = document(config, {{"command", "orbits"}, {"d", d}, {"r", r}, {"n", d * r}});
  const auto target = orbits::rectangle(r, d);
  bool all_ok = true;
  for (const auto& pair : orbits::enumerate_inducing_pairs(d, r)) {
    const auto oracle = witness_type(pair.levi, config.seed);
    all_ok = all_ok && oracle == target;
    doc["results"].push_back({{"levi", pair.levi.str()},
                              {"levi_parts", pair.levi.parts},
                              {"levi_m0", composition_json(pair.levi_m0)},
                              {"induced", orbits::induce(pair.levi).str()},
                              {"rank_oracle", oracle.str()},
                              {"weyl_weight", to_string(pair.weyl_weight)},
                              {"class_size", pair.class_size.str()},
                              {"standard_levi_count", pair.standard_count.str()}});
  }
  doc["diagnostics"] = {{"orbit", target.str()}, {"classes", doc["results"].size()}, {"rank_oracle_agrees", all_ok}};
  return {doc, all_ok ? 0 : 1};
}

CommandResult cmd_verify(const RunConfig& config, const VerifyQuery& q) {
  PrecisionScope scope(config.precision_bits);
  json doc = document(config, {{"command", "verify"}, {"suite", q.suite}, {"n", q.n_max}, {"count", q.count}});
  if (q.suite == "covolumes") return verify_covolumes(config, q, std::move(doc));
  if (q.suite == "cp-identity") return verify_cp(config, q, std::move(doc));
  if (q.suite == "routes") return verify_routes(config, q, std::move(doc));
  if (q.suite == "prolongement4") return verify_unit_extension(config, q, std::move(doc));
  if (q.suite == "induction-oracle") return verify_induction(config, q, std::move(doc));
  throw std::invalid_argument("unknown suite '" + q.suite +
                              "' (cp-identity, covolumes, prolongement4, induction-oracle, routes)");
}

std::string render_table(const json& doc) {
  std::ostringstream out;
  out << "config:";
  for (const auto& [key, value] : doc.at("config").items()) {
    out << ' ' << key << '=';
    render_value(out, value);
  }
  out << "\nquery:";
  for (const auto& [key, value] : doc.at("query").items()) {
    out << ' ' << key << '=';
    render_value(out, value);
  }
  out << '\n';
  const auto& rows = doc.at("results");
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (!value.is_object() && std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::ostringstream cell;
      if (row.contains(columns[i])) render_value(cell, row.at(columns[i]));
      line.push_back(cell.str());
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << columns[i];
  out << '\n';
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << line[i];
    out << '\n';
  }
  out << "diagnostics: " << doc.at("diagnostics").dump(2) << '\n';
  return out.str();
}

}  // namespace arthur::cli
