#include "arthur/coefficients.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace arthur::coeff {

namespace {

Real resolve(const Real& configured, unsigned divisor) {
  if (configured > 0) return configured;
  return pow2(-static_cast<long>(working_precision() / divisor));
}

std::uint64_t second_seed(std::uint64_t seed) { return seed ^ 0x5DEECE66DULL; }

Real theta_inverse_scalar(const rootdata::ThetaFactor& theta, const LinearForm& lambda) {
  const Rational p = theta.product(lambda);
  if (p == 0) throw std::domain_error("θ vanishes at the requested point");
  return 1 / theta.evaluate(lambda);
}

Real j_tilde_constant(const zeta::ZetaProvider& provider, int d, int r) {
  const auto p0 = BlockProfile::minimal(d, r);
  const auto g = BlockProfile::full(d, r);
  const auto hat = rootdata::hat_theta(p0, g);
  return pow(Real(d), Real(r - 1)) * hat.covol().inverse_value() * provider.vol_MX(g);
}

}  // namespace

Real route_tolerance(const Options& opt) { return resolve(opt.route_tolerance, 3); }

gm::SmoothGerm phi_for_L(const zeta::ZetaProvider& provider, int d, const Composition& levi, const zeta::PlaceSet& s) {
  const int r = [&] {
    int total = 0;
    for (int part : levi) total += part;
    return total;
  }();
  const auto data = rootdata::simple_data(BlockProfile::minimal(d, r), BlockProfile(d, levi));
  std::vector<LinearForm> axes;
  for (const auto& cw : data.coweights) axes.push_back(Rational(1, d) * cw);
  auto germ = gm::zeta_product_germ(provider, d, s, std::move(axes));
  germ.label = "phi_L";
  return germ;
}

CoefficientResult a_coefficient(const zeta::ZetaProvider& provider, int d, const Composition& levi,
                                const zeta::PlaceSet& s, const Options& opt) {
  const gm::Level level(d, levi);
  const auto phi = phi_for_L(provider, d, levi, s);
  const auto dir = gm::random_direction(level, opt.seed);
  const auto dir2 = gm::random_direction(level, second_seed(opt.seed));
  gm::RouteOptions ropt;
  ropt.guard_order = opt.guard_order;
  ropt.tolerance = resolve(opt.cancellation_tolerance, 2);

  CoefficientResult out;
  out.s = s;
  out.levi_m0 = levi;
  const auto sym = gm::symmetrized_value(phi, level, dir, ropt);
  const auto tc = gm::tilde_c(phi, level, dir, ropt);
  const auto cc = gm::c(phi, level, dir, ropt);
  const auto ar = gm::arthur_derivative_value(phi, level, dir2, ropt);
  auto& diag = out.diagnostics;
  diag.routes = {{"symmetrized", sym.value, sym.residual},
                 {"tilde_c", tc.value, tc.residual},
                 {"c", cc.value, cc.residual},
                 {"arthur_derivative", ar.value, ar.residual}};
  diag.direction = dir.lambda;
  diag.second_direction = dir2.lambda;
  for (const auto& route : diag.routes) {
    diag.max_route_disagreement = std::max(diag.max_route_disagreement, relative_difference(route.value, sym.value));
    diag.cancellation_residual = std::max(diag.cancellation_residual, route.residual);
  }
  out.a_value = sym.value;
  if (diag.max_route_disagreement > route_tolerance(opt)) {
    std::ostringstream msg;
    msg << "routes for a^L disagree: relative spread " << diag.max_route_disagreement.str(6, std::ios::scientific);
    throw RouteDisagreement(msg.str(), diag.max_route_disagreement);
  }
  return out;
}

CoefficientResult a_tilde(const zeta::ZetaProvider& provider, int d, int r, const orbits::InducingPair& pair,
                          const zeta::PlaceSet& s, const Options& opt) {
  if (orbits::induce(pair.levi) != orbits::rectangle(r, d) || pair.levi.n() != d * r)
    throw std::invalid_argument("a_tilde: the pair does not induce the orbit (r^d)");
  Composition standard = pair.levi_m0;
  std::sort(standard.begin(), standard.end(), std::greater<>());
  CoefficientResult out = a_coefficient(provider, d, standard, s, opt);
  out.levi = pair.levi;
  out.orbit = orbits::rectangle(r, d);
  out.weyl_weight = pair.weyl_weight;
  out.a_tilde_value = provider.vol_M0(d, r) * out.a_value;
  return out;
}

CoefficientResult a_tilde(const zeta::ZetaProvider& provider, int d, int r, const orbits::LeviDatum& levi,
                          const zeta::PlaceSet& s, const Options& opt) {
  const auto canonical = levi.canonical();
  for (const auto& pair : orbits::enumerate_inducing_pairs(d, r))
    if (pair.levi == canonical) return a_tilde(provider, d, r, pair, s, opt);
  throw std::invalid_argument("a_tilde: " + levi.str() + " does not induce the orbit (r^d)");
}

Jet J_P_unit(const zeta::ZetaProvider& provider, const BlockProfile& p, const LinearForm& direction, int order) {
  const int d = p.d();
  const int r = p.r();
  const auto p0 = BlockProfile::minimal(d, r);
  const auto g = BlockProfile::full(d, r);
  const auto theta_p = rootdata::theta(p, g);
  const int inner = order + r + 1;
  Jet out = Jet::monomial(provider.vol_MX(p) * theta_inverse_scalar(theta_p, direction), -theta_p.degree(), inner);
  const LinearForm upper = rootdata::project(direction, p).upper;
  const Jet z = provider.Z_jet(d, Rational(0), inner);
  for (const auto& cw : rootdata::simple_data(p0, p).coweights) {
    const Rational rate = pairing(upper, cw) / d;
    if (rate == 0) throw std::domain_error("J_P_unit: direction is not generic");
    out *= compose_linear(z, rate);
  }
  return out.truncated(order);
}

Jet J_tilde_unit(const zeta::ZetaProvider& provider, int d, int r, const LinearForm& direction, int order) {
  const auto p0 = BlockProfile::minimal(d, r);
  const auto g = BlockProfile::full(d, r);
  Jet out = Jet::constant(j_tilde_constant(provider, d, r), order);
  const Jet zt = provider.Ztilde_jet(d, Rational(0), order);
  for (const auto& cw : rootdata::simple_data(p0, g).coweights) out *= compose_linear(zt, pairing(direction, cw) / d);
  return out;
}

Real J_P_unit_value(const zeta::ZetaProvider& provider, const BlockProfile& p, const LinearForm& lambda) {
  const int d = p.d();
  const auto p0 = BlockProfile::minimal(d, p.r());
  const auto g = BlockProfile::full(d, p.r());
  Real out = provider.vol_MX(p) * theta_inverse_scalar(rootdata::theta(p, g), lambda);
  const LinearForm upper = rootdata::project(lambda, p).upper;
  for (const auto& cw : rootdata::simple_data(p0, p).coweights) {
    const Rational x = pairing(upper, cw) / d;
    if (x == 0) throw std::domain_error("J_P_unit_value: Z_d evaluated at its pole");
    out *= provider.Z_jet(d, x, 0).coefficient(0);
  }
  return out;
}

Real J_tilde_unit_value(const zeta::ZetaProvider& provider, int d, int r, const LinearForm& lambda) {
  const auto p0 = BlockProfile::minimal(d, r);
  const auto g = BlockProfile::full(d, r);
  Real out = j_tilde_constant(provider, d, r);
  for (const auto& cw : rootdata::simple_data(p0, g).coweights)
    out *= provider.Ztilde_jet(d, pairing(lambda, cw) / d, 0).coefficient(0);
  return out;
}

gm::RouteValue J_o_unit(const zeta::ZetaProvider& provider, int d, int r, const Options& opt) {
  const gm::Level level(d, Composition{r});
  const gm::SmoothGerm germ{[&provider, d, r](const LinearForm& dir, int order) {
                              return J_tilde_unit(provider, d, r, dir, order);
                            },
                            "J_tilde"};
  gm::RouteOptions ropt;
  ropt.guard_order = opt.guard_order;
  ropt.tolerance = resolve(opt.cancellation_tolerance, 2);
  return gm::symmetrized_value(germ, level, gm::random_direction(level, opt.seed), ropt);
}

FormalExpansion expansion(const zeta::ZetaProvider& provider, int d, int r, const zeta::PlaceSet& s,
                          const Options& opt) {
  FormalExpansion out;
  out.d = d;
  out.r = r;
  out.orbit = orbits::rectangle(r, d);
  out.s = s;
  out.vol_m0 = provider.vol_M0(d, r);
  const auto pairs = orbits::enumerate_inducing_pairs(d, r);
  std::vector<CoefficientResult> results(pairs.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
  for (std::size_t start = 0; start < pairs.size(); start += jobs) {
    std::vector<std::future<CoefficientResult>> batch;
    for (std::size_t i = start; i < std::min(pairs.size(), start + jobs); ++i) {
      if (jobs == 1) {
        results[i] = a_tilde(provider, d, r, pairs[i], s, opt);
        continue;
      }
      batch.push_back(std::async(std::launch::async, [&, i] { return a_tilde(provider, d, r, pairs[i], s, opt); }));
    }
    for (std::size_t j = 0; j < batch.size(); ++j) results[start + j] = batch[j].get();
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::ostringstream symbol;
    symbol << "J^G_{" << pairs[i].levi.str() << "}(f_{" << s.str() << "})";
    out.terms.push_back({std::move(results[i]), pairs[i], symbol.str()});
  }
  return out;
}

}  // namespace arthur::coeff
