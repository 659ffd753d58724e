#include "arthur/gmfamily.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace arthur::gm {

SmoothGerm constant_germ(const Real& c) {
  return {[c](const LinearForm&, int order) { return Jet::constant(c, order); }, "constant"};
}

SmoothGerm exponential_germ(const LinearForm& h) {
  return {[h](const LinearForm& dir, int order) { return Jet::exponential(to_real(pairing(dir, h)), order); },
          "exponential"};
}

SmoothGerm polynomial_germ(std::vector<Monomial> terms) {
  return {[terms = std::move(terms)](const LinearForm& dir, int order) {
            Jet out = Jet::constant(Real(0), order);
            for (const auto& m : terms) {
              Rational p = 1;
              for (const auto& h : m.factors) p *= pairing(dir, h);
              out += Jet::monomial(m.coefficient * to_real(p), static_cast<int>(m.factors.size()), order) +
                     Jet::constant(Real(0), order);
            }
            return out;
          },
          "polynomial"};
}

SmoothGerm zeta_product_germ(const zeta::ZetaProvider& provider, int m, const zeta::PlaceSet& s,
                             std::vector<LinearForm> axes) {
  return {[&provider, m, s, axes = std::move(axes)](const LinearForm& dir, int order) {
            Jet out = Jet::constant(Real(1), order);
            if (axes.empty()) return out;
            const Jet base = provider.Ztilde_S_jet(m, s, Rational(0), order);
            const Jet normalized = base * (1 / base.coefficient(0));
            for (const auto& axis : axes) out *= compose_linear(normalized, pairing(dir, axis));
            return out;
          },
          "zeta-product"};
}

SmoothGerm product_germ(SmoothGerm a, SmoothGerm b) {
  std::string label = a.label + "*" + b.label;
  return {[a = std::move(a), b = std::move(b)](const LinearForm& dir, int order) {
            return a.jet(dir, order) * b.jet(dir, order);
          },
          label};
}

SmoothGerm permuted_germ(SmoothGerm phi, std::vector<int> perm) {
  std::string label = phi.label + "@w";
  return {[phi = std::move(phi), perm = std::move(perm)](const LinearForm& dir, int order) {
            return phi.jet(act(perm, dir), order);
          },
          label};
}

LinearForm act(const std::vector<int>& perm, const LinearForm& lambda) {
  if (perm.size() != lambda.size()) throw std::invalid_argument("act: dimension mismatch");
  LinearForm out(lambda.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = lambda[static_cast<std::size_t>(perm[i])];
  return out;
}

namespace {

std::vector<std::vector<int>> block_permutations(int d, const Composition& levi) {
  // permutations of d-block indices preserving each L-block
  std::vector<std::vector<int>> blocks{{}};
  int first = 0;
  for (int ri : levi) {
    std::vector<int> local(static_cast<std::size_t>(ri));
    std::iota(local.begin(), local.end(), first);
    std::vector<std::vector<int>> next;
    do {
      for (const auto& prefix : blocks) {
        auto extended = prefix;
        extended.insert(extended.end(), local.begin(), local.end());
        next.push_back(std::move(extended));
      }
    } while (std::next_permutation(local.begin(), local.end()));
    blocks = std::move(next);
    first += ri;
  }
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (const auto& sigma : blocks) {
    std::vector<int> perm;
    for (int b : sigma)
      for (int j = 0; j < d; ++j) perm.push_back(b * d + j);
    out.push_back(std::move(perm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Term {
  Real coefficient;
  Jet jet;
};

// Sum of coefficient * jet, each jet analytic through t^k; the coefficients of
// t^0..t^{k-1} must cancel and the coefficient of t^k is returned.
RouteValue combine(const std::vector<Term>& terms, int k, const RouteOptions& opt, const char* route) {
  Jet sum = Jet::constant(Real(0), k);
  Real scale = 0;
  for (const auto& t : terms) {
    const Jet scaled = t.jet.truncated(k) * t.coefficient;
    scale = std::max(scale, scaled.max_abs());
    sum += scaled;
  }
  if (scale == 0) scale = 1;
  const Real residual = sum.max_abs_below(k) / scale;
  const Real tol = opt.tolerance > 0 ? opt.tolerance : default_tolerance();
  if (residual > tol) {
    int worst = 0;
    for (int p = 0; p < k; ++p)
      if (abs(sum.coefficient(p)) / scale == residual) worst = p - k;
    std::ostringstream msg;
    msg << route << ": cancellation failure at t^" << worst << ", relative residual "
        << residual.str(6, std::ios::scientific);
    throw CancellationError(msg.str(), worst, residual);
  }
  return {sum.coefficient(k), residual, k};
}

}  // namespace

Level::Level(int d, Composition levi)
    : p0_(BlockProfile::minimal(d, std::accumulate(levi.begin(), levi.end(), 0))),
      levi_(d, std::move(levi)),
      k_(p0_.r() - levi_.length()),
      theta_0_l_(rootdata::theta(p0_, levi_)),
      weyl_(block_permutations(d, levi_.composition())) {
  for (const auto& q : rootdata::parabolics_between(p0_, levi_)) {
    between_.push_back(Between{q, rootdata::epsilon(q, levi_), rootdata::epsilon(p0_, q), rootdata::hat_theta(p0_, q),
                               rootdata::theta(q, levi_)});
  }
}

GenericDirection certify(const Level& level, const LinearForm& lambda) {
  if (lambda.size() != static_cast<std::size_t>(level.n())) throw std::domain_error("certify: dimension mismatch");
  if (!rootdata::is_block_constant(lambda, level.minimal()) || !rootdata::has_zero_block_sums(lambda, level.levi()))
    throw std::domain_error("certify: direction is not in a_0^L");
  GenericDirection out{lambda, {}};
  for (const auto& b : level.between()) {
    const Rational h = b.hat_theta_0_q.product(lambda);
    const Rational t = b.theta_q_l.product(lambda);
    if (h == 0 || t == 0) throw std::domain_error("certify: a θ or θ̂ factor vanishes");
    out.certificate.push_back(h);
    out.certificate.push_back(t);
  }
  // θ_0^L(wλ) ≠ 0 for every w in W_0^L: distinct d-block values inside each L-block
  const auto values = rootdata::block_values(lambda, level.d());
  Rational differences = 1;
  int first = 0;
  for (int ri : level.levi().composition()) {
    for (int i = first; i < first + ri; ++i)
      for (int j = i + 1; j < first + ri; ++j) differences *= values[i] - values[j];
    first += ri;
  }
  if (differences == 0) throw std::domain_error("certify: θ_0^L vanishes on a W_0^L translate");
  out.certificate.push_back(differences);
  return out;
}

GenericDirection random_direction(const Level& level, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<long> draw(-40, 40);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> values;
    for (int b = 0; b < level.r(); ++b) values.emplace_back(draw(engine));
    LinearForm lambda = rootdata::from_block_values(values, level.d());
    lambda = rootdata::project(lambda, level.levi()).upper;
    try {
      return certify(level, lambda);
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("random_direction: no generic point found");
}

SmoothGerm random_test_germ(const Level& level, const zeta::ZetaProvider& provider, std::uint64_t seed, int index) {
  std::mt19937_64 engine(seed * 1000003ULL + static_cast<std::uint64_t>(index));
  std::uniform_int_distribution<long> small(-3, 3);
  auto block_form = [&](long denominator) {
    std::vector<Rational> values;
    for (int b = 0; b < level.r(); ++b) values.emplace_back(small(engine), denominator);
    return rootdata::from_block_values(values, level.d());
  };
  switch (index % 3) {
    case 0:
      return exponential_germ(block_form(4));
    case 1: {
      std::vector<Monomial> terms{{Real(1), {}}};
      for (int degree = level.k(); degree <= level.k() + 2; ++degree) {
        Monomial m{Real(small(engine)) / 2 + Real(1) / 3, {}};
        for (int i = 0; i < degree; ++i) m.factors.push_back(block_form(1));
        terms.push_back(std::move(m));
      }
      return polynomial_germ(std::move(terms));
    }
    default: {
      static const std::vector<std::string> place_choices{"", "2", "3", "2,3"};
      const auto s = zeta::PlaceSet::parse(place_choices[engine() % place_choices.size()]);
      std::vector<LinearForm> axes;
      for (int i = 0; i < std::max(1, level.k()); ++i) axes.push_back(block_form(5));
      return product_germ(zeta_product_germ(provider, level.d(), s, std::move(axes)), exponential_germ(block_form(6)));
    }
  }
}

RouteValue tilde_c(const SmoothGerm& phi, const Level& level, const GenericDirection& dir, const RouteOptions& opt) {
  const int k = level.k();
  const int order = k + opt.guard_order;
  std::vector<Term> terms;
  for (const auto& b : level.between()) {
    const LinearForm upper = rootdata::project(dir.lambda, b.q).upper;
    const Real denom = b.hat_theta_0_q.evaluate(dir.lambda) * b.theta_q_l.evaluate(dir.lambda);
    terms.push_back({Real(b.eps_q_l) / denom, phi.jet(upper, order)});
  }
  return combine(terms, k, opt, "tilde_c");
}

RouteValue c(const SmoothGerm& phi, const Level& level, const GenericDirection& dir, const RouteOptions& opt) {
  const int k = level.k();
  const int order = k + opt.guard_order;
  std::vector<Term> terms;
  for (const auto& b : level.between()) {
    const LinearForm lower = rootdata::project(dir.lambda, b.q).lower;
    const Real denom = b.hat_theta_0_q.evaluate(dir.lambda) * b.theta_q_l.evaluate(dir.lambda);
    terms.push_back({Real(b.eps_0_q) / denom, phi.jet(lower, order)});
  }
  return combine(terms, k, opt, "c");
}

RouteValue symmetrized_value(const SmoothGerm& phi, const Level& level, const GenericDirection& dir,
                             const RouteOptions& opt) {
  const int k = level.k();
  const int order = k + opt.guard_order;
  const Real weyl_order = Real(static_cast<long>(level.weyl_group().size()));
  std::vector<Term> terms;
  for (const auto& w : level.weyl_group()) {
    const LinearForm moved = act(w, dir.lambda);
    terms.push_back({1 / (weyl_order * level.theta_0_l().evaluate(moved)), phi.jet(moved, order)});
  }
  return combine(terms, k, opt, "symmetrized");
}

RouteValue arthur_derivative_value(const SmoothGerm& phi, const Level& level, const GenericDirection& dir,
                                   const RouteOptions&) {
  const int k = level.k();
  const Real weyl_order = Real(static_cast<long>(level.weyl_group().size()));
  Real sum = 0;
  for (const auto& w : level.weyl_group()) {
    const LinearForm moved = act(w, dir.lambda);
    // the t^k Taylor coefficient is (1/k!) (d/dt)^k at t = 0
    sum += phi.jet(moved, k).coefficient(k) / level.theta_0_l().evaluate(moved);
  }
  return {sum / weyl_order, Real(0), k};
}

}  // namespace arthur::gm
