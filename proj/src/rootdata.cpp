#include "arthur/rootdata.hpp"

#include "arthur/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arthur::rootdata {

LinearForm AmbientSpace::basis_vector(int i) const {
  LinearForm v = zero();
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

BlockProfile::BlockProfile(int d, Composition composition) : d_(d), r_(0), composition_(std::move(composition)) {
  if (d_ < 1) throw std::invalid_argument("BlockProfile: d must be positive");
  if (composition_.empty()) throw std::invalid_argument("BlockProfile: empty composition");
  for (int part : composition_) {
    if (part < 1) throw std::invalid_argument("BlockProfile: composition parts must be positive");
    r_ += part;
  }
}

BlockProfile BlockProfile::full(int d, int r) { return BlockProfile(d, Composition{r}); }

BlockProfile BlockProfile::minimal(int d, int r) {
  if (r < 1) throw std::invalid_argument("BlockProfile: r must be positive");
  return BlockProfile(d, Composition(static_cast<std::size_t>(r), 1));
}

int BlockProfile::block_start(int i) const {
  int start = 0;
  for (int j = 0; j < i; ++j) start += composition_[j] * d_;
  return start;
}

int BlockProfile::block_of(int coordinate) const {
  int end = 0;
  for (int i = 0; i < length(); ++i) {
    end += block_width(i);
    if (coordinate < end) return i;
  }
  throw std::out_of_range("BlockProfile::block_of: coordinate outside R^n");
}

bool BlockProfile::refines(const BlockProfile& coarser) const {
  if (coarser.d_ != d_ || coarser.r_ != r_) return false;
  // every boundary of the coarser profile must be a boundary of this one
  std::vector<int> mine;
  int acc = 0;
  for (int part : composition_) mine.push_back(acc += part);
  acc = 0;
  for (int part : coarser.composition_) {
    acc += part;
    if (std::find(mine.begin(), mine.end(), acc) == mine.end()) return false;
  }
  return true;
}

BlockProfile BlockProfile::borel_relative() const {
  Composition parts;
  for (int part : composition_) parts.push_back(part * d_);
  return BlockProfile(1, parts);
}

namespace {

void compositions_into(int remaining, Composition& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = remaining; first >= 1; --first) {
    prefix.push_back(first);
    compositions_into(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

LinearForm block_indicator(int n, int start, int width, const Rational& value) {
  LinearForm v(static_cast<std::size_t>(n));
  for (int j = start; j < start + width; ++j) v[static_cast<std::size_t>(j)] = value;
  return v;
}

}  // namespace

std::vector<BlockProfile> enumerate_parabolics(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("enumerate_parabolics: d and r must be positive");
  std::vector<Composition> comps;
  Composition prefix;
  compositions_into(r, prefix, comps);
  // depth-first with decreasing first part already yields reverse lexicographic order
  std::vector<BlockProfile> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.emplace_back(d, std::move(c));
  return out;
}

std::vector<BlockProfile> parabolics_between(const BlockProfile& lower, const BlockProfile& upper) {
  if (!lower.refines(upper)) throw std::invalid_argument("parabolics_between: lower does not refine upper");
  std::vector<BlockProfile> out;
  for (auto& p : enumerate_parabolics(lower.d(), lower.r()))
    if (lower.refines(p) && p.refines(upper)) out.push_back(std::move(p));
  return out;
}

SimpleData simple_data(const BlockProfile& p, const BlockProfile& q) {
  if (!p.refines(q)) throw std::invalid_argument("simple_data: P does not refine Q");
  const int n = p.n();
  SimpleData out;
  for (int i = 0; i + 1 < p.length(); ++i) {
    const int boundary = p.block_start(i + 1);
    if (q.block_of(boundary - 1) != q.block_of(boundary)) continue;
    const Rational wi(1, p.block_width(i));
    const Rational wj(1, p.block_width(i + 1));
    out.roots.push_back(block_indicator(n, p.block_start(i), p.block_width(i), wi) -
                        block_indicator(n, p.block_start(i + 1), p.block_width(i + 1), wj));
    LinearForm simple_coroot(static_cast<std::size_t>(n));
    simple_coroot[boundary - 1] = 1;
    simple_coroot[boundary] = -1;
    out.coroots.push_back(project_to_a(simple_coroot, p));
  }
  const std::size_t m = out.roots.size();
  if (m == 0) return out;
  RationalMatrix pairings(m, std::vector<Rational>(m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < m; ++i) pairings[g][i] = pairing(out.roots[g], out.coroots[i]);
  const RationalMatrix x = inverse(pairings);
  RationalMatrix transposed(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) transposed[i][j] = pairings[j][i];
  const RationalMatrix y = inverse(transposed);
  for (std::size_t b = 0; b < m; ++b) {
    LinearForm w(static_cast<std::size_t>(n));
    LinearForm cw(static_cast<std::size_t>(n));
    for (std::size_t g = 0; g < m; ++g) {
      w += x[b][g] * out.roots[g];
      cw += y[b][g] * out.coroots[g];
    }
    out.weights.push_back(std::move(w));
    out.coweights.push_back(std::move(cw));
  }
  return out;
}

Real Covolume::value() const { return sqrt(to_real(gram_determinant)); }
Real Covolume::inverse_value() const { return 1 / value(); }

Covolume covolume(const std::vector<LinearForm>& vectors) {
  const std::size_t m = vectors.size();
  if (m == 0) return {};
  RationalMatrix gram(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = pairing(vectors[i], vectors[j]);
  Rational det = determinant(gram);
  if (det == 0) throw std::domain_error("covolume: linearly dependent vectors");
  return {det};
}

ThetaFactor::ThetaFactor(Covolume covolume, std::vector<LinearForm> forms)
    : covolume_(std::move(covolume)), forms_(std::move(forms)) {}

Rational ThetaFactor::product(const LinearForm& lambda) const {
  Rational p = 1;
  for (const auto& f : forms_) p *= pairing(lambda, f);
  return p;
}

Real ThetaFactor::evaluate(const LinearForm& lambda) const {
  return to_real(product(lambda)) * covolume_.inverse_value();
}

Jet ThetaFactor::along_line(const LinearForm& lambda0, int order) const {
  return Jet::monomial(evaluate(lambda0), degree(), order);
}

ThetaFactor theta(const BlockProfile& p, const BlockProfile& q) {
  auto data = simple_data(p, q);
  Covolume c = covolume(data.coroots);
  return ThetaFactor(std::move(c), std::move(data.coroots));
}

ThetaFactor hat_theta(const BlockProfile& p, const BlockProfile& q) {
  auto data = simple_data(p, q);
  Covolume c = covolume(data.coweights);
  return ThetaFactor(std::move(c), std::move(data.coweights));
}

int epsilon(const BlockProfile& p, const BlockProfile& q) {
  if (!p.refines(q)) throw std::invalid_argument("epsilon: P does not refine Q");
  return ((p.length() - q.length()) % 2 == 0) ? 1 : -1;
}

int epsilon(const BlockProfile& p) { return epsilon(p, BlockProfile::full(p.d(), p.r())); }

LinearForm project_to_a(const LinearForm& lambda, const BlockProfile& p) {
  if (lambda.size() != static_cast<std::size_t>(p.n())) throw std::invalid_argument("project: dimension mismatch");
  LinearForm out(lambda.size());
  for (int i = 0; i < p.length(); ++i) {
    const int start = p.block_start(i);
    const int width = p.block_width(i);
    Rational mean = 0;
    for (int j = start; j < start + width; ++j) mean += lambda[j];
    mean /= width;
    for (int j = start; j < start + width; ++j) out[j] = mean;
  }
  return out;
}

Projection project(const LinearForm& lambda, const BlockProfile& p) {
  LinearForm lower = project_to_a(lambda, p);
  LinearForm upper = lambda - lower;
  return {std::move(upper), std::move(lower)};
}

LinearForm from_block_values(const std::vector<Rational>& values, int d) {
  LinearForm out(values.size() * static_cast<std::size_t>(d));
  for (std::size_t b = 0; b < values.size(); ++b)
    for (int j = 0; j < d; ++j) out[b * d + j] = values[b];
  return out;
}

std::vector<Rational> block_values(const LinearForm& lambda, int d) {
  if (lambda.size() % static_cast<std::size_t>(d) != 0) throw std::invalid_argument("block_values: size not a multiple of d");
  std::vector<Rational> out;
  for (std::size_t b = 0; b < lambda.size(); b += d) {
    for (int j = 1; j < d; ++j)
      if (lambda[b + j] != lambda[b]) throw std::invalid_argument("block_values: vector is not block constant");
    out.push_back(lambda[b]);
  }
  return out;
}

bool is_block_constant(const LinearForm& lambda, const BlockProfile& p) {
  for (int i = 0; i < p.length(); ++i)
    for (int j = p.block_start(i) + 1; j < p.block_start(i) + p.block_width(i); ++j)
      if (lambda[j] != lambda[p.block_start(i)]) return false;
  return true;
}

bool has_zero_block_sums(const LinearForm& lambda, const BlockProfile& p) {
  for (int i = 0; i < p.length(); ++i) {
    Rational s = 0;
    for (int j = p.block_start(i); j < p.block_start(i) + p.block_width(i); ++j) s += lambda[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace arthur::rootdata
