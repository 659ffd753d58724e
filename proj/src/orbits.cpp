#include "arthur/orbits.hpp"

#include "arthur/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace arthur::orbits {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("Partition: negative part");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(static_cast<long long>(v));
  return out;
}

// splitmix64: a fixed, platform independent stream
std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (m == 0) return {Partition()};
  partitions_into(m, m, prefix, out);
  return out;
}

Partition rectangle(int s, int count) { return Partition(std::vector<int>(static_cast<std::size_t>(count), s)); }

int LeviDatum::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

void LeviDatum::validate() const {
  if (parts.size() != orbit.size()) throw std::invalid_argument("LeviDatum: one orbit per factor required");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("LeviDatum: parts must be positive");
    if (orbit[i].size() != parts[i]) throw std::invalid_argument("LeviDatum: orbit does not partition its factor");
  }
}

LeviDatum LeviDatum::canonical() const {
  std::vector<std::pair<int, Partition>> factors;
  for (std::size_t i = 0; i < parts.size(); ++i) factors.emplace_back(parts[i], orbit[i]);
  std::sort(factors.begin(), factors.end(), std::greater<>());
  LeviDatum out;
  for (auto& [p, o] : factors) {
    out.parts.push_back(p);
    out.orbit.push_back(o);
  }
  return out;
}

std::string LeviDatum::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "x" : "") << "GL(" << parts[i] << ")";
  out << ' ';
  for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? "x" : "") << orbit[i].str();
  return out.str();
}

IntMatrix block_nilpotent_matrix(const rootdata::BlockProfile& profile) {
  const int n = profile.n();
  const int d = profile.d();
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int b = 0; b < profile.length(); ++b) {
    const int start = profile.block_start(b);
    const int sub_blocks = profile.composition()[b];
    for (int s = 0; s + 1 < sub_blocks; ++s)
      for (int j = 0; j < d; ++j) m[start + s * d + j][start + (s + 1) * d + j] = 1;
  }
  return m;
}

Partition jordan_type(const rootdata::BlockProfile& profile) {
  std::vector<int> parts;
  for (int ri : profile.composition())
    for (int j = 0; j < profile.d(); ++j) parts.push_back(ri);
  return Partition(parts);
}

Partition induce(const LeviDatum& levi) {
  levi.validate();
  std::size_t width = 0;
  for (const auto& o : levi.orbit) width = std::max(width, o.parts().size());
  std::vector<int> sum(width, 0);
  for (const auto& o : levi.orbit)
    for (std::size_t i = 0; i < o.parts().size(); ++i) sum[i] += o.parts()[i];
  return Partition(sum);
}

Partition rank_powers_oracle(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("rank_powers_oracle: matrix must be square");
  const RationalMatrix base = to_rational(m);
  // ranks[j] = rank(m^j)
  std::vector<std::size_t> ranks{n};
  RationalMatrix power = base;
  for (std::size_t j = 1; j <= n; ++j) {
    ranks.push_back(rank(power));
    if (ranks.back() == 0) break;
    power = multiply(power, base);
  }
  if (ranks.back() != 0) throw std::domain_error("rank_powers_oracle: matrix is not nilpotent");
  // number of parts >= j is rank(m^{j-1}) - rank(m^j)
  std::vector<int> parts;
  for (std::size_t j = 1; j < ranks.size(); ++j) {
    const std::size_t at_least_j = ranks[j - 1] - ranks[j];
    const std::size_t at_least_next = (j + 1 < ranks.size()) ? ranks[j] - ranks[j + 1] : 0;
    for (std::size_t c = 0; c < at_least_j - at_least_next; ++c) parts.push_back(static_cast<int>(j));
  }
  if (n == 0) return Partition();
  Partition result(parts);
  if (result.size() != static_cast<int>(n)) throw std::logic_error("rank_powers_oracle: inconsistent rank sequence");
  return result;
}

IntMatrix induction_witness(const LeviDatum& levi, std::uint64_t seed) {
  levi.validate();
  const int n = levi.n();
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  std::uint64_t state = seed;
  int start = 0;
  std::vector<int> block_of(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < levi.parts.size(); ++b) {
    int pos = start;
    for (int jb : levi.orbit[b].parts()) {
      for (int i = 0; i + 1 < jb; ++i) m[pos + i][pos + i + 1] = 1;
      pos += jb;
    }
    for (int j = start; j < start + levi.parts[b]; ++j) block_of[j] = static_cast<int>(b);
    start += levi.parts[b];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[i] < block_of[j]) m[i][j] = static_cast<std::int64_t>(next_random(state) % 41) - 20;
  return m;
}

Integer factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0;
  int sb = 0;
  const std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<LeviDatum> enumerate_levi_data(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_levi_data: n must be positive");
  std::vector<LeviDatum> out;
  for (const auto& levi_shape : partitions_of(n)) {
    const auto& parts = levi_shape.parts();
    std::vector<std::vector<Partition>> choices;
    for (int p : parts) choices.push_back(partitions_of(p));
    std::vector<std::size_t> index(parts.size(), 0);
    // equal factors take nondecreasing orbit indices, so each multiset appears once
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == parts.size()) {
        LeviDatum levi{parts, {}};
        for (std::size_t i = 0; i < parts.size(); ++i) levi.orbit.push_back(choices[i][index[i]]);
        out.push_back(levi.canonical());
        return;
      }
      const std::size_t first = (pos > 0 && parts[pos] == parts[pos - 1]) ? index[pos - 1] : 0;
      for (std::size_t c = first; c < choices[pos].size(); ++c) {
        index[pos] = c;
        walk(pos + 1);
      }
    };
    walk(0);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<InducingPair> enumerate_inducing_pairs(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("enumerate_inducing_pairs: d and r must be positive");
  const int n = d * r;
  const Partition target = rectangle(r, d);
  std::vector<InducingPair> out;
  for (const auto& levi : enumerate_levi_data(n)) {
    if (induce(levi) != target) continue;
    InducingPair pair;
    pair.levi = levi;
    for (int m : levi.parts) {
      if (m % d != 0) throw std::logic_error("enumerate_inducing_pairs: inducing Levi does not contain a conjugate of M_0");
      pair.levi_m0.push_back(m / d);
    }
    pair.weyl_group_order = factorial(n);
    pair.levi_group_order = 1;
    for (int m : levi.parts) pair.levi_group_order *= factorial(m);
    pair.weyl_weight = Rational(pair.levi_group_order, pair.weyl_group_order);
    std::map<std::pair<int, Partition>, int> factor_mult;
    std::map<int, int> part_mult;
    for (std::size_t i = 0; i < levi.parts.size(); ++i) {
      ++factor_mult[{levi.parts[i], levi.orbit[i]}];
      ++part_mult[levi.parts[i]];
    }
    pair.normalizer_order = 1;
    for (auto& [key, mult] : factor_mult) pair.normalizer_order *= factorial(mult);
    pair.class_size = pair.weyl_group_order / (pair.levi_group_order * pair.normalizer_order);
    Integer arrangements = factorial(static_cast<int>(levi.parts.size()));
    for (auto& [key, mult] : part_mult) arrangements /= factorial(mult);
    pair.standard_count = arrangements;
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace arthur::orbits
