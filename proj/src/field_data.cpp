#include "arthur/zeta.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arthur::zeta {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    std::ostringstream out;
    out << v.dump();
    return parse_rational(out.str());
  }
  throw std::runtime_error("field data: expected a number");
}

}  // namespace

PlaceSet PlaceSet::parse(const std::string& text) {
  PlaceSet out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    if (token == "inf" || token == "infinity") {
      out.archimedean = true;
      continue;
    }
    std::size_t used = 0;
    long p = 0;
    try {
      p = std::stol(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("place set: '" + token + "' is neither a prime nor 'inf'");
    }
    if (used != token.size() || !is_prime(p)) throw std::invalid_argument("place set: '" + token + "' is not a prime");
    out.primes.push_back(p);
  }
  std::sort(out.primes.begin(), out.primes.end());
  out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
  return out;
}

PlaceSet PlaceSet::with_prime(long p) const {
  if (!is_prime(p)) throw std::invalid_argument("place set: not a prime");
  PlaceSet out = *this;
  if (std::find(out.primes.begin(), out.primes.end(), p) == out.primes.end()) {
    out.primes.push_back(p);
    std::sort(out.primes.begin(), out.primes.end());
  }
  return out;
}

std::string PlaceSet::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? "," : "") << primes[i];
  if (archimedean) out << (primes.empty() ? "" : ",") << "inf";
  return out.str();
}

NumberFieldData NumberFieldData::rationals() { return NumberFieldData{}; }

bool NumberFieldData::is_rationals() const {
  return degree == 1 && discriminant == 1 && characters.empty() && gamma_shifts == std::vector<Rational>{Rational(0)};
}

std::string NumberFieldData::label() const {
  if (is_rationals()) return "Q";
  std::ostringstream out;
  out << "degree " << degree << ", discriminant " << discriminant;
  return out.str();
}

void NumberFieldData::validate() const {
  if (degree < 1) throw std::runtime_error("field data: degree must be positive");
  if (discriminant == 0) throw std::runtime_error("field data: discriminant must be nonzero");
  if (real_places < 0 || complex_places < 0 || real_places + 2 * complex_places != degree)
    throw std::runtime_error("field data: signature does not match the degree");
  if (static_cast<int>(gamma_shifts.size()) != degree)
    throw std::runtime_error("field data: expected one gamma factor shift per unit of degree");
  if (static_cast<int>(characters.size()) != degree - 1)
    throw std::runtime_error("field data: expected degree - 1 Dirichlet coefficient sequences");
  for (const auto& chi : characters) {
    const long m = static_cast<long>(chi.size());
    if (m < 2) throw std::runtime_error("field data: coefficient period must be at least 2");
    if (chi[0] != 1) throw std::runtime_error("field data: coefficient a_1 must be 1");
    if (std::accumulate(chi.begin(), chi.end(), 0L) != 0)
      throw std::runtime_error("field data: coefficients must sum to zero over a period");
    for (long a = 1; a <= m; ++a)
      for (long b = 1; b <= m; ++b)
        if (chi[((a * b) - 1) % m] != chi[a - 1] * chi[b - 1])
          throw std::runtime_error("field data: coefficients are not completely multiplicative");
  }
}

NumberFieldData NumberFieldData::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("field data: ") + e.what());
  }
  for (const char* key : {"degree", "discriminant", "signature", "dirichlet_coefficients", "gamma_factor_shifts"})
    if (!j.contains(key)) throw std::runtime_error(std::string("field data: missing key '") + key + "'");
  NumberFieldData f;
  try {
    f.degree = j.at("degree").get<int>();
    f.discriminant = j.at("discriminant").get<long>();
    const auto& sig = j.at("signature");
    if (!sig.is_array() || sig.size() != 2) throw std::runtime_error("field data: signature must be [r1, r2]");
    f.real_places = sig[0].get<int>();
    f.complex_places = sig[1].get<int>();
    f.characters.clear();
    const auto& coeffs = j.at("dirichlet_coefficients");
    if (!coeffs.is_array()) throw std::runtime_error("field data: dirichlet_coefficients must be a list");
    if (!coeffs.empty() && coeffs[0].is_array()) {
      for (const auto& chi : coeffs) f.characters.push_back(chi.get<std::vector<long>>());
    } else if (!coeffs.empty()) {
      f.characters.push_back(coeffs.get<std::vector<long>>());
    }
    f.gamma_shifts.clear();
    for (const auto& mu : j.at("gamma_factor_shifts")) f.gamma_shifts.push_back(rational_from_json(mu));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("field data: ") + e.what());
  }
  f.validate();
  return f;
}

NumberFieldData NumberFieldData::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("field data: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

}  // namespace arthur::zeta
