#pragma once

// The subcommands of arthur-coeff as library functions returning JSON
// documents of the form {config, query, results[], diagnostics}.

#include "arthur/real.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace arthur::cli {

struct RunConfig {
  unsigned precision_bits = kDefaultPrecisionBits;
  int jet_guard_order = 4;
  std::uint64_t seed = 0;
  std::string field = "Q";  ///< "Q" or a path to a field data file
  long tolerance_exponent = 0;  ///< zero means precision_bits / 2
  int jobs = 1;

  long effective_tolerance_exponent() const;
  nlohmann::json to_json() const;
};

/// The default precision: ARTHUR_COEFF_PREC when set, else 256 bits.
unsigned default_precision_from_env();

struct CommandResult {
  nlohmann::json document;
  int exit_code = 0;
};

CommandResult cmd_coeff(const RunConfig& config, int d, int r, const std::string& places);
CommandResult cmd_expansion(const RunConfig& config, int d, int r, const std::string& places);

struct ZetaQuery {
  std::string eval = "xi";  ///< xi | xi_local | zeta | Z | Ztilde | ZS | ZtildeS
  std::string at = "2";     ///< rational point s
  int n = 1;
  int order = 0;
  std::string places;       ///< S for ZS / ZtildeS, or the place for xi_local
};
CommandResult cmd_zeta(const RunConfig& config, const ZetaQuery& query);

CommandResult cmd_volumes(const RunConfig& config, int d, int r);
CommandResult cmd_orbits(const RunConfig& config, int d, int r);

struct VerifyQuery {
  std::string suite;
  int n_max = 0;        ///< zero: the suite's default bound
  int count = 0;        ///< germs or points per case; zero: suite default
  std::string places;   ///< for routes: extra S to test besides the standard three
};
/// Suites: cp-identity, covolumes, prolongement4, induction-oracle, routes.
CommandResult cmd_verify(const RunConfig& config, const VerifyQuery& query);

/// Plain-text rendering of a command document.
std::string render_table(const nlohmann::json& document);

}  // namespace arthur::cli
