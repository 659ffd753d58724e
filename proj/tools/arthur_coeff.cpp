// arthur-coeff: global coefficients of the fine expansion at regular-by-blocks
// nilpotent orbits of GL(n), with the identity suites that check them.

#include "arthur/cli_commands.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

struct Dimensions {
  int d = 0;
  int r = 0;
  int n = 0;

  // (d, r) from any two of d, r, n = r d; a lone n means d = 1.
  void resolve() {
    if (n > 0) {
      if (d > 0 && r > 0 && d * r != n) throw CLI::ValidationError("--n must equal d*r");
      if (d > 0 && r == 0) {
        if (n % d != 0) throw CLI::ValidationError("--d must divide --n");
        r = n / d;
      } else if (r > 0 && d == 0) {
        if (n % r != 0) throw CLI::ValidationError("--r must divide --n");
        d = n / r;
      } else if (d == 0 && r == 0) {
        d = 1;
        r = n;
      }
    }
    if (d == 0) d = 1;
    if (d < 1 || r < 1) throw CLI::ValidationError("give --r (and --d) or --n");
  }
};

void add_dimensions(CLI::App* cmd, Dimensions& dims) {
  cmd->add_option("--d", dims.d, "size of the GL(d) blocks");
  cmd->add_option("--r", dims.r, "number of blocks");
  cmd->add_option("--n", dims.n, "n = r*d");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace arthur::cli;
  CLI::App app{"Global coefficients of the fine geometric expansion at regular-by-blocks orbits of GL(n)"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  try {
    config.precision_bits = default_precision_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  app.add_option("--prec", config.precision_bits, "working precision in bits (default 256 or $ARTHUR_COEFF_PREC)")
      ->check(CLI::Range(32u, 1u << 20));
  app.add_option("--order", config.jet_guard_order, "guard orders carried beyond the pole order")
      ->check(CLI::Range(0, 64));
  app.add_option("--seed", config.seed, "seed for generic directions and random germs");
  app.add_option("--field", config.field, "'Q' or a number-field data file (JSON)");
  app.add_option("--tol-exp", config.tolerance_exponent, "cancellation tolerance 2^-e (default prec/2)");
  app.add_option("--jobs", config.jobs, "concurrent coefficient computations")->check(CLI::Range(1, 256));
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  Dimensions dims;
  std::string places;

  auto* coeff = app.add_subcommand("coeff", "a^L and a~^L for every class of inducing pairs of (r^d)");
  add_dimensions(coeff, dims);
  coeff->add_option("--S", places, "finite set of places: comma separated primes, optionally 'inf'");

  auto* expansion = app.add_subcommand("expansion", "the fine expansion as a formal sum of local integrals");
  add_dimensions(expansion, dims);
  expansion->add_option("--S", places, "finite set of places");

  ZetaQuery zq;
  auto* zeta = app.add_subcommand("zeta", "jets of xi, its local factors, and the Z_n towers");
  zeta->add_option("--eval", zq.eval, "xi, xi_local, zeta, Z, Ztilde, ZS or ZtildeS")
      ->check(CLI::IsMember({"xi", "xi_local", "zeta", "Z", "Ztilde", "ZS", "ZtildeS"}));
  zeta->add_option("--at", zq.at, "rational point s (e.g. 2, 1/3, 0.3)");
  zeta->add_option("--n", zq.n, "n for the Z_n towers")->check(CLI::PositiveNumber);
  zeta->add_option("--jet-order", zq.order, "highest power of t in the jet")->check(CLI::NonNegativeNumber);
  zeta->add_option("--S", zq.places, "places for ZS/ZtildeS, or one place for xi_local");

  auto* volumes = app.add_subcommand("volumes", "vol([GL_m]^1), vol([M_X]^1), vol([M_0]^1)");
  add_dimensions(volumes, dims);

  auto* orbits = app.add_subcommand("orbits", "inducing pairs (L, o') of the orbit (r^d)");
  add_dimensions(orbits, dims);

  VerifyQuery vq;
  auto* verify = app.add_subcommand("verify", "run an identity suite and report residuals");
  verify->add_option("suite", vq.suite, "cp-identity, covolumes, prolongement4, induction-oracle or routes")
      ->required()
      ->check(CLI::IsMember({"cp-identity", "covolumes", "prolongement4", "induction-oracle", "routes"}));
  verify->add_option("--n", vq.n_max, "largest n (suite default when omitted)");
  verify->add_option("--count", vq.count, "germs or points per case");
  verify->add_option("--S", vq.places, "extra set of places for the routes suite");

  CLI11_PARSE(app, argc, argv);

  try {
    CommandResult result;
    if (coeff->parsed()) {
      dims.resolve();
      result = cmd_coeff(config, dims.d, dims.r, places);
    } else if (expansion->parsed()) {
      dims.resolve();
      result = cmd_expansion(config, dims.d, dims.r, places);
    } else if (zeta->parsed()) {
      result = cmd_zeta(config, zq);
    } else if (volumes->parsed()) {
      dims.resolve();
      result = cmd_volumes(config, dims.d, dims.r);
    } else if (orbits->parsed()) {
      dims.resolve();
      result = cmd_orbits(config, dims.d, dims.r);
    } else {
      result = cmd_verify(config, vq);
    }
    if (format == "table")
      std::cout << render_table(result.document);
    else
      std::cout << result.document.dump(2) << '\n';
    return result.exit_code;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
