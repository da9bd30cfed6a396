#include <iostream>

#include "CLI11.hpp"

#include "cusp/cli.hpp"

int main(int argc, char** argv) {
  cusp::JobConfig cfg;
  CLI::App app{"Cuspidal divisors, partial zeta functions and expansions for Drinfeld modular varieties"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring, "ring spec, e.g. \"poly q=2\" or \"elliptic q=2 a=[0,0,1,0,0]\"");
    sub->add_option("--r", cfg.r, "rank r >= 2");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  };
  auto* zeta = app.add_subcommand("zeta", "zeta functions, special values and L-functions");
  common(zeta);
  zeta->add_option("--x", cfg.x, "coset representative x for Z_{x,a}");
  zeta->add_option("--ideal", cfg.ideal, "ideal a for Z_{x,a}");

  auto* orders = app.add_subcommand("orders", "vanishing orders at the cusps");
  common(orders);
  orders->add_option("--level,--n", cfg.level, "level n (default: least proper principal ideal)");
  orders->add_option("--ideal", cfg.ideal, "twist b (discriminant) or a (division, higher)");
  orders->add_option("--u1", cfg.u1, "first coordinate of u in n^-1 a");
  orders->add_option("--weight", cfg.weight, "weight k of the higher Eisenstein series");
  orders->add_option("--mode", cfg.mode, "discriminant | division | higher | canonical | aggregation")
      ->check(CLI::IsMember({"discriminant", "division", "higher", "canonical", "aggregation"}));

  auto* matrix = app.add_subcommand("matrix", "cuspidal divisor matrix or the M-matrix certificate");
  common(matrix);
  matrix->add_option("--ideal", cfg.ideal, "twist b");
  matrix->add_option("--mode", cfg.mode, "divisor | mmatrix")->check(CLI::IsMember({"divisor", "mmatrix"}));
  matrix->add_option("--weight", cfg.weight, "k for the M-matrix (default q - 1)");
  matrix->add_option("--prec", cfg.prec, "pi_inf precision of the M-matrix (default 8)");

  auto* expand = app.add_subcommand("expand", "t-expansion of the discriminant by two routes");
  common(expand);
  expand->add_option("--prec", cfg.prec, "precision N (default q^3)");

  auto* selftest = app.add_subcommand("selftest", "property suites");
  selftest->add_option("--ring", cfg.ring, "restrict to one ring (default: the built-in sample rings)");
  selftest->add_option("--seed", cfg.seed, "sampling seed");
  selftest->add_option("--suite", cfg.suites, "run only the named suites (repeatable)");
  selftest->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.ring_given = app.get_subcommands().front()->count("--ring") > 0;
  try {
    cusp::CommandResult res = cusp::run_command(cfg);
    std::cout << cusp::render(res.data, cfg.format);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cusp::exit_code_for(e);
  }
}
