// lcf: command-line front end over the C API.
//
// Exit status: 0 when every check in the run passed, 1 when a check failed,
// 2 on usage or input errors (message on stderr).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lcf/lcf.h"

namespace {

struct Args {
  std::uint32_t field = 2;
  bool pretty = false;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> precision;
  std::optional<std::string> rational, series, cf, beta, gamma;
  std::string mode = "hall";
  std::string suite;
  std::size_t trials = 100;
  std::optional<int> max_degree;
  int k = 1;
  int m = 1;
  std::size_t rounds = 5;
};

void add_input(CLI::App* cmd, Args& a) {
  auto* group = cmd->add_option_group("input", "alpha, in one of three forms");
  group->add_option("--rational", a.rational, "num/den, e.g. \"t/(t^2+1)\"");
  group->add_option("--series", a.series, "\"poly ; c1 c2 ... cN @N\"");
  group->add_option("--cf", a.cf, "\"[a0; a1, a2, ...]\"");
  group->require_option(1);
}

int emit(const std::string& json, const Args& a) {
  if (a.output.empty()) {
    std::cout << json << '\n';
    return 0;
  }
  std::ofstream out(a.output, std::ios::binary);
  out << json << '\n';
  if (!out) {
    std::cerr << "error: cannot write " << a.output << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions of Laurent series over F_p and their decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  Args a;
  app.add_option("--field", a.field, "prime p of the coefficient field F_p")->capture_default_str();
  app.add_flag("--pretty", a.pretty, "indent the JSON report");
  app.add_option("--output", a.output, "write the JSON report to FILE");
  app.add_option("--seed", a.seed, "seed for free choices and fuzz sampling");
  app.add_option("--precision", a.precision, "number of fractional coefficients N");

  auto* expand = app.add_subcommand("expand", "continued fraction, convergents, Hankel profile");
  add_input(expand, a);

  auto* decompose = app.add_subcommand("decompose", "alpha = beta + gamma");
  add_input(decompose, a);
  decompose->add_option("--mode", a.mode, "hall, hall-f2 (or f2), shulga")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check a given decomposition");
  add_input(verify, a);
  verify->add_option("--mode", a.mode, "hall, hall-f2 (or f2), shulga")->capture_default_str();
  verify->add_option("--beta", a.beta, "series (hall modes) or continued fraction (shulga)")
      ->required();
  verify->add_option("--gamma", a.gamma, "series (hall modes) or continued fraction (shulga)")
      ->required();

  auto* fuzz = app.add_subcommand("fuzz", "seeded property suite");
  fuzz->add_option("--suite", a.suite,
                   "hall, detlem, shulga-termination, certification, cf-oracle, skm, lemma")
      ->required();
  fuzz->add_option("--trials", a.trials)->capture_default_str();
  fuzz->add_option("--maxdeg", a.max_degree, "largest denominator degree for rational inputs");
  fuzz->add_option("--k", a.k)->capture_default_str();
  fuzz->add_option("--m", a.m)->capture_default_str();

  auto* example = app.add_subcommand("example", "canonical two-sequence example");
  example->add_option("--rounds", a.rounds)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every usage error maps to 2
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  lcf_run_options o;
  lcf_run_options_init(&o);
  o.field = a.field;
  o.pretty = a.pretty ? 1 : 0;
  if (a.seed) {
    o.has_seed = 1;
    o.seed = *a.seed;
  }
  if (a.precision) {
    o.has_precision = 1;
    o.precision = *a.precision;
  }
  if (a.rational) o.rational = a.rational->c_str();
  if (a.series) o.series = a.series->c_str();
  if (a.cf) o.cf = a.cf->c_str();
  if (a.beta) o.beta = a.beta->c_str();
  if (a.gamma) o.gamma = a.gamma->c_str();
  o.mode = a.mode.c_str();
  o.suite = a.suite.c_str();
  o.trials = a.trials;
  if (a.max_degree) {
    o.has_max_degree = 1;
    o.max_degree = *a.max_degree;
  }
  o.k = a.k;
  o.m = a.m;
  o.rounds = a.rounds;

  lcf_command command = LCF_CMD_EXPAND;
  if (*decompose) command = LCF_CMD_DECOMPOSE;
  if (*verify) command = LCF_CMD_VERIFY;
  if (*fuzz) command = LCF_CMD_FUZZ;
  if (*example) command = LCF_CMD_EXAMPLE;

  char* json = nullptr;
  int ok = 0;
  const lcf_status status = lcf_run(command, &o, &json, &ok);
  if (status != LCF_OK) {
    std::cerr << "error: " << lcf_status_string(status) << ": " << lcf_last_error() << '\n';
    return 2;
  }
  const std::string report(json);
  lcf_string_free(json);
  if (const int rc = emit(report, a); rc != 0) return rc;
  return ok ? 0 : 1;
}
