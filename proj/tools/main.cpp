#include "krammer/errors.hpp"
#include "krammer/rational.hpp"
#include "krammer/report.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

using krammer::CheckReport;
using krammer::CheckStatus;
using krammer::SuiteConfig;
using krammer::SuiteResult;

struct Options {
  std::vector<std::string> types;
  std::vector<std::string> m_values;
  int prime = 19;
  std::string kind = "holonomy";
  std::string expect;
  std::string generators = "simple_reflections";
  std::string folded;
  bool allow_long = false;
  bool json_only = false;
  long progress_every = 0;
};

void add_shared(CLI::App* cmd, Options& o) {
  cmd->fallthrough();  // lets --config appear after the subcommand name
  cmd->add_option("-t,--type", o.types, "Coxeter types: A2..A8, D4..D8, E6..E8, I2(k)")
      ->delimiter(',');
  cmd->add_option("-m,--m", o.m_values, "parameter values, integers or fractions like 7/2")
      ->delimiter(',');
  cmd->add_flag("--json-only", o.json_only, "suppress the per-check summary on stderr");
}

SuiteConfig to_config(const std::string& command, const Options& o) {
  SuiteConfig cfg;
  cfg.command = command;
  cfg.kind = o.kind;
  for (const std::string& s : o.types) cfg.types.push_back(krammer::TypeSpec::parse(s));
  for (const std::string& s : o.m_values) cfg.m_values.push_back(krammer::rat_from_string(s));
  cfg.prime = o.prime;
  cfg.expect = o.expect;
  cfg.generators = o.generators;
  cfg.folded = o.folded;
  cfg.allow_long = o.allow_long;
  cfg.progress_every = o.progress_every;
  return cfg;
}

// One JSON object per check on stdout; status lines and a tally on stderr.
int emit(const SuiteResult& result, bool json_only) {
  long passed = 0, failed = 0, skipped = 0;
  for (const CheckReport& r : result.reports) {
    std::printf("%s\n", r.to_line().c_str());
    switch (r.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::fail: ++failed; break;
      case CheckStatus::skipped_degenerate: ++skipped; break;
    }
    if (!json_only)
      std::fprintf(stderr, "%-18s %s  (%ld ms)\n", krammer::status_name(r.status).c_str(),
                   r.check_id.c_str(), r.elapsed_ms);
  }
  std::fflush(stdout);
  if (!json_only)
    std::fprintf(stderr, "%zu checks: %ld passed, %ld failed, %ld skipped\n",
                 result.reports.size(), passed, failed, skipped);
  return failed > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinitesimal Krammer operators for ADE Coxeter systems:\n"
               "construct them, verify their defining relations, and certify that\n"
               "they generate the full matrix algebra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read option defaults from a file with one [subcommand] section");

  Options o;

  CLI::App* counts = app.add_subcommand(
      "counts", "reflection counts #R, c, c' against the closed-form table");
  add_shared(counts, o);

  CLI::App* check = app.add_subcommand("check", "verify one family of identities");
  add_shared(check, o);
  check
      ->add_option("-k,--kind", o.kind,
                   "holonomy | cubic | central | selfadjoint | triples | wbasis | "
                   "vanishing | branch")
      ->required();

  CLI::App* disc = app.add_subcommand(
      "discriminant", "factor the invariant-form determinant and locate definiteness");
  add_shared(disc, o);
  disc->add_option("--expect", o.expect, "expected factorization, e.g. \"(m-5)(m+1)^2\"");

  CLI::App* closure =
      app.add_subcommand("closure", "Lie-closure dimension of the operators mod p");
  add_shared(closure, o);
  closure->add_option("-p,--prime", o.prime, "prime modulus, 5..251");
  closure->add_option("-g,--generators", o.generators,
                      "all_reflections | simple_reflections | last_column");
  closure->add_option("--folded", o.folded, "close the folded generator images: F4, H3, H4");
  closure->add_flag("--allow-long", o.allow_long, "permit the long H4 run (about a quarter hour)");
  closure->add_option("--progress-every", o.progress_every,
                      "report closure growth on stderr every k dimensions");

  CLI::App* all = app.add_subcommand("all", "the complete verification suite");
  add_shared(all, o);
  all->add_option("-p,--prime", o.prime, "prime modulus for the closure checks");
  all->add_flag("--allow-long", o.allow_long, "include the H4 folding and E8 spectra");
  all->add_option("--progress-every", o.progress_every,
                  "report closure growth on stderr every k dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return emit(krammer::run_suite(to_config(command, o)), o.json_only);
  } catch (const krammer::UnsupportedType& e) {
    std::fprintf(stderr, "krammer: %s\n", e.what());
    return 2;
  } catch (const krammer::BadPrime& e) {
    std::fprintf(stderr, "krammer: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "krammer: %s\n", e.what());
    return 2;
  }
}
