#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "prym/errors.hpp"
#include "prym/report.hpp"
#include "prym/suites.hpp"

namespace {

using Runner = prym::SuiteReport (*)(const prym::SuiteOptions&);

struct SuiteEntry {
  const char* name;
  const char* help;
  Runner fn;
};

constexpr SuiteEntry kSuites[] = {
    {"orbits", "mod-2 orbit partition under the class stabilizer",
     prym::run_orbits},
    {"generation", "stabilizer generation certificate (genus 2 and 3)",
     prym::run_generation},
    {"shadow-complex", "shadow curve-complex connectivity and transitivity",
     prym::run_shadow_complex},
    {"chain-relations", "chain relation identities and the lifted obstruction",
     prym::run_chain_relations},
    {"cover", "double cover topology, homology, and pairing checks",
     prym::run_cover},
    {"prym", "anti-invariant lattice representation checks",
     prym::run_prym},
    {"abelianization", "level subgroup homomorphism checks",
     prym::run_abelianization},
    {"siegel", "Siegel action and extraction equivariance checks",
     prym::run_siegel},
    {"all", "every suite; the generation certificate runs at min(genus, 3)",
     prym::run_all},
};

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw prym::UsageError("cannot open output file " + out_path);
  f << payload;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for symplectic double cover data"};
  app.require_subcommand(1);

  int genus = 4;
  std::string beta;
  prym::Int p = 0, ell = 0;
  std::uint64_t seed = 7;
  int trials = 0;
  prym::SiegelTols tols;
  bool json = false, timings = false;
  std::string out_path, csv_path;

  app.add_option("--genus", genus, "base surface genus")->capture_default_str();
  app.add_option("--beta", beta,
                 "mod-2 class as a bitstring over a1 b1 a2 b2 ... "
                 "(default: the class of b1)");
  auto* opt_p = app.add_option("--p", p, "level modulus (default: 2 3 5 7)");
  auto* opt_ell =
      app.add_option("--ell", ell, "order-certificate modulus (2 or 3)");
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();
  auto* opt_trials =
      app.add_option("--trials", trials, "sampled trials per check");
  app.add_option("--tol", tols.membership, "Siegel membership tolerance")
      ->capture_default_str();
  app.add_option("--tol-equivariance", tols.equivariance,
                 "equivariance residual tolerance")
      ->capture_default_str();
  app.add_option("--tol-fixed-point", tols.fixed_point,
                 "fixed-point residual tolerance")
      ->capture_default_str();
  app.add_flag("--json", json, "emit the canonical JSON report");
  app.add_option("--out", out_path, "write the report to FILE instead of stdout");
  app.add_option("--csv", csv_path,
                 "with `verify siegel`: write the residual sweep as CSV to FILE");
  app.add_flag("--timings", timings, "include elapsed milliseconds in reports");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  CLI::App* suite_cmds[std::size(kSuites)];
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    suite_cmds[i] = verify->add_subcommand(kSuites[i].name, kSuites[i].help);
    suite_cmds[i]->fallthrough();
  }

  auto* graph = app.add_subcommand("graph", "export a graph as JSON");
  graph->require_subcommand(1);
  graph->fallthrough();
  auto* shadow_cmd = graph->add_subcommand(
      "shadow-n1", "classes pairing oddly with beta and their odd-pairing edges");
  shadow_cmd->fallthrough();

  auto* exp_cmd = app.add_subcommand("export", "export a structure as JSON");
  exp_cmd->require_subcommand(1);
  exp_cmd->fallthrough();
  auto* cover_cmd = exp_cmd->add_subcommand(
      "cover", "double cover complex, pairing, and deck action");
  cover_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  prym::SuiteOptions opts;
  opts.genus = genus;
  opts.beta_bits = beta;
  if (opt_p->count()) opts.p = p;
  if (opt_ell->count()) opts.ell = ell;
  opts.seed = seed;
  if (opt_trials->count()) opts.trials = trials;
  opts.tols = tols;
  opts.timings = timings;

  try {
    const SuiteEntry* entry = nullptr;
    for (std::size_t i = 0; i < std::size(kSuites); ++i)
      if (suite_cmds[i]->parsed()) entry = &kSuites[i];
    if (!csv_path.empty() &&
        !(entry && std::string(entry->name) == "siegel"))
      throw prym::UsageError("--csv applies to `verify siegel` only");

    if (verify->parsed() && entry) {
      prym::SuiteReport report = entry->fn(opts);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw prym::UsageError("cannot open output file " + csv_path);
        f << prym::siegel_sweep_csv(opts);
      }
      emit(json ? report.to_json().dump(2) + "\n" : report.to_text(), out_path);
      return report.pass() ? 0 : 1;
    }
    if (graph->parsed()) {
      emit(prym::shadow_graph_json(opts).dump(2) + "\n", out_path);
      return 0;
    }
    if (exp_cmd->parsed()) {
      emit(prym::cover_description_json(opts).dump(2) + "\n", out_path);
      return 0;
    }
  } catch (const prym::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const prym::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const prym::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
