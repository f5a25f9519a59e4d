#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "prym/orbits.hpp"
#include "prym/report.hpp"
#include "prym/siegel.hpp"
#include "prym/types.hpp"

namespace prym {

// Options shared by every suite runner. Unset optionals fall back to
// suite-specific defaults (all moduli for abelianization, both order
// certificates for prym, 1000 or 100 trials depending on the suite).
struct SuiteOptions {
  int genus = 4;
  std::string beta_bits;  // "a1 b1 a2 b2 ..." bitstring; empty means [b1]
  std::optional<Int> p;
  std::optional<Int> ell;
  std::uint64_t seed = 7;
  std::optional<int> trials;
  SiegelTols tols;
  bool timings = false;
};

F2Vec default_beta(int genus);                 // class of b1
F2Vec resolve_beta(const SuiteOptions& o);     // UsageError on bad input

SuiteReport run_orbits(const SuiteOptions& o);
SuiteReport run_generation(const SuiteOptions& o);  // CapabilityError for g > 3
SuiteReport run_shadow_complex(const SuiteOptions& o);
SuiteReport run_chain_relations(const SuiteOptions& o);
SuiteReport run_cover(const SuiteOptions& o);
SuiteReport run_prym(const SuiteOptions& o);
SuiteReport run_abelianization(const SuiteOptions& o);
SuiteReport run_siegel(const SuiteOptions& o);

// Every suite above, aggregated; the generation certificate runs at
// min(genus, 3) so the fixed enumeration budget is respected.
SuiteReport run_all(const SuiteOptions& o);

// Machine-readable exports.
nlohmann::json shadow_graph_json(const SuiteOptions& o);
nlohmann::json cover_description_json(const SuiteOptions& o);
std::string siegel_sweep_csv(const SuiteOptions& o);  // seed,genus,word_length,residual

} // namespace prym
