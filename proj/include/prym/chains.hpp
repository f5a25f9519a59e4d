#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/cover.hpp"
#include "prym/surface.hpp"
#include "prym/types.hpp"

namespace prym {

// Representation handle for relation checks: maps a twist curve to a matrix
// through its homology class. The base representation sends T_c to the
// symplectic transvection by [c]; reductions reduce entries mod p after
// every product; the trivial handle sends every twist to the identity.
struct ChainRep {
  std::string label;
  IMat form;        // ambient symplectic form
  Int modulus = 0;  // 0 means integer entries
  int sign = 1;     // global transvection sign convention
  bool trivial = false;

  static ChainRep base(int genus, int sign = 1);
  static ChainRep mod_p(int genus, Int p, int sign = 1);
  static ChainRep identity(int genus);

  int dim() const { return static_cast<int>(form.rows()); }
  IMat twist(const IVec& cls) const;
  IMat reduce(IMat m) const;
  IMat word(const std::vector<IVec>& classes, const std::vector<Int>& exps) const;
  IMat power(const IMat& m, Int k) const;
};

// Curves of a chain configuration on the base surface. For the two-chain
// relation chain1 holds the single doubled curve and chain2 is empty; for
// the complementary chains chain1 = (a, c1, c2) and chain2 = (a', c3, ...,
// c_{2g-2}), both transverse to the common curve b. d1, d2 are the boundary
// classes of the chain neighborhoods (d2 empty when there is one boundary).
struct ChainConfig {
  RibbonSurface surface;
  Loop b;
  std::vector<Loop> chain1;
  std::vector<Loop> chain2;
  IVec d1, d2;

  int genus() const { return surface.genus(); }
  IVec cls(const Loop& c) const { return homology_class(surface, c); }
  IVec beta_class() const { return cls(b); }
};

// 2-chain (a_1, b_1): the chain neighborhood is a one-boundary torus, so the
// boundary class vanishes.
ChainConfig two_chain_config(const RibbonSurface& s);

// Complementary chains around b_{g-1}, cut out of the length-(2g+1) chain
// a_1, b_1, a_1+a_2, b_2, ..., a_{g-1}+a_g, b_g, a_g: chain1 takes the three
// curves past b_{g-1}, chain2 the 2g-3 curves before it. Both neighborhoods
// share boundary classes +-a_{g-1}. Requires g >= 4.
ChainConfig complementary_chain_config(const RibbonSurface& s);

// Pairing pattern of the full chain (chain2 reversed, b, chain1): adjacent
// classes pair to +-1, all others to 0, and every c_i is disjoint from b
// mod 2 while a, a' meet it once. Violations raise a configuration error.
void validate_chain_config(const ChainConfig& cfg);

struct RelationReport {
  std::string relation;
  std::string rep;
  IMat left, right;
  bool pass = false;
  IMat discrepancy;  // left - right, empty when passing

  static RelationReport make(std::string relation, std::string rep,
                             IMat left, IMat right);
};

// (T_a^2 T_b)^4 against the boundary twist T_d.
RelationReport verify_two_chain(const ChainConfig& cfg, const ChainRep& rep);

// (T_a^2 T_c1 T_c2)^3 against (T_a'^2 T_c3 ... T_c_{2g-2})^{2g-3}.
RelationReport verify_complementary_chains(const ChainConfig& cfg,
                                           const ChainRep& rep);

// M = (T_c1 T_c2)^3 against the map that negates span{c1, c2} and fixes its
// pairing-orthogonal complement; requires the classes to pair to +-1.
RelationReport verify_minus_id_span(const IVec& c1, const IVec& c2,
                                    const ChainRep& rep);

// Experimental: the plain chain relation for a chain of k curves, even k
// against the identity at exponent 2k+2, odd k against the square of the
// boundary transvection at exponent k+1. The boundary class is recovered
// from the computed power and cross-checked mod 2 against the odd-index
// sum; excluded from acceptance.
RelationReport verify_k_chain(const RibbonSurface& s,
                              const std::vector<Loop>& chain,
                              const ChainRep& rep);

// Writes m as a transvection power Id - q v (v^T form) with primitive v
// (first nonzero coordinate positive); q = 0 with empty v for the identity.
std::optional<std::pair<Int, IVec>> as_transvection_power(const IMat& m,
                                                          const IMat& form);

// Lifted complementary chains on the double cover over [b]: the left and
// right words lift twist-by-twist and the identity survives only with the
// deck correction.
struct ObstructionReport {
  RelationReport corrected;     // L against sigma_* R, exact
  bool uncorrected_fails = false;  // L != R without the deck factor
  bool prym_negated = false;       // Prym(L) = -Prym(R)
  bool plus_agrees = false;        // restrictions to the plus lattice match
  IMat prym_left, prym_right;

  bool pass() const {
    return corrected.pass && uncorrected_fails && prym_negated && plus_agrees;
  }
};

// Builds the cover over [b], lifts every configuration curve (preferring the
// configured loops, falling back to bounded word search candidates when a
// lift fails its filters), and checks the deck-corrected identity. Candidate
// assignments that fail are rejected and the next is tried; if none works
// the canonical assignment's failing report is returned.
ObstructionReport verify_lifted_obstruction(const CoverHomology& ch,
                                            const ChainConfig& cfg);

} // namespace prym
