#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "prym/types.hpp"

namespace prym {

// Mod-2 homology classes packed into machine words, bit i = interleaved
// coordinate i. All genus-dependent routines accept g up to 15 (packing
// limit), far beyond the enumeration budgets that actually apply.

using F2Vec = std::uint32_t;

Int f2_pair(F2Vec u, F2Vec v);                 // intersection parity
F2Vec f2_transvect(F2Vec x, F2Vec c);          // x + <x,c> c
F2Vec f2_from_vec(const IVec& v);
IVec f2_to_vec(F2Vec v, int dim);
std::string f2_bits(F2Vec v, int dim);         // "a1 b1 a2 b2 ..." bitstring
F2Vec f2_parse_bits(const std::string& bits);  // inverse of f2_bits

// Action of a mod-2 matrix on a packed vector.
F2Vec f2_apply(const IMat& m, F2Vec v);

// Transvections fixing beta: all t_c with <c, beta> = 0, c != 0, ordered by
// packed value. These generate the full mod-2 stabilizer of beta.
std::vector<F2Vec> stabilizer_transvection_classes(int genus, F2Vec beta);
std::vector<IMat> stabilizer_generators(int genus, F2Vec beta);

// Orbits of the nonzero mod-2 classes under the stabilizer of beta.
// Orbits are sorted internally; the list is ordered by descending size,
// then by smallest member.
std::vector<std::vector<F2Vec>> orbit_classify(int genus, F2Vec beta);

// Deterministic breadth-first closure of a matrix semigroup mod p.
// Throws CapabilityError when the element budget is exceeded.
struct GroupClosure {
  Int modulus = 0;
  int dim = 0;
  std::vector<IMat> elements;  // discovery order, starts with the identity
  std::unordered_set<std::string> keys;

  std::size_t order() const { return elements.size(); }
  bool contains(const IMat& m) const;
};

GroupClosure closure_mod_p(const std::vector<IMat>& generators, Int p,
                           std::size_t element_budget = 4'000'000);

// Full mod-2 stabilizer of beta as an explicit element list. Only genus 2
// and 3 are within budget; larger genus throws CapabilityError.
GroupClosure stabilizer_closure(int genus, F2Vec beta);

// |Sp(2n, q)| = q^(n^2) * prod_{i<=n} (q^(2i) - 1); throws CapabilityError
// if the order does not fit in 63 bits.
Int sp_group_order(int n, Int q);

// Shadow of the curve complex on classes pairing oddly with beta: vertices
// {v : <v,beta> = 1}, edges {u,v} with <u,v> = 1 and u+v != beta.
struct ShadowGraph {
  int genus = 0;
  F2Vec beta = 0;
  std::vector<F2Vec> vertices;              // ascending packed value
  std::vector<std::pair<int, int>> edges;   // i < j, lexicographic
};

ShadowGraph shadow_n1(int genus, F2Vec beta);
bool graph_connected(const ShadowGraph& g);

// Orbit counts of the group generated by `generators` (mod-2 matrices) on
// vertices and on ordered edges. Any generating set gives the group orbits;
// an empty list gives singletons.
struct TransitivityReport {
  std::size_t vertex_orbits = 0;
  std::size_t ordered_edge_orbits = 0;
};

TransitivityReport transitivity_report(const ShadowGraph& g,
                                       const std::vector<IMat>& generators);

} // namespace prym
