#pragma once

#include <string>
#include <vector>

#include "prym/orbits.hpp"
#include "prym/pairing.hpp"
#include "prym/surface.hpp"
#include "prym/types.hpp"

namespace prym {

// Double cover of the one-vertex model classified by a nonzero mod-2 class.
// Sheets are 0 and 1. Base edge e lifts to cover edges 2e (tail on sheet 0)
// and 2e+1 (tail on sheet 1); the head sheet is the tail sheet xor m(e).
struct DoubleCover {
  RibbonSurface base;
  F2Vec beta = 0;
  std::vector<int> monodromy;  // per base edge, in {0,1}
  CwSurface total;             // 2 vertices, 4g edges, 2 faces

  int lift_edge(int base_edge, int sheet) const { return 2 * base_edge + sheet; }
  int deck_edge(int cover_edge) const { return cover_edge ^ 1; }
  IMat deck_edge_matrix() const;            // permutation on cover edge chains
  IVec transfer(const IVec& base_chain) const;  // sum of the two lifts per edge
};

DoubleCover build_cover(const RibbonSurface& base, F2Vec beta);

// Path lifting. Even total monodromy gives the two disjoint lifts (start
// sheets 0 and 1, swapped by the deck action); odd gives one connected lift
// traversing the loop twice. Chains are signed edge counts in the cover.
struct LoopLift {
  int monodromy = 0;
  std::vector<IVec> chains;
};
LoopLift lift_loop(const DoubleCover& cover, const Loop& c);

struct CoverHomology {
  DoubleCover cover;
  SurfaceHomology h;    // rank 4g-2
  IMat sigma;           // deck action on homology coordinates
  IMat minus_basis;     // saturated kernel of sigma + id, rank 2g-2
  IMat minus_gram;      // halved restriction of the pairing, unimodular

  int base_genus() const { return cover.base.genus(); }
  IVec cycle_class(const IVec& cover_chain) const { return h.coords(cover_chain); }
};

CoverHomology cover_homology(const DoubleCover& cover);

// Homology image of the preferred lift of the twist along c: the multitwist
// by the two lift classes when m(c) = 0 (requires the classes to pair to 0),
// the single transvection by the connected-lift class when m(c) = 1 (a lift
// of the square of the twist).
IMat lifted_twist(const CoverHomology& ch, const Loop& c);

// Symplectic basis of the cover adapted to the deck action: handle pairs
// (a_i, b_i) for i = 0..2g-2 in block layout, sigma fixing handle 0 and
// swapping handle i with i+g-1 otherwise. Built by peeling off sigma-swapped
// hyperbolic handle pairs; handle 0 is the orthogonal complement of the
// peeled handles and the action on it is computed, not assumed.
struct SymmetricFrame {
  int base_genus = 0;
  IMat frame;          // columns a_0..a_{2g-2}, b_0..b_{2g-2}, unimodular
  IMat frame_inverse;
  IMat sigma_sym;      // deck action in frame coordinates, a permutation
  std::vector<int> handle_permutation;  // image of handle index under sigma

  int handles() const { return 2 * base_genus - 1; }
  IMat to_frame(const IMat& m) const { return frame_inverse * m * frame; }
};

SymmetricFrame symmetric_frame(const CoverHomology& ch);

// Coordinates on the minus lattice: u_i = a_i - a_{i+g-1} and
// w_i = b_i - b_{i+g-1} for i = 1..g-1, block layout, standard for the
// halved pairing.
struct PrymFrame {
  IMat basis;       // (4g-2) x (2g-2), columns u_1..u_{g-1}, w_1..w_{g-1}
  IMat left;        // integer left inverse of basis
  IMat gram;        // halved pairing in these coordinates, standard block form

  int prym_dim() const { return static_cast<int>(basis.cols()); }
  // restricts a cover matrix commuting with the deck action
  IMat restrict(const IMat& m) const;
};

PrymFrame prym_frame(const CoverHomology& ch, const SymmetricFrame& sf);

// Bounded deterministic search for loop words with the given homology class
// whose lifts satisfy the realizability filter (expected monodromy, lift
// classes pairing to 0 and swapped by the deck action). Candidates are
// ordered by length, then lexicographically; the canonical letter-ordered
// word comes first when it passes. Throws ConfigurationError when no word
// within the budget passes.
std::vector<Loop> realizable_words(const CoverHomology& ch,
                                   const IVec& target_class,
                                   int max_length = 6, int max_count = 8);
Loop realizable_word(const CoverHomology& ch, const IVec& target_class,
                     int max_length = 6);

} // namespace prym
