#pragma once

#include "prym/surface.hpp"
#include "prym/types.hpp"

namespace prym {

// Integral first homology of a closed oriented polygon surface together
// with its algebraic intersection form.
//
// The basis comes from the cycle lattice of the 1-skeleton modulo face
// boundaries. The Gram matrix is computed on the barycentric refinement:
// cochain representatives dual to the cycle basis are cupped against each
// other and evaluated on the coherently oriented fundamental 2-chain. The
// global sign is pinned by a caller-supplied reference pair of cycles with
// known positive pairing; everything else (skewness, unimodularity,
// torsion-freeness) is asserted, not assumed.
struct SurfaceHomology {
  int rank = 0;
  IMat cycle_basis;    // (#edges) x rank, columns are 1-cycles
  IMat h1_projection;  // rank x (#edges); valid on cycles, kills faces
  IMat gram;           // rank x rank, skew, unimodular

  IVec coords(const IVec& edge_cycle) const { return h1_projection * edge_cycle; }
  Int pair(const IVec& x_coords, const IVec& y_coords) const {
    return (x_coords.transpose() * gram * y_coords)(0, 0);
  }
};

SurfaceHomology surface_homology(const CwSurface& s, const IVec& ref_cycle_a,
                                 const IVec& ref_cycle_b, Int ref_pairing);

} // namespace prym
