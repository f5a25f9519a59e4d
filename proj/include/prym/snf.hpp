#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prym/types.hpp"

namespace prym {

// Exact integer linear algebra on small dense matrices: Smith normal form
// with tracked transforms, integer kernels and solves, unimodular inverses,
// and congruence reduction of skew forms to symplectic shape. All routines
// are deterministic: pivot choice is smallest magnitude, then lowest index.

struct SmithResult {
  IMat u;        // unimodular, rows combos
  IMat s;        // diagonal, d_i | d_{i+1} over the nonzero prefix
  IMat v;        // unimodular, column combos; u * a * v == s
  int rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IMat& a);

// Columns form a basis of { x : a x = 0 } over the integers. Kernels of
// integer matrices are saturated, so no content division is needed.
IMat kernel_basis(const IMat& a);

// Integer solution of a x = b, if one exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// Exact determinant (Bareiss, 128-bit intermediates, overflow-checked).
Int determinant(const IMat& a);

bool is_unimodular(const IMat& a);

// Inverse of a unimodular matrix, exact over the integers.
IMat unimodular_inverse(const IMat& a);

// Integer left inverse of a matrix whose columns span a saturated sublattice
// (all elementary divisors 1); throws otherwise.
IMat integer_left_inverse(const IMat& a);

// Basis of the quotient lattice Z^k / column-span(relations), which must be
// free (every elementary divisor 0 or +-1; anything else throws).
struct QuotientBasis {
  IMat basis;       // k x q, columns represent the quotient basis
  IMat projection;  // q x k, projection * basis == Id_q and projection
                    // kills the relation columns
};

QuotientBasis quotient_basis(int k, const IMat& relations);

// Congruence reduction of a nondegenerate skew form: returns unimodular w
// with w^T g w in symplectic shape. Pairs are reported in discovery order
// with positive pivots d_i (unimodular input gives all d_i = 1).
enum class PairLayout {
  Interleaved,  // (e1, f1, e2, f2, ...)
  Blocks,       // (e1, ..., em, f1, ..., fm)
};

struct SkewReduction {
  IMat w;                 // basis change; w^T g w is in the requested layout
  std::vector<Int> divisors;
};

SkewReduction skew_reduce(const IMat& g, PairLayout layout);

// Standard symplectic Gram matrix of rank 2m in the given layout with the
// given pair divisors (all ones unless specified).
IMat standard_skew_gram(int m, PairLayout layout, const std::vector<Int>& divisors = {});

} // namespace prym
