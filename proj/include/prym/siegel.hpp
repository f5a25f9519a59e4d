#pragma once

#include <cstdint>
#include <string>

#include "prym/types.hpp"

namespace prym {

// Default tolerances: Siegel membership and residual comparisons, the
// equivariance residual bound, and fixed-point acceptance.
struct SiegelTols {
  double membership = 1e-10;
  double equivariance = 1e-9;
  double fixed_point = 1e-12;
};

// Symmetric to tol in Frobenius norm, imaginary part positive definite with
// smallest eigenvalue above tol.
bool is_siegel_point(const CMat& tau, double tol);
void require_siegel_point(const CMat& tau, double tol);  // DegenerateInput

// Element of the modular group on h x h Siegel space: 2h x 2h integer matrix
// preserving the block symplectic form up to the labelled sign.
struct ModularElement {
  IMat m;
  bool anti = false;  // sends the form to its negative

  static ModularElement from(const IMat& m);  // classifies; UsageError if neither

  int half() const { return static_cast<int>(m.rows()) / 2; }
  IMat alpha() const { return m.topLeftCorner(half(), half()); }
  IMat beta() const { return m.topRightCorner(half(), half()); }
  IMat gamma() const { return m.bottomLeftCorner(half(), half()); }
  IMat delta() const { return m.bottomRightCorner(half(), half()); }

  // conjugate by Z = diag(Id, -Id): flips the off-diagonal blocks
  ModularElement z_conjugate() const;
};

// Fractional linear actions on Siegel space: the standard action
// (alpha tau + beta)(gamma tau + delta)^-1 and the sign-twisted variant
// (alpha tau - beta)(-gamma tau + delta)^-1. Near-singular denominators
// raise DegenerateInput with the condition number; symplectic input only.
// Input and output are validated as Siegel points with a scale-relative
// symmetry tolerance and strict positive definiteness, so large integer
// words cannot fail an absolute margin they mathematically preserve.
CMat act(const ModularElement& m, const CMat& tau, double tol = 1e-10);
CMat act_variant(const ModularElement& m, const CMat& tau, double tol = 1e-10);

// tau -> -conj(tau): anti-holomorphic involution of Siegel space.
CMat neg_conj(const CMat& tau);

// Period matrix of the cover in the symmetric handle basis, together with
// the deck action in the same basis. Blocks over the handle index sets {0},
// {1..g-1}, {g..2g-2}:  (* * *; * B C^T; * C D).
struct PeriodMatrix {
  CMat pi;     // (2g-1) x (2g-1)
  IMat sigma;  // 2(2g-1) square, symplectic, order two
  int g = 0;

  int handles() const { return 2 * g - 1; }
  CMat block_b() const { return pi.block(1, 1, g - 1, g - 1); }
  CMat block_c() const { return pi.block(g, 1, g - 1, g - 1); }
  CMat block_d() const { return pi.block(g, g, g - 1, g - 1); }

  // permutation part of sigma on the a-handles; UsageError when sigma has
  // nonvanishing off-diagonal symplectic blocks
  IMat a_permutation() const;
};

// tau = B - C. Requires pi to be a Siegel point fixed by the sigma-induced
// action P pi P^T to fixed_point tolerance; the result is validated.
CMat prym_extract(const PeriodMatrix& pm, const SiegelTols& tols = {});

// Seeded sigma-fixed Siegel point: a random point averaged over the linear
// action P tau P^T when sigma is block-diagonal, else driven to a fixed
// point by midpoint iteration (at most 200 steps; failure raises
// DegenerateInput with the residual).
PeriodMatrix random_symmetric_period(const IMat& sigma_sym, int g,
                                     std::uint64_t seed,
                                     const SiegelTols& tols = {});

// Random Siegel point of size h: symmetrized uniform real part, imaginary
// part A A^T + h Id.
CMat random_siegel_point(int h, std::uint64_t seed);

// Equivariance of extraction: the action of m_sym upstairs against the
// action of its Prym restriction m_minus downstairs, under each convention
// pairing. The consistent conventions (variant or standard on both sides)
// are the meaningful residuals; the mixed pairing (standard upstairs,
// variant downstairs) is reported for comparison.
struct EquivarianceResiduals {
  double variant_both = 0;
  double standard_both = 0;
  double mixed = 0;
};

EquivarianceResiduals equivariance_residuals(const IMat& m_sym,
                                             const IMat& m_minus,
                                             const PeriodMatrix& pm,
                                             const SiegelTols& tols = {});

// || neg_conj(act(m, tau)) - act(ZmZ, neg_conj(tau)) ||_F.
double antiholomorphic_residual(const ModularElement& m, const CMat& tau,
                                double tol = 1e-10);

} // namespace prym
