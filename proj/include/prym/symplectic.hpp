#pragma once

#include <string>

#include "prym/errors.hpp"
#include "prym/types.hpp"

namespace prym {

// First homology of a closed genus-g surface with the algebraic intersection
// form. Coordinates are interleaved: (a1, b1, a2, b2, ...), with
// <a_i, b_i> = +1. Twists act by x -> x + <x, c> c.

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }

  // index of a_i / b_i in interleaved coordinates, handles numbered from 1
  int a_index(int i) const;
  int b_index(int i) const;

  IVec basis_vector(int index) const;
  IVec e1() const { return basis_vector(0); }

  IMat form() const;        // Gram matrix in interleaved coordinates
  IMat block_form() const;  // Gram matrix in (a..., b...) coordinates

 private:
  int genus_;
};

// Coordinate permutation from interleaved to (a..., b...) block order:
// x_block = P x_interleaved, and P J_int P^T = J_block.
IMat interleave_to_block_permutation(int genus);

// <x, y> with respect to the Gram matrix j.
Int form_pair(const IVec& x, const IVec& y, const IMat& j);

// Transvection along c: maps x to x + sign * <x, c> * c. The default sign
// is the library-wide twist convention; the flipped sign exists so whole
// suites can be replayed under the opposite convention.
IMat transvection(const IVec& c, const IMat& j, int sign = +1);

enum class FormClass { Symplectic, AntiSymplectic, Neither };

FormClass classify_form_action(const IMat& m, const IMat& j);

// diag(Id_g, -Id_g) in block coordinates: the standard anti-symplectic
// involution used by real structures.
IMat block_sign_involution(int genus);

// Entrywise reduction into [0, p).
IMat reduce_mod(const IMat& m, Int p);
IVec reduce_mod(const IVec& v, Int p);

// Membership in the level subgroup { A symplectic : A e1 = e1 mod p }.
// strict additionally demands A e1 - e1 be an integer multiple of p*a1,
// the narrower reading; the congruence reading is the default.
bool in_lambda_p(const IMat& a, Int p, const SymplecticSpace& space,
                 bool strict = false);

// phi_p(A) = (1/p) <A e1, e1> mod p, a surjective homomorphism from the
// level subgroup onto Z/p. Returns a value in [0, p).
Int phi_p(const IMat& a, Int p, const SymplecticSpace& space);

} // namespace prym
