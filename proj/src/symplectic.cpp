#include "prym/symplectic.hpp"

namespace prym {

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 1) throw UsageError("genus must be at least 1");
}

int SymplecticSpace::a_index(int i) const {
  if (i < 1 || i > genus_) throw UsageError("handle index out of range");
  return 2 * (i - 1);
}

int SymplecticSpace::b_index(int i) const {
  if (i < 1 || i > genus_) throw UsageError("handle index out of range");
  return 2 * (i - 1) + 1;
}

IVec SymplecticSpace::basis_vector(int index) const {
  if (index < 0 || index >= dim()) throw UsageError("basis index out of range");
  IVec v = IVec::Zero(dim());
  v(index) = 1;
  return v;
}

IMat SymplecticSpace::form() const {
  IMat j = IMat::Zero(dim(), dim());
  for (int i = 0; i < genus_; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

IMat SymplecticSpace::block_form() const {
  IMat p = interleave_to_block_permutation(genus_);
  return p * form() * p.transpose();
}

IMat interleave_to_block_permutation(int genus) {
  const int n = 2 * genus;
  IMat p = IMat::Zero(n, n);
  for (int i = 0; i < genus; ++i) {
    p(i, 2 * i) = 1;          // a_i moves to slot i
    p(genus + i, 2 * i + 1) = 1;  // b_i moves to slot g+i
  }
  return p;
}

Int form_pair(const IVec& x, const IVec& y, const IMat& j) {
  if (x.size() != j.rows() || y.size() != j.cols())
    throw UsageError("pairing arguments do not match the form");
  return (x.transpose() * j * y)(0, 0);
}

IMat transvection(const IVec& c, const IMat& j, int sign) {
  if (c.size() != j.rows()) throw UsageError("class does not match the form");
  if (sign != 1 && sign != -1) throw UsageError("twist sign must be +1 or -1");
  const int n = static_cast<int>(c.size());
  // x + s<x,c>c as a matrix is Id - s * c c^T J
  return IMat::Identity(n, n) - sign * (c * (c.transpose() * j));
}

FormClass classify_form_action(const IMat& m, const IMat& j) {
  if (m.rows() != m.cols() || m.rows() != j.rows())
    throw UsageError("matrix does not match the form");
  IMat g = m.transpose() * j * m;
  if ((g - j).isZero(0)) return FormClass::Symplectic;
  if ((g + j).isZero(0)) return FormClass::AntiSymplectic;
  return FormClass::Neither;
}

IMat block_sign_involution(int genus) {
  const int n = 2 * genus;
  IMat z = IMat::Identity(n, n);
  for (int i = genus; i < n; ++i) z(i, i) = -1;
  return z;
}

IMat reduce_mod(const IMat& m, Int p) {
  if (p < 2) throw UsageError("modulus must be at least 2");
  IMat r = m;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      r(i, j) %= p;
      if (r(i, j) < 0) r(i, j) += p;
    }
  return r;
}

IVec reduce_mod(const IVec& v, Int p) {
  IMat m = reduce_mod(IMat(v), p);
  return IVec(m);
}

bool in_lambda_p(const IMat& a, Int p, const SymplecticSpace& space, bool strict) {
  if (p < 2) throw UsageError("level must be at least 2");
  if (classify_form_action(a, space.form()) != FormClass::Symplectic) return false;
  IVec d = a * space.e1() - space.e1();
  for (int i = 0; i < d.size(); ++i)
    if (d(i) % p != 0) return false;
  if (strict) {
    // A e1 - e1 must lie on the line p * Z * a1
    for (int i = 1; i < d.size(); ++i)
      if (d(i) != 0) return false;
  }
  return true;
}

Int phi_p(const IMat& a, Int p, const SymplecticSpace& space) {
  if (!in_lambda_p(a, p, space))
    throw UsageError("phi_p is only defined on the level subgroup");
  Int v = form_pair(a * space.e1(), space.e1(), space.form());
  if (v % p != 0) throw InternalError("level pairing is not divisible by p");
  Int r = (v / p) % p;
  if (r < 0) r += p;
  return r;
}

} // namespace prym
