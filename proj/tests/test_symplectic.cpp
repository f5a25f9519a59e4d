#include "prym/symplectic.hpp"

#include "prym/errors.hpp"
#include "prym/snf.hpp"
#include "prym/types.hpp"
#include "prym/words.hpp"

#include "doctest.h"

#include <string>
#include <vector>

namespace {

using prym::IMat;
using prym::Int;
using prym::IVec;

IMat m22(Int a, Int b, Int c, Int d) {
  IMat m(2, 2);
  m << a, b, c, d;
  return m;
}

// base representation on H1 of the genus-g surface: Ta_i, Tb_i transvections
prym::Rep twist_rep(const prym::SymplecticSpace& space) {
  prym::Rep rep(space.dim());
  for (int i = 1; i <= space.genus(); ++i) {
    rep.add("Ta" + std::to_string(i),
            prym::transvection(space.basis_vector(space.a_index(i)), space.form()));
    rep.add("Tb" + std::to_string(i),
            prym::transvection(space.basis_vector(space.b_index(i)), space.form()));
  }
  return rep;
}

}  // namespace

TEST_CASE("interleaved and block Gram matrices match the hand forms") {
  prym::SymplecticSpace s(2);
  CHECK(s.dim() == 4);
  CHECK(s.a_index(1) == 0);
  CHECK(s.b_index(1) == 1);
  CHECK(s.a_index(2) == 2);

  IMat inter(4, 4);
  inter << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  CHECK((s.form() - inter).isZero(0));

  IMat blocks(4, 4);
  blocks << 0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0;
  CHECK((s.block_form() - blocks).isZero(0));

  const IMat p = prym::interleave_to_block_permutation(2);
  CHECK(prym::is_unimodular(p));
  CHECK((p * s.form() * p.transpose() - s.block_form()).isZero(0));
  // a2 (interleaved slot 2) lands in block slot 1
  CHECK((p * s.basis_vector(2) - s.basis_vector(1)).isZero(0));
}

TEST_CASE("transvections realize the genus-one twist matrices") {
  prym::SymplecticSpace s(1);
  const IMat ta = prym::transvection(s.basis_vector(0), s.form());
  const IMat tb = prym::transvection(s.basis_vector(1), s.form());
  CHECK((ta - m22(1, -1, 0, 1)).isZero(0));
  CHECK((tb - m22(1, 0, 1, 1)).isZero(0));

  // flipped convention inverts the twist
  const IMat ta_flip = prym::transvection(s.basis_vector(0), s.form(), -1);
  CHECK((ta * ta_flip - IMat::Identity(2, 2)).isZero(0));
}

TEST_CASE("the word Ta1^2 Tb1 has trace zero and fourth power one") {
  prym::SymplecticSpace s(1);
  const auto rep = twist_rep(s);
  const IMat m = rep.eval(prym::TwistWord::parse("Ta1^2 Tb1"));
  CHECK((m - m22(-1, -2, 1, 1)).isZero(0));
  CHECK((m * m + IMat::Identity(2, 2)).isZero(0));
  CHECK((m * m * m * m - IMat::Identity(2, 2)).isZero(0));
}

TEST_CASE("transvections are symplectic and conjugation moves the curve") {
  prym::SymplecticSpace s(2);
  const IMat j = s.form();
  IVec c(4);
  c << 1, -2, 0, 3;
  const IMat t = prym::transvection(c, j);
  CHECK((t.transpose() * j * t - j).isZero(0));
  CHECK(prym::classify_form_action(t, j) == prym::FormClass::Symplectic);

  const auto rep = twist_rep(s);
  const IMat m = rep.eval(prym::TwistWord::parse("Ta1 Tb2^2 Tb1^-1 Ta2"));
  const IMat lhs = m * t * prym::unimodular_inverse(m);
  const IMat rhs = prym::transvection(m * c, j);
  CHECK((lhs - rhs).isZero(0));
}

TEST_CASE("form action classification separates the three cases") {
  prym::SymplecticSpace s(2);
  const IMat jb = s.block_form();
  const IMat z = prym::block_sign_involution(2);
  CHECK(prym::classify_form_action(z, jb) == prym::FormClass::AntiSymplectic);
  CHECK(prym::classify_form_action(IMat::Identity(4, 4), jb) ==
        prym::FormClass::Symplectic);
  CHECK(prym::classify_form_action(2 * IMat::Identity(4, 4), jb) ==
        prym::FormClass::Neither);
  CHECK((z * z - IMat::Identity(4, 4)).isZero(0));
}

TEST_CASE("mod-p reduction is entrywise into [0,p) and multiplicative") {
  const IMat a = m22(-1, 5, 7, -9);
  const IMat r = prym::reduce_mod(a, 4);
  CHECK((r - m22(3, 1, 3, 3)).isZero(0));

  prym::SymplecticSpace s(2);
  const auto rep = twist_rep(s);
  const IMat m = rep.eval(prym::TwistWord::parse("Ta1 Tb1 Ta2^3"));
  const IMat n = rep.eval(prym::TwistWord::parse("Tb2^2 Ta1^-1"));
  for (Int p : {2, 3, 5}) {
    CHECK((prym::reduce_mod(IMat(m * n), p) -
           prym::reduce_mod(IMat(prym::reduce_mod(m, p) * prym::reduce_mod(n, p)), p))
              .isZero(0));
  }
}

TEST_CASE("level membership follows the congruence reading by default") {
  prym::SymplecticSpace s(1);
  const IMat u = prym::transvection(s.basis_vector(1), s.form());  // u e1 = e1 + e2
  CHECK_FALSE(prym::in_lambda_p(u, 2, s));
  CHECK(prym::in_lambda_p(IMat(u * u), 2, s));
  for (Int p : {2, 3, 5, 7}) {
    IMat up = IMat::Identity(2, 2);
    for (Int k = 0; k < p; ++k) up = IMat(up * u);
    CHECK(prym::in_lambda_p(up, p, s));
    // strict reading: A e1 - e1 = p * b1 is off the a1 line
    CHECK_FALSE(prym::in_lambda_p(up, p, s, true));
  }
  CHECK(prym::in_lambda_p(IMat::Identity(2, 2), 3, s, true));
  CHECK_THROWS_AS((void)prym::in_lambda_p(u, 1, s), prym::UsageError);
}

TEST_CASE("phi values on twist powers match the pairing formula") {
  prym::SymplecticSpace s(1);
  const IMat u = prym::transvection(s.basis_vector(1), s.form());
  for (Int p : {2, 3, 5, 7}) {
    IMat up = IMat::Identity(2, 2);
    for (Int k = 0; k < p; ++k) up = IMat(up * u);
    // T_b1^p sends e1 to e1 + p b1 and <b1, a1> = -1
    CHECK(prym::phi_p(up, p, s) == p - 1);
    CHECK(prym::phi_p(IMat::Identity(2, 2), p, s) == 0);
  }
  CHECK_THROWS_AS((void)prym::phi_p(u, 2, s), prym::UsageError);
}

TEST_CASE("phi is additive on sampled level subgroup pairs") {
  prym::SymplecticSpace s(2);
  const IMat j = s.form();
  std::vector<IMat> gens;
  IVec c1(4), c2(4), c3(4);
  c1 << 0, 1, 0, 0;
  c2 << 1, 1, 0, 0;
  c3 << 0, 1, 1, 1;
  for (Int p : {2, 3, 5}) {
    gens.clear();
    for (const IVec& c : {c1, c2, c3}) {
      IMat t = prym::transvection(c, j), tp = IMat::Identity(4, 4);
      for (Int k = 0; k < p; ++k) tp = IMat(tp * t);
      REQUIRE(prym::in_lambda_p(tp, p, s));
      gens.push_back(tp);
    }
    for (const IMat& a : gens) {
      for (const IMat& b : gens) {
        const Int lhs = prym::phi_p(IMat(a * b), p, s);
        const Int rhs = (prym::phi_p(a, p, s) + prym::phi_p(b, p, s)) % p;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("twist words parse, print, and evaluate in order") {
  const auto w = prym::TwistWord::parse("Ta1^2  Tb1");
  CHECK(w.str() == "Ta1^2 Tb1");
  CHECK(w.length() == 3);
  CHECK(prym::TwistWord::parse(w.str()).str() == w.str());

  prym::SymplecticSpace s(1);
  const auto rep = twist_rep(s);
  CHECK((rep.eval(prym::TwistWord{}) - IMat::Identity(2, 2)).isZero(0));
  // negative exponents invert exactly
  const IMat ti = rep.eval(prym::TwistWord::parse("Ta1^-1"));
  CHECK((ti - m22(1, 1, 0, 1)).isZero(0));
  CHECK_THROWS_AS((void)rep.eval(prym::TwistWord::parse("Tc9")), prym::UsageError);

  auto grown = prym::TwistWord{}.append("Ta1", 2).append("Tb1");
  CHECK(grown.str() == "Ta1^2 Tb1");
  CHECK(grown.concat(prym::TwistWord::parse("Ta1")).str() == "Ta1^2 Tb1 Ta1");

  const auto triv = prym::trivial_rep(2, {"Ta1", "Tb1"});
  CHECK((triv.eval(grown) - IMat::Identity(2, 2)).isZero(0));
}
