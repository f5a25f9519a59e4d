#include "prym/chains.hpp"

#include "prym/cover.hpp"
#include "prym/errors.hpp"
#include "prym/orbits.hpp"
#include "prym/snf.hpp"
#include "prym/surface.hpp"
#include "prym/symplectic.hpp"
#include "prym/types.hpp"

#include "doctest.h"

#include <utility>
#include <vector>

namespace {

using prym::IMat;
using prym::Int;
using prym::IVec;

std::vector<prym::ChainRep> all_reps(int genus) {
  return {prym::ChainRep::base(genus), prym::ChainRep::base(genus, -1),
          prym::ChainRep::mod_p(genus, 2), prym::ChainRep::mod_p(genus, 3),
          prym::ChainRep::identity(genus)};
}

}  // namespace

TEST_CASE("chain representations evaluate twists through homology") {
  const auto rep = prym::ChainRep::base(2);
  prym::SymplecticSpace s(2);
  IVec c(4);
  c << 1, 0, -1, 2;
  CHECK((rep.twist(c) - prym::transvection(c, s.form())).isZero(0));

  const auto flipped = prym::ChainRep::base(2, -1);
  CHECK((rep.twist(c) * flipped.twist(c) - IMat::Identity(4, 4)).isZero(0));

  const auto mod3 = prym::ChainRep::mod_p(2, 3);
  CHECK((mod3.twist(c) - prym::reduce_mod(rep.twist(c), 3)).isZero(0));

  const auto triv = prym::ChainRep::identity(2);
  CHECK(triv.trivial);
  CHECK((triv.twist(c) - IMat::Identity(4, 4)).isZero(0));

  // word and power agree with direct products
  const IMat w = rep.word({c, c}, {2, -1});
  CHECK((w - rep.twist(c)).isZero(0));
  CHECK((rep.power(rep.twist(c), 3) - rep.twist(c) * rep.twist(c) * rep.twist(c))
            .isZero(0));
  CHECK((rep.word({c}, {-1}) * rep.twist(c) - IMat::Identity(4, 4)).isZero(0));
  CHECK_THROWS_AS((void)rep.power(rep.twist(c), -2), prym::UsageError);
}

TEST_CASE("the two-chain relation holds exactly in every representation") {
  for (int genus : {1, 2, 3, 4}) {
    prym::RibbonSurface s(genus);
    const auto cfg = prym::two_chain_config(s);
    CHECK(cfg.chain2.empty());
    CHECK(cfg.d1.isZero(0));  // one-boundary torus neighborhood
    if (genus >= 2) CHECK_NOTHROW(prym::validate_chain_config(cfg));

    for (const auto& rep : all_reps(genus)) {
      const auto r = prym::verify_two_chain(cfg, rep);
      CHECK(r.pass);
      CHECK((r.left - r.right).isZero(0));
      CHECK(r.discrepancy.size() == 0);
    }
  }
}

TEST_CASE("the sixth power of a two-curve chain word negates its span") {
  prym::RibbonSurface s(2);
  const auto rep = prym::ChainRep::base(2);
  const IVec c1 = prym::homology_class(s, prym::Loop::parse(s, "a1"));
  const IVec c2 = prym::homology_class(s, prym::Loop::parse(s, "b1"));

  const auto r = prym::verify_minus_id_span(c1, c2, rep);
  CHECK(r.pass);

  const IMat m = r.left;
  CHECK_FALSE((m - IMat::Identity(4, 4)).isZero(0));
  CHECK((m * m - IMat::Identity(4, 4)).isZero(0));
  CHECK((m * c1 + c1).isZero(0));
  CHECK((m * c2 + c2).isZero(0));
  // pairing-orthogonal complement is fixed
  const IVec a2 = prym::homology_class(s, prym::Loop::parse(s, "a2"));
  const IVec b2 = prym::homology_class(s, prym::Loop::parse(s, "b2"));
  CHECK((m * a2 - a2).isZero(0));
  CHECK((m * b2 - b2).isZero(0));

  // classes pairing to 0 are rejected
  CHECK_THROWS_AS((void)prym::verify_minus_id_span(c1, a2, rep),
                  prym::ConfigurationError);
}

TEST_CASE("complementary chains agree and match the boundary twists") {
  for (int genus : {4, 5}) {
    prym::RibbonSurface s(genus);
    const auto cfg = prym::complementary_chain_config(s);
    CHECK_NOTHROW(prym::validate_chain_config(cfg));
    CHECK(cfg.chain1.size() == 3);
    CHECK(cfg.chain2.size() == static_cast<std::size_t>(2 * genus - 3));

    // both neighborhoods share the boundary classes +-a_{g-1}
    const IVec a = prym::homology_class(
        s, prym::Loop::parse(s, "a" + std::to_string(genus - 1)));
    const bool plus_minus = (cfg.d1 - a).isZero(0) && (cfg.d2 + a).isZero(0);
    const bool minus_plus = (cfg.d1 + a).isZero(0) && (cfg.d2 - a).isZero(0);
    CHECK((plus_minus || minus_plus));

    for (const auto& rep : all_reps(genus)) {
      const auto r = prym::verify_complementary_chains(cfg, rep);
      CHECK(r.pass);
      if (!rep.trivial) {
        // both sides equal the product of the two boundary twists
        CHECK((r.left - rep.reduce(rep.twist(cfg.d1) * rep.twist(cfg.d2)))
                  .isZero(0));
      }
    }
  }

  CHECK_THROWS_AS((void)prym::complementary_chain_config(prym::RibbonSurface(3)),
                  prym::UsageError);
}

TEST_CASE("configuration validation names broken chain adjacency") {
  prym::RibbonSurface s(4);
  auto cfg = prym::complementary_chain_config(s);
  std::swap(cfg.chain1[0], cfg.chain1[2]);
  CHECK_THROWS_AS(prym::validate_chain_config(cfg), prym::ConfigurationError);
}

TEST_CASE("plain chain relations recover the boundary for small chains") {
  prym::RibbonSurface s(2);
  const auto rep = prym::ChainRep::base(2);

  const std::vector<prym::Loop> even = {prym::Loop::parse(s, "a1"),
                                        prym::Loop::parse(s, "b1")};
  const auto re = prym::verify_k_chain(s, even, rep);
  CHECK(re.pass);

  const std::vector<prym::Loop> odd = {prym::Loop::parse(s, "a1"),
                                       prym::Loop::parse(s, "b1"),
                                       prym::Loop::parse(s, "a1 a2")};
  const auto ro = prym::verify_k_chain(s, odd, rep);
  CHECK(ro.pass);

  const auto mod2 = prym::verify_k_chain(s, odd, prym::ChainRep::mod_p(2, 2));
  CHECK(mod2.pass);
}

TEST_CASE("transvection powers are recognized with primitive normalized curve") {
  prym::SymplecticSpace s(2);
  const IMat j = s.form();
  IVec c(4);
  c << 0, -1, 0, 1;
  const IMat t = prym::transvection(c, j);

  const auto id = prym::as_transvection_power(IMat::Identity(4, 4), j);
  REQUIRE(id.has_value());
  CHECK(id->first == 0);

  const auto cubed = prym::as_transvection_power(IMat(t * t * t), j);
  REQUIRE(cubed.has_value());
  CHECK(cubed->first == 3);
  IVec normalized(4);
  normalized << 0, 1, 0, -1;  // first nonzero coordinate positive
  CHECK((cubed->second - normalized).isZero(0));
  // the normalized curve regenerates the power
  CHECK((prym::transvection(cubed->second, j) *
             prym::transvection(cubed->second, j) *
             prym::transvection(cubed->second, j) -
         t * t * t)
            .isZero(0));

  const auto inv = prym::as_transvection_power(prym::unimodular_inverse(t), j);
  REQUIRE(inv.has_value());
  CHECK(inv->first == -1);

  CHECK_FALSE(prym::as_transvection_power(IMat(-IMat::Identity(4, 4)), j)
                  .has_value());
}

TEST_CASE("the lifted complementary identity needs the deck correction") {
  prym::RibbonSurface s(4);
  const auto cfg = prym::complementary_chain_config(s);
  const prym::F2Vec beta = prym::f2_from_vec(cfg.beta_class());
  const auto ch = prym::cover_homology(prym::build_cover(s, beta));

  const auto r = prym::verify_lifted_obstruction(ch, cfg);
  CHECK(r.pass());
  CHECK(r.corrected.pass);
  CHECK(r.uncorrected_fails);
  CHECK(r.prym_negated);
  CHECK(r.plus_agrees);
  CHECK((r.prym_left + r.prym_right).isZero(0));
  CHECK_FALSE((r.prym_left - r.prym_right).isZero(0));
}
