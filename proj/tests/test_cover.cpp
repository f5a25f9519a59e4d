#include "prym/cover.hpp"

#include "prym/errors.hpp"
#include "prym/orbits.hpp"
#include "prym/pairing.hpp"
#include "prym/snf.hpp"
#include "prym/surface.hpp"
#include "prym/symplectic.hpp"
#include "prym/types.hpp"

#include "doctest.h"

#include <string>
#include <vector>

namespace {

using prym::F2Vec;
using prym::IMat;
using prym::Int;
using prym::IVec;

constexpr F2Vec kBetaB1 = 2u;

IVec unit_chain(int n, int index) {
  IVec v = IVec::Zero(n);
  v(index) = 1;
  return v;
}

prym::SurfaceHomology base_homology(const prym::RibbonSurface& s) {
  const int n = static_cast<int>(s.cw().edges.size());
  return prym::surface_homology(s.cw(), unit_chain(n, s.edge_a(1)),
                                unit_chain(n, s.edge_b(1)), 1);
}

}  // namespace

TEST_CASE("one-vertex ribbon surfaces are closed oriented of the right genus") {
  for (int genus : {1, 2, 3}) {
    prym::RibbonSurface s(genus);
    const auto& cw = s.cw();
    CHECK(cw.num_vertices == 1);
    CHECK(static_cast<int>(cw.edges.size()) == 2 * genus);
    CHECK(cw.faces.size() == 1);
    CHECK(cw.faces[0].size() == static_cast<std::size_t>(4 * genus));
    CHECK(cw.euler_characteristic() == 2 - 2 * genus);
    CHECK(cw.connected());
    CHECK_NOTHROW(cw.validate_closed_oriented());
  }

  prym::RibbonSurface s(2);
  CHECK(s.edge_name(s.edge_a(1)) == "a1");
  CHECK(s.edge_name(s.edge_b(2)) == "b2");
  CHECK(s.edge_by_name("b2") == s.edge_b(2));
  CHECK_THROWS_AS((void)s.edge_by_name("c7"), prym::UsageError);
}

TEST_CASE("loops parse, invert, and cyclically reduce") {
  prym::RibbonSurface s(2);
  const auto l = prym::Loop::parse(s, "a1 -b2 a1");
  CHECK(l.str(s) == "a1 -b2 a1");
  CHECK(l.inverse().str(s) == "-a1 b2 -a1");

  CHECK(prym::Loop::parse(s, "a1 b1 -b1").str(s) == "a1");
  // cyclic reduction cancels across the wraparound
  CHECK(prym::Loop::parse(s, "a1 b1 -a1").str(s) == "b1");

  IVec h = prym::homology_class(s, prym::Loop::parse(s, "a1 -a2 b1"));
  IVec expect(4);
  expect << 1, 1, -1, 0;  // interleaved (a1, b1, a2, b2)
  CHECK((h - expect).isZero(0));
}

TEST_CASE("base surface homology carries the interleaved intersection form") {
  for (int genus : {1, 2, 3}) {
    prym::RibbonSurface s(genus);
    const auto h = base_homology(s);
    CHECK(h.rank == 2 * genus);
    CHECK((h.gram - prym::SymplecticSpace(genus).form()).isZero(0));
    const int n = static_cast<int>(s.cw().edges.size());
    // edge loop coordinates are the interleaved basis vectors
    for (int e = 0; e < n; ++e) {
      CHECK((h.coords(unit_chain(n, e)) - IVec::Unit(2 * genus, e)).isZero(0));
    }
  }
}

TEST_CASE("double covers have the expected combinatorics and monodromy") {
  prym::RibbonSurface base(2);
  const auto cover = prym::build_cover(base, kBetaB1);

  CHECK(cover.total.num_vertices == 2);
  CHECK(cover.total.edges.size() == 8);
  CHECK(cover.total.faces.size() == 2);
  CHECK(cover.total.euler_characteristic() == -4);  // genus 3 = 2g - 1
  CHECK_NOTHROW(cover.total.validate_closed_oriented());

  // monodromy of an edge loop is its mod-2 pairing with the cover class
  const auto h = base_homology(base);
  for (int e = 0; e < 4; ++e) {
    const F2Vec cls = prym::f2_from_vec(h.coords(unit_chain(4, e)));
    CHECK(cover.monodromy[e] == prym::f2_pair(cls, kBetaB1));
  }

  const IMat deck = cover.deck_edge_matrix();
  CHECK((deck * deck - IMat::Identity(8, 8)).isZero(0));
  for (int e = 0; e < 8; ++e) {
    CHECK(cover.deck_edge(e) == (e ^ 1));
    CHECK(deck(cover.deck_edge(e), e) == 1);  // no fixed darts
  }

  CHECK_THROWS_AS((void)prym::build_cover(base, F2Vec{0}), prym::UsageError);
}

TEST_CASE("loop lifts split by monodromy and the deck action swaps them") {
  prym::RibbonSurface base(2);
  const auto cover = prym::build_cover(base, kBetaB1);
  const auto ch = prym::cover_homology(cover);
  const IMat deck = cover.deck_edge_matrix();

  const auto even = prym::lift_loop(cover, prym::Loop::parse(base, "b1"));
  CHECK(even.monodromy == 0);
  REQUIRE(even.chains.size() == 2);
  CHECK((deck * even.chains[0] - even.chains[1]).isZero(0));
  const IVec c0 = ch.cycle_class(even.chains[0]);
  const IVec c1 = ch.cycle_class(even.chains[1]);
  CHECK(ch.h.pair(c0, c1) == 0);
  CHECK((ch.sigma * c0 - c1).isZero(0));

  const auto odd = prym::lift_loop(cover, prym::Loop::parse(base, "a1"));
  CHECK(odd.monodromy == 1);
  REQUIRE(odd.chains.size() == 1);
  // the connected lift is deck-invariant as a chain
  CHECK((deck * odd.chains[0] - odd.chains[0]).isZero(0));

  // the two even lifts sum to the transfer of the base loop
  IVec base_chain = IVec::Zero(4);
  base_chain(base.edge_b(1)) = 1;
  CHECK((even.chains[0] + even.chains[1] - cover.transfer(base_chain)).isZero(0));
}

TEST_CASE("transfer doubles the intersection pairing") {
  for (int genus : {2, 3}) {
    prym::RibbonSurface base(genus);
    const auto bh = base_homology(base);
    const auto cover = prym::build_cover(base, kBetaB1);
    const auto ch = prym::cover_homology(cover);
    const int n = static_cast<int>(base.cw().edges.size());
    for (int e = 0; e < n; ++e) {
      for (int f = 0; f < n; ++f) {
        const IVec x = unit_chain(n, e), y = unit_chain(n, f);
        const Int up = ch.h.pair(ch.cycle_class(cover.transfer(x)),
                                 ch.cycle_class(cover.transfer(y)));
        CHECK(up == 2 * bh.pair(bh.coords(x), bh.coords(y)));
      }
    }
  }
}

TEST_CASE("cover homology splits off a unimodular minus lattice") {
  for (int genus : {2, 3, 4}) {
    for (F2Vec beta : {1u, 2u, 3u}) {
      prym::RibbonSurface base(genus);
      const auto ch = prym::cover_homology(prym::build_cover(base, beta));

      CHECK(ch.h.rank == 4 * genus - 2);
      CHECK((ch.sigma * ch.sigma - IMat::Identity(ch.h.rank, ch.h.rank)).isZero(0));
      CHECK((ch.sigma.transpose() * ch.h.gram * ch.sigma - ch.h.gram).isZero(0));

      CHECK(ch.minus_basis.cols() == 2 * genus - 2);
      CHECK((ch.sigma * ch.minus_basis + ch.minus_basis).isZero(0));
      const IMat restricted =
          ch.minus_basis.transpose() * ch.h.gram * ch.minus_basis;
      CHECK((restricted - 2 * ch.minus_gram).isZero(0));
      CHECK(prym::is_unimodular(ch.minus_gram));
    }
  }
}

TEST_CASE("lifted twists split into multitwists and connected-lift twists") {
  prym::RibbonSurface base(2);
  const auto cover = prym::build_cover(base, kBetaB1);
  const auto ch = prym::cover_homology(cover);
  const int r = ch.h.rank;

  // even monodromy: the commuting product of the two lift transvections
  const auto even = prym::lift_loop(cover, prym::Loop::parse(base, "b1"));
  const IVec c0 = ch.cycle_class(even.chains[0]);
  const IVec c1 = ch.cycle_class(even.chains[1]);
  const IMat t0 = prym::transvection(c0, ch.h.gram);
  const IMat t1 = prym::transvection(c1, ch.h.gram);
  CHECK((t0 * t1 - t1 * t0).isZero(0));
  const IMat multi = prym::lifted_twist(ch, prym::Loop::parse(base, "b1"));
  CHECK((multi - t0 * t1).isZero(0));
  CHECK((ch.sigma * multi * ch.sigma - multi).isZero(0));

  // odd monodromy: one transvection along the connected lift class
  const auto odd = prym::lift_loop(cover, prym::Loop::parse(base, "a1"));
  const IMat single = prym::lifted_twist(ch, prym::Loop::parse(base, "a1"));
  CHECK((single - prym::transvection(ch.cycle_class(odd.chains[0]), ch.h.gram))
            .isZero(0));
  CHECK((ch.sigma * single * ch.sigma - single).isZero(0));
  CHECK(prym::classify_form_action(single, ch.h.gram) ==
        prym::FormClass::Symplectic);
  CHECK((single - IMat::Identity(r, r)).isZero(0) == false);
}

TEST_CASE("symmetric frames standardize the form and the deck permutation") {
  auto check_frame = [](int genus, F2Vec beta) {
    prym::RibbonSurface base(genus);
    const auto ch = prym::cover_homology(prym::build_cover(base, beta));
    const auto sf = prym::symmetric_frame(ch);
    const int h = sf.handles();

    CHECK(h == 2 * genus - 1);
    CHECK(prym::is_unimodular(sf.frame));
    CHECK((sf.frame_inverse * sf.frame - IMat::Identity(2 * h, 2 * h)).isZero(0));
    CHECK((sf.frame.transpose() * ch.h.gram * sf.frame -
           prym::standard_skew_gram(h, prym::PairLayout::Blocks))
              .isZero(0));

    const IMat ss = sf.to_frame(ch.sigma);
    CHECK((ss - sf.sigma_sym).isZero(0));
    CHECK((ss * ss - IMat::Identity(2 * h, 2 * h)).isZero(0));
    CHECK(sf.handle_permutation[0] == 0);
    for (int i = 1; i < genus; ++i) {
      CHECK(sf.handle_permutation[i] == i + genus - 1);
      CHECK(sf.handle_permutation[i + genus - 1] == i);
    }
    // permutation matrix entries only
    for (int i = 0; i < ss.rows(); ++i) {
      Int row = 0;
      for (int j = 0; j < ss.cols(); ++j) {
        CHECK((ss(i, j) == 0 || ss(i, j) == 1));
        row += ss(i, j);
      }
      CHECK(row == 1);
    }
  };

  for (int genus : {2, 3}) {
    const F2Vec n = 1u << (2 * genus);
    for (F2Vec beta = 1; beta < n; ++beta) check_frame(genus, beta);
  }
  for (F2Vec beta : {1u, 2u, 3u}) check_frame(4, beta);
}

TEST_CASE("prym frames restrict the deck action to minus the identity") {
  for (int genus : {2, 3, 4}) {
    for (F2Vec beta : {1u, 2u, 3u}) {
      prym::RibbonSurface base(genus);
      const auto ch = prym::cover_homology(prym::build_cover(base, beta));
      const auto sf = prym::symmetric_frame(ch);
      const auto pf = prym::prym_frame(ch, sf);
      const int d = pf.prym_dim();

      CHECK(d == 2 * genus - 2);
      CHECK((pf.left * pf.basis - IMat::Identity(d, d)).isZero(0));
      CHECK((pf.gram -
             prym::standard_skew_gram(genus - 1, prym::PairLayout::Blocks))
                .isZero(0));
      CHECK((pf.restrict(ch.sigma) + IMat::Identity(d, d)).isZero(0));
    }
  }
}

TEST_CASE("prym images of lifted twists are transvections or trivial") {
  for (int genus : {2, 3}) {
    prym::RibbonSurface base(genus);
    const auto cover = prym::build_cover(base, kBetaB1);
    const auto ch = prym::cover_homology(cover);
    const auto pf = prym::prym_frame(ch, prym::symmetric_frame(ch));
    const int d = pf.prym_dim();

    // multitwist: transvection along the lift-difference class
    const auto even = prym::lift_loop(cover, prym::Loop::parse(base, "b1"));
    const IVec diff =
        ch.cycle_class(even.chains[0]) - ch.cycle_class(even.chains[1]);
    const IMat downstairs =
        pf.restrict(prym::lifted_twist(ch, prym::Loop::parse(base, "b1")));
    CHECK((downstairs - prym::transvection(IVec(pf.left * diff), pf.gram))
              .isZero(0));

    // connected lift: trivial on the minus lattice
    const IMat conn =
        pf.restrict(prym::lifted_twist(ch, prym::Loop::parse(base, "a1")));
    CHECK((conn - IMat::Identity(d, d)).isZero(0));
  }
}

TEST_CASE("word search returns the canonical realizable loop first") {
  prym::RibbonSurface base(2);
  const auto ch = prym::cover_homology(prym::build_cover(base, kBetaB1));

  IVec target(4);
  target << 0, 1, 0, 0;  // class of b1
  const auto words = prym::realizable_words(ch, target, 4, 4);
  REQUIRE(!words.empty());
  CHECK(words[0].str(base) == "b1");
  for (const auto& w : words) {
    CHECK((prym::homology_class(base, w) - target).isZero(0));
    const auto lift = prym::lift_loop(ch.cover, w);
    REQUIRE(lift.chains.size() == 2);
    const IVec c0 = ch.cycle_class(lift.chains[0]);
    const IVec c1 = ch.cycle_class(lift.chains[1]);
    CHECK(ch.h.pair(c0, c1) == 0);
    CHECK((ch.sigma * c0 - c1).isZero(0));
  }

  IVec unreachable(4);
  unreachable << 2, 0, 0, 0;  // needs length at least two
  CHECK_THROWS_AS((void)prym::realizable_word(ch, unreachable, 1),
                  prym::ConfigurationError);
}
