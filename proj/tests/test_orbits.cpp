#include "prym/orbits.hpp"

#include "prym/errors.hpp"
#include "prym/symplectic.hpp"
#include "prym/types.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace {

using prym::F2Vec;
using prym::IMat;
using prym::Int;

constexpr F2Vec kA1 = 1u;
constexpr F2Vec kB1 = 2u;

// partition of the nonzero classes by the pairing predicate against beta
struct PredicatePartition {
  std::set<F2Vec> odd, even, self;
};

PredicatePartition predicate_partition(int genus, F2Vec beta) {
  PredicatePartition p;
  const F2Vec n = 1u << (2 * genus);
  for (F2Vec v = 1; v < n; ++v) {
    if (v == beta)
      p.self.insert(v);
    else if (prym::f2_pair(v, beta) == 1)
      p.odd.insert(v);
    else
      p.even.insert(v);
  }
  return p;
}

std::vector<int> component_sizes(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> comp(n, -1), sizes;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(sizes.size()), count = 0;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("packed mod-2 classes round-trip through vectors and bitstrings") {
  CHECK(prym::f2_bits(kB1, 4) == "0100");
  CHECK(prym::f2_parse_bits("0100") == kB1);
  CHECK(prym::f2_parse_bits(prym::f2_bits(11u, 6)) == 11u);
  for (F2Vec v : {0u, 1u, 5u, 14u, 15u}) {
    CHECK(prym::f2_from_vec(prym::f2_to_vec(v, 4)) == v);
  }

  CHECK(prym::f2_pair(kA1, kB1) == 1);
  CHECK(prym::f2_pair(kA1, 4u) == 0);           // a1 against a2
  CHECK(prym::f2_pair(kA1 | kB1, kB1) == 1);
  CHECK(prym::f2_transvect(kB1, kA1) == (kA1 | kB1));
  CHECK(prym::f2_transvect(4u, kA1) == 4u);     // disjoint classes commute

  prym::SymplecticSpace s(2);
  const IMat t2 = prym::reduce_mod(prym::transvection(s.e1(), s.form()), 2);
  CHECK(prym::f2_apply(t2, kB1) == prym::f2_transvect(kB1, kA1));
}

TEST_CASE("stabilizer orbits equal the pairing-predicate partition") {
  for (int genus : {2, 3}) {
    const F2Vec beta = kB1;
    const auto orbits = prym::orbit_classify(genus, beta);
    REQUIRE(orbits.size() == 3);

    const std::size_t odd = std::size_t(1) << (2 * genus - 1);
    CHECK(orbits[0].size() == odd);
    CHECK(orbits[1].size() == odd - 2);
    CHECK(orbits[2].size() == 1);
    CHECK(orbits[2][0] == beta);

    const auto pred = predicate_partition(genus, beta);
    CHECK(std::set<F2Vec>(orbits[0].begin(), orbits[0].end()) == pred.odd);
    CHECK(std::set<F2Vec>(orbits[1].begin(), orbits[1].end()) == pred.even);
  }

  // the partition is basis-independent: an a-type class gives the same sizes
  const auto orbits_a = prym::orbit_classify(2, kA1);
  CHECK(orbits_a[0].size() == 8);
  CHECK(orbits_a[1].size() == 6);
  CHECK(orbits_a[2][0] == kA1);
}

TEST_CASE("stabilizer transvection classes are the beta-orthogonal ones") {
  for (int genus : {2, 3}) {
    const auto classes = prym::stabilizer_transvection_classes(genus, kB1);
    CHECK(classes.size() == (std::size_t(1) << (2 * genus - 1)) - 1);
    for (F2Vec c : classes) {
      CHECK(c != 0);
      CHECK(prym::f2_pair(c, kB1) == 0);
    }
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(prym::stabilizer_generators(genus, kB1).size() == classes.size());
  }
}

TEST_CASE("stabilizer closures hit the index formula and stay closed") {
  const Int sp4 = prym::sp_group_order(2, 2);
  const Int sp6 = prym::sp_group_order(3, 2);
  CHECK(sp4 == 720);
  CHECK(sp6 == 1451520);

  const auto c2 = prym::stabilizer_closure(2, kB1);
  CHECK(c2.order() == static_cast<std::size_t>(sp4 / ((1 << 4) - 1)));
  CHECK(c2.order() == 48);

  CHECK((c2.elements[0] - IMat::Identity(4, 4)).isZero(0));
  for (const IMat& m : c2.elements) {
    CHECK(prym::f2_apply(m, kB1) == kB1);
  }
  const IMat prod = prym::reduce_mod(IMat(c2.elements[5] * c2.elements[7]), 2);
  CHECK(c2.contains(prod));

  const auto c3 = prym::stabilizer_closure(3, kB1);
  CHECK(c3.order() == static_cast<std::size_t>(sp6 / ((1 << 6) - 1)));
  CHECK(c3.order() == 23040);

  CHECK_THROWS_AS((void)prym::stabilizer_closure(4, kB1), prym::CapabilityError);
  CHECK_THROWS_AS((void)prym::sp_group_order(8, 2), prym::CapabilityError);
}

TEST_CASE("group closure mod p reproduces the small linear groups") {
  IMat u(2, 2), l(2, 2);
  u << 1, 1, 0, 1;
  l << 1, 0, 1, 1;
  const auto sl22 = prym::closure_mod_p({u, l}, 2);
  CHECK(sl22.order() == 6);
  CHECK(sl22.contains(prym::reduce_mod(u, 2)));

  const auto sl23 = prym::closure_mod_p({u, l}, 3);
  CHECK(sl23.order() == 24);

  CHECK_THROWS_AS((void)prym::closure_mod_p({u, l}, 3, 5), prym::CapabilityError);
}

TEST_CASE("shadow graphs carry exactly the odd-pairing filtered edges") {
  for (int genus : {2, 3}) {
    const auto g = prym::shadow_n1(genus, kB1);
    CHECK(g.vertices.size() == std::size_t(1) << (2 * genus - 1));
    CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));

    // independent edge enumeration from the pairing
    std::set<std::pair<int, int>> expected;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(g.vertices.size()); ++j) {
        const F2Vec u_ = g.vertices[i], v_ = g.vertices[j];
        if (prym::f2_pair(u_, v_) == 1 && (u_ ^ v_) != kB1) expected.insert({i, j});
      }
    }
    CHECK(std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()) == expected);
  }
}

TEST_CASE("shadow connectivity starts at genus three") {
  const auto g2 = prym::shadow_n1(2, kB1);
  CHECK_FALSE(prym::graph_connected(g2));
  const auto sizes = component_sizes(static_cast<int>(g2.vertices.size()), g2.edges);
  CHECK(sizes == std::vector<int>{4, 4});

  const auto g3 = prym::shadow_n1(3, kB1);
  CHECK(prym::graph_connected(g3));
}

TEST_CASE("the stabilizer acts transitively on vertices and ordered edges") {
  for (int genus : {2, 3}) {
    const auto g = prym::shadow_n1(genus, kB1);
    const auto gens = prym::stabilizer_generators(genus, kB1);
    const auto t = prym::transitivity_report(g, gens);
    CHECK(t.vertex_orbits == 1);
    CHECK(t.ordered_edge_orbits == 1);

    // the trivial group sees only singletons
    const auto t0 = prym::transitivity_report(g, {});
    CHECK(t0.vertex_orbits == g.vertices.size());
    CHECK(t0.ordered_edge_orbits == 2 * g.edges.size());
  }
}
