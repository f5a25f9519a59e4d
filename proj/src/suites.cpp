#include "prym/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "prym/chains.hpp"
#include "prym/cover.hpp"
#include "prym/errors.hpp"
#include "prym/snf.hpp"
#include "prym/surface.hpp"
#include "prym/symplectic.hpp"

namespace prym {

namespace {

constexpr int kWordLength = 12;  // sampled-word length bound

std::string fnum(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fint(Int v) { return std::to_string(v); }

// Shared parameter block so identical options hash identically across suites.
void record_params(SuiteReport& r, const SuiteOptions& o, F2Vec beta) {
  r.parameters["genus"] = o.genus;
  r.parameters["beta"] = f2_bits(beta, 2 * o.genus);
  r.parameters["seed"] = o.seed;
  if (o.p) r.parameters["p"] = *o.p;
  if (o.ell) r.parameters["ell"] = *o.ell;
  if (o.trials) r.parameters["trials"] = *o.trials;
  r.parameters["tolerances"] = {{"membership", o.tols.membership},
                                {"equivariance", o.tols.equivariance},
                                {"fixed_point", o.tols.fixed_point}};
  r.timings = o.timings;
}

int require_genus(const SuiteOptions& o, int least) {
  if (o.genus < least)
    throw UsageError("genus must be at least " + std::to_string(least));
  if (o.genus > 15) throw UsageError("genus exceeds the packed mod-2 limit");
  return o.genus;
}

std::vector<F2Vec> cover_betas(const SuiteOptions& o) {
  if (!o.beta_bits.empty()) return {resolve_beta(o)};
  // three defaults in distinct positions: [b1], [a1], [a1 + b1]
  return {2u, 1u, 3u};
}

std::string matrix_verdict(const RelationReport& r) {
  if (r.pass) {
    std::ostringstream os;
    os << "exact equality of " << r.left.rows() << "x" << r.left.cols()
       << " matrices under " << r.rep;
    return os.str();
  }
  return "max |left - right| = " +
         fint(r.discrepancy.cwiseAbs().maxCoeff()) + " under " + r.rep;
}

Int max_abs(const IMat& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<int> component_sizes(int n,
                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> sizes;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    sizes.push_back(size);
  }
  return sizes;
}

// First one-letter loop whose monodromy matches `want`; every nonzero beta
// admits a monodromy-1 edge, and all three default betas admit a
// monodromy-0 edge for genus at least 2.
Loop edge_loop_with_monodromy(const DoubleCover& cover, int want) {
  for (std::size_t e = 0; e < cover.monodromy.size(); ++e)
    if (cover.monodromy[e] == want) return Loop{{static_cast<int>(e) + 1}};
  throw ConfigurationError("no edge loop with the requested monodromy");
}

// Deterministic sampled words in the lifted twist generators; one row per
// trial for the CSV sweep.
struct SiegelSweep {
  struct Row {
    std::uint64_t seed = 0;
    int word_length = 0;
    double residual = 0;  // variant-convention equivariance residual
  };
  std::vector<Row> rows;
  double max_variant = 0, max_standard = 0, max_mixed = 0;
  double max_composition = 0, max_antiholo = 0, max_deck = 0;
  double max_fixed_residual = 0;
  int trials = 0;
  bool extraction_ok = true;
};

SiegelSweep sweep_siegel(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  const F2Vec beta = resolve_beta(o);
  RibbonSurface base(g);
  DoubleCover cover = build_cover(base, beta);
  CoverHomology ch = cover_homology(cover);
  SymmetricFrame sf = symmetric_frame(ch);
  PrymFrame pf = prym_frame(ch, sf);
  const int h = sf.handles();

  std::vector<IMat> gens, gens_inv;
  for (int e = 0; e < 2 * g; ++e) {
    IMat t = lifted_twist(ch, Loop{{e + 1}});
    gens.push_back(t);
    gens_inv.push_back(unimodular_inverse(t));
  }
  IMat canonical = lifted_twist(ch, edge_loop_with_monodromy(cover, 0));

  SiegelSweep s;
  s.trials = o.trials.value_or(100);
  std::mt19937_64 rng(o.seed);
  // Entry growth is capped so the fractional linear action stays well
  // conditioned; words that blow past the cap fall back to their first letter.
  auto sample_word = [&](std::mt19937_64& r, int& length) {
    length = 1 + static_cast<int>(r() % kWordLength);
    IMat m = IMat::Identity(2 * h, 2 * h);
    IMat first;
    for (int k = 0; k < length; ++k) {
      std::size_t pick = r() % gens.size();
      m = IMat(m * ((r() % 2) ? gens[pick] : gens_inv[pick]));
      if (k == 0) first = m;
    }
    if (max_abs(m) > 500) {
      length = 1;
      return first;
    }
    return m;
  };

  for (int trial = 0; trial < s.trials; ++trial) {
    std::uint64_t trial_seed = rng();
    std::mt19937_64 trng(trial_seed);
    PeriodMatrix pm = random_symmetric_period(sf.sigma_sym, g, trng(), o.tols);
    s.max_fixed_residual = std::max(
        s.max_fixed_residual,
        (pm.pi - act(ModularElement::from(sf.sigma_sym), pm.pi)).norm());
    if (!is_siegel_point(prym_extract(pm, o.tols), o.tols.membership))
      s.extraction_ok = false;

    int len1 = 0, len2 = 0;
    IMat w1 = sample_word(trng, len1);
    IMat w2 = sample_word(trng, len2);
    IMat word = (trial == 0) ? canonical : w1;  // pin one genuine multitwist
    if (trial == 0) len1 = 1;

    EquivarianceResiduals r = equivariance_residuals(
        sf.to_frame(word), pf.restrict(word), pm, o.tols);
    s.max_variant = std::max(s.max_variant, r.variant_both);
    s.max_standard = std::max(s.max_standard, r.standard_both);
    s.max_mixed = std::max(s.max_mixed, r.mixed);
    s.rows.push_back({trial_seed, len1, r.variant_both});

    ModularElement m1 = ModularElement::from(sf.to_frame(word));
    ModularElement m2 = ModularElement::from(sf.to_frame(w2));
    ModularElement m12 = ModularElement::from(IMat(m1.m * m2.m));
    double comp =
        (act(m12, pm.pi, o.tols.membership) -
         act(m1, act(m2, pm.pi, o.tols.membership), o.tols.membership))
            .norm();
    s.max_composition = std::max(s.max_composition, comp);

    CMat tau = random_siegel_point(h, trng());
    s.max_antiholo = std::max(s.max_antiholo,
                              antiholomorphic_residual(m1, tau, o.tols.membership));

    EquivarianceResiduals deck = equivariance_residuals(
        sf.sigma_sym, pf.restrict(ch.sigma), pm, o.tols);
    s.max_deck = std::max(s.max_deck, deck.variant_both);
  }
  return s;
}

} // namespace

F2Vec default_beta(int genus) {
  (void)genus;
  return 2u;  // interleaved bit of b1
}

F2Vec resolve_beta(const SuiteOptions& o) {
  if (o.beta_bits.empty()) return default_beta(o.genus);
  F2Vec beta = f2_parse_bits(o.beta_bits);
  if (o.beta_bits.size() != static_cast<std::size_t>(2 * o.genus))
    throw UsageError("beta bitstring must have length 2*genus");
  if (beta == 0) throw UsageError("beta must be a nonzero mod-2 class");
  return beta;
}

SuiteReport run_orbits(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  const F2Vec beta = resolve_beta(o);
  SuiteReport rep;
  rep.suite = "orbits";
  record_params(rep, o, beta);

  Stopwatch all;
  auto orbits = orbit_classify(g, beta);
  double ms = all.ms();

  rep.add("orbit_count", orbits.size() == 3,
          std::to_string(orbits.size()) + " orbits", ms);

  const F2Vec top = 1u << (2 * g);
  std::set<F2Vec> odd, even;
  for (F2Vec v = 1; v < top; ++v) {
    if (v == beta) continue;
    (f2_pair(v, beta) ? odd : even).insert(v);
  }
  bool partition_ok = orbits.size() == 3;
  if (partition_ok) {
    std::set<F2Vec> o0(orbits[0].begin(), orbits[0].end());
    std::set<F2Vec> o1(orbits[1].begin(), orbits[1].end());
    std::set<F2Vec> o2(orbits[2].begin(), orbits[2].end());
    partition_ok = o0 == odd && o1 == even && o2 == std::set<F2Vec>{beta};
  }
  rep.add("orbit_partition_matches_predicate", partition_ok,
          "orbits computed by BFS equal the pairing/equality predicate classes");

  std::ostringstream sz;
  bool size_ok = orbits.size() == 3;
  if (size_ok) {
    sz << "sizes (" << orbits[0].size() << ", " << orbits[1].size() << ", "
       << orbits[2].size() << ")";
    size_ok = orbits[0].size() == (1u << (2 * g - 1)) &&
              orbits[1].size() == (1u << (2 * g - 1)) - 2 &&
              orbits[2].size() == 1;
  }
  rep.add("orbit_sizes", size_ok, sz.str());
  rep.add("stabilized_class_is_singleton",
          orbits.size() == 3 && orbits[2] == std::vector<F2Vec>{beta},
          "the covered class forms its own orbit");
  return rep;
}

SuiteReport run_generation(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  const F2Vec beta = resolve_beta(o);
  SuiteReport rep;
  rep.suite = "generation";
  record_params(rep, o, beta);

  Stopwatch sw;
  GroupClosure closure = stabilizer_closure(g, beta);  // CapabilityError g > 3
  double ms = sw.ms();

  Int expected = sp_group_order(g, 2) / ((Int(1) << (2 * g)) - 1);
  rep.add("closure_order",
          static_cast<Int>(closure.order()) == expected,
          "BFS order " + std::to_string(closure.order()) + ", index formula " +
              fint(expected) + " = |Sp(" + std::to_string(2 * g) + ",2)| / (2^" +
              std::to_string(2 * g) + " - 1)",
          ms);

  Stopwatch sw2;
  bool fixes = true;
  for (const IMat& m : closure.elements)
    if (f2_apply(m, beta) != beta) {
      fixes = false;
      break;
    }
  rep.add("closure_stabilizes_class", fixes,
          "every enumerated element fixes the covered class", sw2.ms());
  return rep;
}

SuiteReport run_shadow_complex(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  const F2Vec beta = resolve_beta(o);
  SuiteReport rep;
  rep.suite = "shadow-complex";
  record_params(rep, o, beta);

  Stopwatch sw;
  ShadowGraph graph = shadow_n1(g, beta);
  double ms = sw.ms();

  rep.add("vertex_count",
          graph.vertices.size() == (1u << (2 * g - 1)),
          std::to_string(graph.vertices.size()) +
              " classes pairing oddly with beta (necessary-condition shadow)",
          ms);

  bool filter_ok = true;
  for (auto [i, j] : graph.edges) {
    F2Vec u = graph.vertices[i], v = graph.vertices[j];
    if (f2_pair(u, v) != 1 || (u ^ v) == beta) {
      filter_ok = false;
      break;
    }
  }
  rep.add("edge_filter", filter_ok,
          "every edge pairs oddly and avoids the excluded sum");

  Stopwatch swc;
  std::vector<int> comps =
      component_sizes(static_cast<int>(graph.vertices.size()), graph.edges);
  if (g >= 3) {
    rep.add("connected", comps.size() == 1 && graph_connected(graph),
            std::to_string(graph.edges.size()) + " edges, " +
                std::to_string(comps.size()) + " component(s)",
            swc.ms());
  } else {
    // Connectivity genuinely starts at genus 3: with the excluded-sum rule
    // the genus-2 graph splits into two equal halves, computed exactly.
    bool split_ok = comps.size() == 2 && comps[0] == comps[1] &&
                    comps[0] == (1 << (2 * g - 2)) && !graph_connected(graph);
    rep.add("two_components_below_genus_3", split_ok,
            std::to_string(graph.edges.size()) + " edges, components of sizes " +
                std::to_string(comps.empty() ? 0 : comps[0]) + "/" +
                std::to_string(comps.size() == 2 ? comps[1] : 0),
            swc.ms());
  }

  // Dropping the excluded-sum condition must restore connectivity at every
  // genus from 2 up.
  Stopwatch swr;
  std::vector<std::pair<int, int>> relaxed;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    for (std::size_t k = i + 1; k < graph.vertices.size(); ++k)
      if (f2_pair(graph.vertices[i], graph.vertices[k]) == 1)
        relaxed.push_back({static_cast<int>(i), static_cast<int>(k)});
  std::vector<int> relaxed_comps =
      component_sizes(static_cast<int>(graph.vertices.size()), relaxed);
  rep.add("relaxed_edges_connected", relaxed_comps.size() == 1,
          "without the excluded-sum rule: " + std::to_string(relaxed.size()) +
              " edges, " + std::to_string(relaxed_comps.size()) +
              " component(s)",
          swr.ms());

  if (g <= 3) {
    Stopwatch swt;
    TransitivityReport tr =
        transitivity_report(graph, stabilizer_generators(g, beta));
    rep.add("vertex_transitivity", tr.vertex_orbits == 1,
            std::to_string(tr.vertex_orbits) + " vertex orbit(s)", swt.ms());
    rep.add("ordered_edge_transitivity", tr.ordered_edge_orbits == 1,
            std::to_string(tr.ordered_edge_orbits) + " ordered edge orbit(s)");
  }
  return rep;
}

SuiteReport run_chain_relations(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  SuiteReport rep;
  rep.suite = "chain-relations";
  record_params(rep, o, resolve_beta(o));

  RibbonSurface s(g);
  ChainRep base = ChainRep::base(g);

  Stopwatch sw2;
  ChainConfig two = two_chain_config(s);
  validate_chain_config(two);
  RelationReport r2 = verify_two_chain(two, base);
  rep.add("two_chain_boundary_twist", r2.pass, matrix_verdict(r2), sw2.ms());

  Stopwatch swm;
  RelationReport rm = verify_minus_id_span(two.cls(Loop::parse(s, "a1")),
                                           two.cls(Loop::parse(s, "b1")), base);
  rep.add("minus_id_on_span", rm.pass, matrix_verdict(rm), swm.ms());

  if (g >= 4) {
    Stopwatch swc;
    ChainConfig comp = complementary_chain_config(s);
    validate_chain_config(comp);
    RelationReport rc = verify_complementary_chains(comp, base);
    rep.add("complementary_chain_identity", rc.pass, matrix_verdict(rc),
            swc.ms());

    IMat boundary = base.reduce(base.twist(comp.d1) * base.twist(comp.d2));
    rep.add("complementary_boundary_twists", rc.left == boundary,
            "both words equal the product of the boundary transvections");

    Stopwatch swo;
    F2Vec cover_class = f2_from_vec(comp.beta_class());
    CoverHomology ch = cover_homology(build_cover(s, cover_class));
    ObstructionReport ob = verify_lifted_obstruction(ch, comp);
    double obms = swo.ms();
    rep.add("obstruction_corrected_identity", ob.corrected.pass,
            matrix_verdict(ob.corrected), obms);
    rep.add("obstruction_uncorrected_fails", ob.uncorrected_fails,
            "the lifted words differ before the deck correction");
    rep.add("obstruction_prym_negated", ob.prym_negated,
            "induced maps on the anti-invariant lattice are negatives, max entry " +
                fint(max_abs(ob.prym_left)));
    rep.add("obstruction_plus_restriction_agrees", ob.plus_agrees,
            "induced maps on the invariant lattice coincide");
  }
  return rep;
}

SuiteReport run_cover(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  SuiteReport rep;
  rep.suite = "cover";
  record_params(rep, o, resolve_beta(o));

  RibbonSurface base(g);
  SymplecticSpace space(g);
  IMat base_form = space.form();

  for (F2Vec beta : cover_betas(o)) {
    const std::string tag = "_" + f2_bits(beta, 2 * g);

    Stopwatch swb;
    DoubleCover cover = build_cover(base, beta);
    cover.total.validate_closed_oriented();
    const int chi = cover.total.euler_characteristic();
    bool complex_ok = cover.total.num_vertices == 2 &&
                      static_cast<int>(cover.total.edges.size()) == 4 * g &&
                      cover.total.faces.size() == 2 &&
                      cover.total.connected() && chi == 4 - 4 * g &&
                      (2 - chi) / 2 == 2 * g - 1;
    rep.add("cover_complex" + tag, complex_ok,
            "chi = " + std::to_string(chi) + ", genus " +
                std::to_string((2 - chi) / 2) + ", 2 vertices, " +
                std::to_string(cover.total.edges.size()) + " edges, 2 faces",
            swb.ms());

    bool mono_ok = true;
    for (int e = 0; e < 2 * g; ++e) {
      IVec cls = IVec::Zero(2 * g);
      cls(e) = 1;
      if (cover.monodromy[e] != (f2_pair(f2_from_vec(cls), beta) % 2))
        mono_ok = false;
    }
    rep.add("monodromy_matches_pairing" + tag, mono_ok,
            "edge monodromy equals the mod-2 pairing with beta");

    Stopwatch swh;
    CoverHomology ch = cover_homology(cover);
    double hms = swh.ms();
    rep.add("homology_rank" + tag, ch.h.rank == 4 * g - 2,
            "rank " + std::to_string(ch.h.rank), hms);

    bool deck_ok = (ch.sigma * ch.sigma).isIdentity() &&
                   ch.sigma.transpose() * ch.h.gram * ch.sigma == ch.h.gram;
    rep.add("deck_involution" + tag, deck_ok,
            "deck action squares to the identity and preserves the pairing");

    IMat restricted =
        ch.minus_basis.transpose() * ch.h.gram * ch.minus_basis;
    bool even_ok = true;
    for (int i = 0; i < restricted.rows(); ++i)
      for (int j = 0; j < restricted.cols(); ++j)
        if (restricted(i, j) % 2 != 0) even_ok = false;
    bool minus_ok = ch.minus_basis.cols() == 2 * g - 2 && even_ok &&
                    restricted == IMat(2 * ch.minus_gram) &&
                    is_unimodular(ch.minus_gram);
    rep.add("minus_lattice" + tag, minus_ok,
            "rank " + std::to_string(ch.minus_basis.cols()) +
                ", even restriction, halved form unimodular");

    bool transfer_ok = true;
    for (int i = 0; i < 2 * g && transfer_ok; ++i)
      for (int j = 0; j < 2 * g && transfer_ok; ++j) {
        IVec ei = IVec::Zero(2 * g), ej = IVec::Zero(2 * g);
        ei(i) = 1;
        ej(j) = 1;
        Int up = ch.h.pair(ch.cycle_class(cover.transfer(ei)),
                           ch.cycle_class(cover.transfer(ej)));
        if (up != 2 * base_form(i, j)) transfer_ok = false;
      }
    rep.add("transfer_doubles_pairing" + tag, transfer_ok,
            "pairing of transferred cycles is twice the base pairing");
  }
  return rep;
}

SuiteReport run_prym(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  SuiteReport rep;
  rep.suite = "prym";
  record_params(rep, o, resolve_beta(o));

  if (o.ell && (*o.ell != 2 && *o.ell != 3))
    throw CapabilityError("order certificates cover moduli 2 and 3 only");
  if (o.ell && g != 3)
    throw CapabilityError("order certificates are sized for genus 3");

  RibbonSurface base(g);
  for (F2Vec beta : cover_betas(o)) {
    const std::string tag = "_" + f2_bits(beta, 2 * g);
    DoubleCover cover = build_cover(base, beta);
    CoverHomology ch = cover_homology(cover);

    Stopwatch swf;
    SymmetricFrame sf = symmetric_frame(ch);
    double fms = swf.ms();
    const int h = sf.handles();
    bool frame_ok =
        is_unimodular(sf.frame) &&
        IMat(sf.frame.transpose() * ch.h.gram * sf.frame) ==
            standard_skew_gram(h, PairLayout::Blocks);
    IMat expected_perm = IMat::Zero(2 * h, 2 * h);
    for (int i = 0; i < h; ++i) {
      expected_perm(sf.handle_permutation[i], i) = 1;
      expected_perm(h + sf.handle_permutation[i], h + i) = 1;
    }
    bool perm_ok = sf.sigma_sym == expected_perm &&
                   sf.handle_permutation[0] == 0;
    for (int i = 1; i < g; ++i)
      if (sf.handle_permutation[i] != i + g - 1 ||
          sf.handle_permutation[i + g - 1] != i)
        perm_ok = false;
    rep.add("symmetric_frame" + tag, frame_ok && perm_ok,
            "unimodular frame with standard pairing; deck action swaps "
            "handles i and i+g-1 and fixes handle 0",
            fms);

    PrymFrame pf = prym_frame(ch, sf);
    bool prym_coords_ok =
        pf.gram == standard_skew_gram(g - 1, PairLayout::Blocks) &&
        (ch.sigma * pf.basis) == IMat(-pf.basis);
    rep.add("prym_coordinates" + tag, prym_coords_ok,
            "anti-invariant frame with standard halved pairing");

    rep.add("prym_deck_minus_id" + tag,
            pf.restrict(ch.sigma) == IMat(-IMat::Identity(2 * g - 2, 2 * g - 2)),
            "deck action restricts to minus the identity");

    Loop connected = edge_loop_with_monodromy(cover, 1);
    IMat lift1 = lifted_twist(ch, connected);
    rep.add("prym_connected_lift_trivial" + tag,
            pf.restrict(lift1).isIdentity(),
            "twist with connected lift acts trivially on the anti-invariant "
            "lattice (curve " +
                connected.str(base) + ")");

    Loop split = edge_loop_with_monodromy(cover, 0);
    LoopLift lifts = lift_loop(cover, split);
    IMat lift0 = lifted_twist(ch, split);
    IVec u = pf.left * (ch.cycle_class(lifts.chains[0]) -
                        ch.cycle_class(lifts.chains[1]));
    rep.add("prym_multitwist_transvection" + tag,
            pf.restrict(lift0) == transvection(u, pf.gram),
            "multitwist acts as the transvection by the lift difference "
            "(curve " +
                split.str(base) + ")");

    if (g == 3 && beta == default_beta(g)) {
      std::vector<IMat> gens;
      for (const char* w : {"b1", "a2", "b2", "a3", "b3", "a2 a3"})
        gens.push_back(pf.restrict(lifted_twist(ch, Loop::parse(base, w))));
      for (Int ell : std::vector<Int>{2, 3}) {
        if (o.ell && *o.ell != ell) continue;
        Stopwatch swc;
        GroupClosure closure = closure_mod_p(gens, ell);
        Int expected = sp_group_order(g - 1, ell);
        rep.add("prym_generation_mod" + fint(ell),
                static_cast<Int>(closure.order()) == expected,
                "closure order " + std::to_string(closure.order()) +
                    ", full symplectic order " + fint(expected),
                swc.ms());
      }
    }
  }
  return rep;
}

SuiteReport run_abelianization(const SuiteOptions& o) {
  const int g = require_genus(o, 1);
  SuiteReport rep;
  rep.suite = "abelianization";
  record_params(rep, o, resolve_beta(o));
  rep.parameters["word_length"] = kWordLength;

  if (o.p && *o.p < 2) throw UsageError("modulus must be at least 2");
  std::vector<Int> moduli = o.p ? std::vector<Int>{*o.p}
                                : std::vector<Int>{2, 3, 5, 7};
  const int trials = o.trials.value_or(1000);
  rep.parameters["trials"] = trials;

  SymplecticSpace space(g);
  IMat j = space.form();
  std::vector<IVec> curves;
  for (int i = 0; i < 2 * g; ++i) curves.push_back(space.basis_vector(i));

  for (Int p : moduli) {
    const std::string tag = "_p" + fint(p);
    // p-th powers of the basis transvections generate inside the level group
    std::vector<IMat> gens, gens_inv;
    for (const IVec& c : curves) {
      IMat n = c * (c.transpose() * j);
      gens.push_back(IMat(IMat::Identity(2 * g, 2 * g) - p * n));
      gens_inv.push_back(IMat(IMat::Identity(2 * g, 2 * g) + p * n));
    }
    std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(p));
    auto sample = [&]() {
      IMat m = IMat::Identity(2 * g, 2 * g);
      int len = 1 + static_cast<int>(rng() % kWordLength);
      for (int k = 0; k < len; ++k) {
        std::size_t pick = rng() % gens.size();
        m = IMat(m * ((rng() % 2) ? gens[pick] : gens_inv[pick]));
      }
      return m;
    };

    Stopwatch sw;
    bool member_ok = true, additive_ok = true;
    std::set<Int> image;
    for (int t = 0; t < trials; ++t) {
      IMat a = sample(), b = sample();
      if (!in_lambda_p(a, p, space) || !in_lambda_p(b, p, space))
        member_ok = false;
      Int pa = phi_p(a, p, space), pb = phi_p(b, p, space);
      Int pab = phi_p(IMat(a * b), p, space);
      if (pab != (pa + pb) % p) additive_ok = false;
      image.insert(pa);
      image.insert(pb);
      image.insert(pab);
    }
    double ms = sw.ms();
    rep.add("level_membership" + tag, member_ok,
            std::to_string(2 * trials) + " sampled words lie in the level subgroup",
            ms);
    rep.add("homomorphism_additivity" + tag, additive_ok,
            "phi(ab) = phi(a) + phi(b) on " + std::to_string(trials) +
                " sampled pairs");
    rep.add("surjectivity" + tag,
            image.size() == static_cast<std::size_t>(p),
            "image covers all " + fint(p) + " residues");

    IMat tb1 = gens[1];  // transvection by b1, already to the p-th power
    rep.add("generator_power_value" + tag,
            phi_p(tb1, p, space) == p - 1,
            "p-th twist power along b1 maps to -1");
    rep.add("strict_reading_narrower" + tag,
            in_lambda_p(tb1, p, space) && !in_lambda_p(tb1, p, space, true) &&
                in_lambda_p(IMat(IMat::Identity(2 * g, 2 * g)), p, space, true),
            "congruence reading admits the twist power, the line reading "
            "does not");
  }
  return rep;
}

SuiteReport run_siegel(const SuiteOptions& o) {
  require_genus(o, 2);
  SuiteReport rep;
  rep.suite = "siegel";
  record_params(rep, o, resolve_beta(o));
  rep.parameters["word_length"] = kWordLength;
  rep.parameters["trials"] = o.trials.value_or(100);

  Stopwatch sw;
  SiegelSweep s = sweep_siegel(o);
  double ms = sw.ms();

  rep.add("fixed_point_generation",
          s.max_fixed_residual <= o.tols.fixed_point && s.extraction_ok,
          "max deck residual " + fnum(s.max_fixed_residual) + " over " +
              std::to_string(s.trials) + " seeded points",
          ms);
  rep.add("extraction_in_siegel_space", s.extraction_ok,
          "every extracted matrix is symmetric with positive definite "
          "imaginary part");
  rep.add("action_composition", s.max_composition <= 1e-10,
          "max composition residual " + fnum(s.max_composition));
  rep.add("extraction_equivariance_variant",
          s.max_variant <= o.tols.equivariance,
          "max residual " + fnum(s.max_variant) + " (footnote convention both "
          "upstairs and downstairs)");
  rep.add("extraction_equivariance_standard",
          s.max_standard <= o.tols.equivariance,
          "max residual " + fnum(s.max_standard) + " (classical convention "
          "both upstairs and downstairs)");
  rep.add("mixed_convention_nonvanishing", s.max_mixed > 1e-3,
          "max residual " + fnum(s.max_mixed) + " when the conventions are "
          "mixed across the two sides");
  rep.add("antiholomorphic_conjugation", s.max_antiholo <= 1e-10,
          "max residual " + fnum(s.max_antiholo) +
              " for the conjugation intertwiner");
  rep.add("deck_equivariance", s.max_deck <= o.tols.fixed_point,
          "deck word residual " + fnum(s.max_deck));
  return rep;
}

SuiteReport run_all(const SuiteOptions& o) {
  SuiteReport rep;
  rep.suite = "all";
  record_params(rep, o, resolve_beta(o));

  rep.absorb(run_orbits(o));
  SuiteOptions capped = o;
  capped.genus = std::min(o.genus, 3);
  rep.absorb(run_generation(capped));
  rep.absorb(run_shadow_complex(o));
  rep.absorb(run_chain_relations(o));
  rep.absorb(run_cover(o));
  rep.absorb(run_prym(o));
  rep.absorb(run_abelianization(o));
  rep.absorb(run_siegel(o));
  return rep;
}

nlohmann::json shadow_graph_json(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  ShadowGraph graph = shadow_n1(g, resolve_beta(o));
  nlohmann::json j;
  j["genus"] = g;
  j["beta"] = f2_bits(graph.beta, 2 * g);
  nlohmann::json verts = nlohmann::json::array();
  for (F2Vec v : graph.vertices) verts.push_back(f2_bits(v, 2 * g));
  j["vertices"] = verts;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : graph.edges) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

nlohmann::json cover_description_json(const SuiteOptions& o) {
  const int g = require_genus(o, 2);
  const F2Vec beta = resolve_beta(o);
  RibbonSurface base(g);
  DoubleCover cover = build_cover(base, beta);
  CoverHomology ch = cover_homology(cover);

  auto matrix_json = [](const IMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    return rows;
  };

  nlohmann::json j;
  j["genus"] = g;
  j["beta"] = f2_bits(beta, 2 * g);
  j["euler_characteristic"] = cover.total.euler_characteristic();
  j["vertices"] = cover.total.num_vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < cover.total.edges.size(); ++e) {
    int base_edge = static_cast<int>(e) / 2;
    nlohmann::json entry;
    entry["index"] = e;
    entry["base"] = base.edge_name(base_edge);
    entry["sheet"] = static_cast<int>(e) % 2;
    entry["tail"] = cover.total.edges[e].tail;
    entry["head"] = cover.total.edges[e].head;
    entry["monodromy"] = cover.monodromy[base_edge];
    edges.push_back(entry);
  }
  j["edges"] = edges;
  j["faces"] = cover.total.faces;
  j["gram"] = matrix_json(ch.h.gram);
  j["sigma"] = matrix_json(ch.sigma);
  j["minus_basis"] = matrix_json(ch.minus_basis);
  return j;
}

std::string siegel_sweep_csv(const SuiteOptions& o) {
  SiegelSweep s = sweep_siegel(o);
  std::ostringstream os;
  os.precision(17);
  os << "seed,genus,word_length,residual\n";
  for (const auto& row : s.rows)
    os << row.seed << "," << o.genus << "," << row.word_length << ","
       << row.residual << "\n";
  return os.str();
}

} // namespace prym
