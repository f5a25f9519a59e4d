#include "prym/cover.hpp"

#include <array>
#include <cstdlib>
#include <utility>

#include "prym/errors.hpp"
#include "prym/snf.hpp"
#include "prym/symplectic.hpp"

namespace prym {

IMat DoubleCover::deck_edge_matrix() const {
  const int n = static_cast<int>(total.edges.size());
  IMat d = IMat::Zero(n, n);
  for (int e = 0; e < n; ++e) d(e ^ 1, e) = 1;
  return d;
}

IVec DoubleCover::transfer(const IVec& base_chain) const {
  IVec out = IVec::Zero(2 * base_chain.size());
  for (int e = 0; e < base_chain.size(); ++e) {
    out(2 * e) = base_chain(e);
    out(2 * e + 1) = base_chain(e);
  }
  return out;
}

DoubleCover build_cover(const RibbonSurface& base, F2Vec beta) {
  if (beta == 0) throw UsageError("zero class gives a disconnected cover");
  const int E = 2 * base.genus();
  if (beta >> E) throw UsageError("class has bits beyond the surface rank");

  DoubleCover c;
  c.base = base;
  c.beta = beta;
  c.monodromy.resize(E);
  for (int e = 0; e < E; ++e)
    c.monodromy[e] = static_cast<int>(f2_pair(static_cast<F2Vec>(1) << e, beta));

  c.total.num_vertices = 2;
  c.total.edges.resize(2 * E);
  for (int e = 0; e < E; ++e)
    for (int s = 0; s < 2; ++s)
      c.total.edges[c.lift_edge(e, s)] = {s, s ^ c.monodromy[e]};

  // one lifted face per starting sheet; the base face word has class 0, so
  // its total monodromy vanishes and both lifts close up
  for (int s0 = 0; s0 < 2; ++s0) {
    std::vector<int> word;
    int s = s0;
    for (int d : base.cw().faces[0]) {
      const int e = std::abs(d) - 1;
      if (d > 0)
        word.push_back(c.lift_edge(e, s) + 1);
      else
        word.push_back(-(c.lift_edge(e, s ^ c.monodromy[e]) + 1));
      s ^= c.monodromy[e];
    }
    if (s != s0) throw InternalError("lifted face failed to close up");
    c.total.faces.push_back(std::move(word));
  }

  c.total.validate_closed_oriented();
  if (!c.total.connected())
    throw InternalError("cover of a nonzero class must be connected");
  if (c.total.euler_characteristic() != 2 * base.cw().euler_characteristic())
    throw InternalError("cover Euler characteristic is off");
  return c;
}

LoopLift lift_loop(const DoubleCover& cover, const Loop& c) {
  if (c.letters.empty()) throw UsageError("empty loop has no lift");
  const int n = static_cast<int>(cover.total.edges.size());
  LoopLift out;
  for (int l : c.letters) out.monodromy ^= cover.monodromy[std::abs(l) - 1];

  const int passes = out.monodromy == 0 ? 1 : 2;
  const int starts = out.monodromy == 0 ? 2 : 1;
  for (int s0 = 0; s0 < starts; ++s0) {
    IVec chain = IVec::Zero(n);
    int s = s0;
    for (int pass = 0; pass < passes; ++pass)
      for (int l : c.letters) {
        const int e = std::abs(l) - 1;
        if (l > 0)
          chain(cover.lift_edge(e, s)) += 1;
        else
          chain(cover.lift_edge(e, s ^ cover.monodromy[e])) -= 1;
        s ^= cover.monodromy[e];
      }
    if (s != s0) throw InternalError("lift bookkeeping lost the sheet");
    out.chains.push_back(std::move(chain));
  }
  return out;
}

CoverHomology cover_homology(const DoubleCover& cover) {
  const int g = cover.base.genus();
  CoverHomology ch;
  ch.cover = cover;

  IVec base_a1 = IVec::Zero(2 * g), base_b1 = IVec::Zero(2 * g);
  base_a1(cover.base.edge_a(1)) = 1;
  base_b1(cover.base.edge_b(1)) = 1;
  // transfers pair to twice the base pairing; that pins the orientation
  ch.h = surface_homology(cover.total, cover.transfer(base_a1),
                          cover.transfer(base_b1), 2);
  const int n = ch.h.rank;
  if (n != 4 * g - 2) throw InternalError("cover homology rank is off");

  ch.sigma = ch.h.h1_projection * cover.deck_edge_matrix() * ch.h.cycle_basis;
  const IMat id = IMat::Identity(n, n);
  if (!(ch.sigma * ch.sigma - id).isZero(0))
    throw InternalError("deck action must be an involution");
  if (classify_form_action(ch.sigma, ch.h.gram) != FormClass::Symplectic)
    throw InternalError("deck action must preserve the pairing");
  if ((ch.sigma - id).isZero(0) || (ch.sigma + id).isZero(0))
    throw InternalError("deck action must be nontrivial");

  ch.minus_basis = kernel_basis(ch.sigma + id);
  if (static_cast<int>(ch.minus_basis.cols()) != 2 * g - 2)
    throw InternalError("minus lattice rank is off");
  IMat doubled = ch.minus_basis.transpose() * ch.h.gram * ch.minus_basis;
  for (int r = 0; r < doubled.rows(); ++r)
    for (int c = 0; c < doubled.cols(); ++c)
      if (doubled(r, c) % 2 != 0)
        throw InternalError("pairing must be even on the minus lattice");
  ch.minus_gram = doubled / 2;
  if (!is_unimodular(ch.minus_gram))
    throw InternalError("halved pairing must be unimodular");
  return ch;
}

IMat lifted_twist(const CoverHomology& ch, const Loop& c) {
  LoopLift lift = lift_loop(ch.cover, c);
  IMat m;
  if (lift.monodromy == 0) {
    IVec u0 = ch.cycle_class(lift.chains[0]);
    IVec u1 = ch.cycle_class(lift.chains[1]);
    if (!(ch.sigma * u0 - u1).isZero(0))
      throw ConfigurationError("deck action does not swap the lift classes");
    if (ch.h.pair(u0, u1) != 0)
      throw ConfigurationError("lift classes pair nontrivially");
    m = transvection(u0, ch.h.gram) * transvection(u1, ch.h.gram);
  } else {
    IVec u = ch.cycle_class(lift.chains[0]);
    if (!(ch.sigma * u - u).isZero(0))
      throw ConfigurationError("connected lift class is not deck invariant");
    m = transvection(u, ch.h.gram);
  }
  if (!(m * ch.sigma - ch.sigma * m).isZero(0))
    throw InternalError("lifted twist must commute with the deck action");
  return m;
}

namespace {

// letters in edge order with exponents read off the class
Loop canonical_word(const IVec& cls) {
  Loop w;
  for (int e = 0; e < cls.size(); ++e)
    for (Int k = 0; k < std::abs(cls(e)); ++k)
      w.letters.push_back(cls(e) > 0 ? e + 1 : -(e + 1));
  if (w.letters.empty()) throw UsageError("zero class has no loop word");
  return w;
}

bool lifts_cleanly(const CoverHomology& ch, const Loop& w) {
  LoopLift lift = lift_loop(ch.cover, w);
  if (lift.monodromy == 1) {
    IVec u = ch.cycle_class(lift.chains[0]);
    return (ch.sigma * u - u).isZero(0);
  }
  IVec u0 = ch.cycle_class(lift.chains[0]);
  IVec u1 = ch.cycle_class(lift.chains[1]);
  return (ch.sigma * u0 - u1).isZero(0) && ch.h.pair(u0, u1) == 0;
}

struct WordSearch {
  const CoverHomology* ch = nullptr;
  IVec target;
  int max_length = 0;
  std::size_t max_count = 0;
  long budget = 2'000'000;  // DFS nodes
  std::vector<int> prefix;
  IVec partial;
  std::vector<Loop> found;

  bool full() const { return found.size() >= max_count; }

  void consider() {
    if (prefix.empty() || partial != target) return;
    if (prefix.size() > 1 && prefix.front() == -prefix.back()) return;
    Loop w{prefix};
    if (lifts_cleanly(*ch, w)) found.push_back(std::move(w));
  }

  void dfs() {
    if (full() || --budget < 0) return;
    consider();
    if (static_cast<int>(prefix.size()) == max_length) return;
    const int remaining = max_length - static_cast<int>(prefix.size());
    Int deficit = (target - partial).cwiseAbs().sum();
    if (deficit > remaining) return;
    for (int e = 0; e < target.size() && !full(); ++e)
      for (int sign = +1; sign >= -1 && !full(); sign -= 2) {
        const int letter = sign * (e + 1);
        if (!prefix.empty() && prefix.back() == -letter) continue;
        prefix.push_back(letter);
        partial(e) += sign;
        dfs();
        partial(e) -= sign;
        prefix.pop_back();
      }
  }
};

} // namespace

std::vector<Loop> realizable_words(const CoverHomology& ch, const IVec& target_class,
                                   int max_length, int max_count) {
  if (target_class.isZero(0)) throw UsageError("zero class has no loop word");
  std::vector<Loop> out;
  Loop canon = canonical_word(target_class);
  if (static_cast<int>(canon.letters.size()) <= max_length && lifts_cleanly(ch, canon))
    out.push_back(canon);
  if (static_cast<int>(out.size()) < max_count) {
    WordSearch search;
    search.ch = &ch;
    search.target = target_class;
    search.max_length = max_length;
    search.max_count = static_cast<std::size_t>(max_count - out.size()) +
                       (out.empty() ? 0 : 1);  // the canonical word reappears
    search.partial = IVec::Zero(target_class.size());
    search.dfs();
    for (Loop& w : search.found)
      if (out.empty() || w.letters != canon.letters) out.push_back(std::move(w));
    if (static_cast<int>(out.size()) > max_count) out.resize(max_count);
  }
  if (out.empty())
    throw ConfigurationError("no realizable word for the class within the budget");
  return out;
}

Loop realizable_word(const CoverHomology& ch, const IVec& target_class,
                     int max_length) {
  return realizable_words(ch, target_class, max_length, 1).front();
}

namespace {

// Seed vectors inside a rank-r sublattice, in a fixed deterministic order:
// basis vectors, then pairwise sums, then pairwise differences.
std::vector<IVec> handle_seeds(int r) {
  std::vector<IVec> seeds;
  for (int i = 0; i < r; ++i) {
    IVec c = IVec::Zero(r);
    c(i) = 1;
    seeds.push_back(c);
  }
  for (Int sign : {Int(1), Int(-1)})
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        IVec c = IVec::Zero(r);
        c(i) = 1;
        c(j) = sign;
        seeds.push_back(c);
      }
  return seeds;
}

} // namespace

SymmetricFrame symmetric_frame(const CoverHomology& ch) {
  const int g = ch.base_genus();
  const int n = ch.h.rank;
  const int handles = 2 * g - 1;
  const IMat& gram = ch.h.gram;

  // Split handle pairs are peeled off one at a time: x and y in the working
  // sublattice with p(x,y) = 1 and p(sx,y) = 0 span, together with (sx, sy),
  // two standard handles swapped by sigma. The remaining handle conditions
  // hold identically: p(z,sz) = 0 for every z because sigma preserves the
  // pairing and squares to the identity, and p(x,sy) = p(sx,y).
  const int pairs = g - 1;
  IMat handle_cols(n, 4 * g - 4);  // blocks (a_t | sa_t | b_t | sb_t)
  IMat sub = IMat::Identity(n, n);
  for (int t = 0; t < pairs; ++t) {
    const int r = static_cast<int>(sub.cols());
    bool found = false;
    for (const IVec& c : handle_seeds(r)) {
      IVec x = sub * c;
      IVec sx = ch.sigma * x;
      IMat sys(2, r);
      sys.row(0) = x.transpose() * gram * sub;
      sys.row(1) = sx.transpose() * gram * sub;
      IVec rhs(2);
      rhs << 1, 0;
      std::optional<IVec> z = solve_integer(sys, rhs);
      if (!z) continue;
      IVec y = sub * *z;
      handle_cols.col(t) = x;
      handle_cols.col(pairs + t) = sx;
      handle_cols.col(2 * pairs + t) = y;
      handle_cols.col(3 * pairs + t) = ch.sigma * y;
      IMat ortho(4, r);
      for (int k = 0; k < 4; ++k)
        ortho.row(k) = handle_cols.col(k * pairs + t).transpose() * gram * sub;
      sub = IMat(sub * kernel_basis(ortho));
      found = true;
      break;
    }
    if (!found)
      throw InternalError("every peeling stage admits a split handle pair");
  }
  if (sub.cols() != 2) throw InternalError("orthogonal complement rank is off");
  if (!(handle_cols.transpose() * ch.h.gram * handle_cols -
        standard_skew_gram(2 * g - 2, PairLayout::Blocks)).isZero(0))
    throw InternalError("assembled handles must pair standardly");

  // handle 0 is the pairing-orthogonal complement of the peeled handles
  SkewReduction red0 = skew_reduce(IMat(sub.transpose() * ch.h.gram * sub),
                                   PairLayout::Interleaved);
  if (red0.divisors != std::vector<Int>{1})
    throw InternalError("orthogonal complement must split unimodularly");
  IMat handle0 = sub * red0.w;
  if (!(ch.sigma * handle0 - handle0).isZero(0))
    throw InternalError("deck action must fix the complement handle pointwise");

  SymmetricFrame sf;
  sf.base_genus = g;
  sf.frame = IMat(n, n);
  sf.frame.col(0) = handle0.col(0);
  sf.frame.col(handles) = handle0.col(1);
  for (int i = 1; i <= 2 * g - 2; ++i) {
    sf.frame.col(i) = handle_cols.col(i - 1);
    sf.frame.col(handles + i) = handle_cols.col(2 * pairs + i - 1);
  }
  if (!(sf.frame.transpose() * ch.h.gram * sf.frame -
        standard_skew_gram(handles, PairLayout::Blocks)).isZero(0))
    throw InternalError("frame Gram must be standard");
  if (!is_unimodular(sf.frame)) throw InternalError("frame must be unimodular");
  sf.frame_inverse = unimodular_inverse(sf.frame);
  sf.sigma_sym = sf.to_frame(ch.sigma);

  sf.handle_permutation.resize(handles);
  sf.handle_permutation[0] = 0;
  for (int i = 1; i <= g - 1; ++i) {
    sf.handle_permutation[i] = i + g - 1;
    sf.handle_permutation[i + g - 1] = i;
  }
  IMat expected_sigma = IMat::Zero(n, n);
  for (int i = 0; i < handles; ++i) {
    expected_sigma(sf.handle_permutation[i], i) = 1;
    expected_sigma(handles + sf.handle_permutation[i], handles + i) = 1;
  }
  if (!(sf.sigma_sym - expected_sigma).isZero(0))
    throw InternalError("deck action must permute the handles");
  return sf;
}

IMat PrymFrame::restrict(const IMat& m) const {
  IMat r = left * m * basis;
  if (!(m * basis - basis * r).isZero(0))
    throw UsageError("matrix does not preserve the minus lattice");
  return r;
}

PrymFrame prym_frame(const CoverHomology& ch, const SymmetricFrame& sf) {
  const int g = sf.base_genus;
  const int handles = sf.handles();
  const int dim = 2 * (g - 1);
  PrymFrame pf;
  pf.basis = IMat(ch.h.rank, dim);
  for (int i = 1; i <= g - 1; ++i) {
    pf.basis.col(i - 1) = sf.frame.col(i) - sf.frame.col(i + g - 1);
    pf.basis.col(g - 1 + i - 1) =
        sf.frame.col(handles + i) - sf.frame.col(handles + i + g - 1);
  }

  if (!(ch.sigma * pf.basis + pf.basis).isZero(0))
    throw InternalError("difference classes must be deck anti-invariant");
  IMat coords(2 * g - 2, dim);
  for (int j = 0; j < dim; ++j) {
    auto x = solve_integer(ch.minus_basis, IVec(pf.basis.col(j)));
    if (!x) throw InternalError("difference classes must lie in the minus lattice");
    coords.col(j) = *x;
  }
  if (!is_unimodular(coords))
    throw InternalError("difference classes must span the full minus lattice");

  IMat doubled = pf.basis.transpose() * ch.h.gram * pf.basis;
  for (int r = 0; r < doubled.rows(); ++r)
    for (int c = 0; c < doubled.cols(); ++c)
      if (doubled(r, c) % 2 != 0)
        throw InternalError("pairing must be even on the minus lattice");
  pf.gram = doubled / 2;
  if (!(pf.gram - standard_skew_gram(g - 1, PairLayout::Blocks)).isZero(0))
    throw InternalError("halved pairing must be standard on difference classes");
  SkewReduction red = skew_reduce(pf.gram, PairLayout::Blocks);
  if (!(red.w - IMat::Identity(dim, dim)).isZero(0))
    throw InternalError("reduction of a standard form must be trivial");

  pf.left = integer_left_inverse(pf.basis);
  return pf;
}

} // namespace prym
