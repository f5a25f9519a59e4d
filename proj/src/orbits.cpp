#include "prym/orbits.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "prym/errors.hpp"
#include "prym/symplectic.hpp"

namespace prym {

namespace {

// interleaved layout: swapping adjacent bits turns v into J v mod 2
F2Vec swap_pairs(F2Vec v) {
  return ((v & 0x55555555u) << 1) | ((v & 0xAAAAAAAAu) >> 1);
}

void check_genus(int genus) {
  if (genus < 1 || genus > 15) throw UsageError("genus out of packing range");
}

void check_beta(int genus, F2Vec beta) {
  check_genus(genus);
  if (beta == 0) throw UsageError("beta must be a nonzero mod-2 class");
  if (beta >> (2 * genus)) throw UsageError("beta has bits outside the genus");
}

std::string encode_mod_p(const IMat& m) {
  std::string key;
  key.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      key.push_back(static_cast<char>(m(i, j)));
  return key;
}

} // namespace

Int f2_pair(F2Vec u, F2Vec v) {
  return std::popcount(u & swap_pairs(v)) & 1;
}

F2Vec f2_transvect(F2Vec x, F2Vec c) {
  return f2_pair(x, c) ? (x ^ c) : x;
}

F2Vec f2_from_vec(const IVec& v) {
  if (v.size() > 30) throw UsageError("vector too long to pack");
  F2Vec out = 0;
  for (int i = 0; i < v.size(); ++i) {
    Int r = v(i) % 2;
    if (r < 0) r += 2;
    if (r) out |= (1u << i);
  }
  return out;
}

IVec f2_to_vec(F2Vec v, int dim) {
  IVec out = IVec::Zero(dim);
  for (int i = 0; i < dim; ++i) out(i) = (v >> i) & 1u;
  return out;
}

std::string f2_bits(F2Vec v, int dim) {
  std::string s(dim, '0');
  for (int i = 0; i < dim; ++i)
    if ((v >> i) & 1u) s[i] = '1';
  return s;
}

F2Vec f2_parse_bits(const std::string& bits) {
  if (bits.empty() || bits.size() > 30)
    throw UsageError("bitstring length out of range");
  F2Vec v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v |= (1u << i);
    else if (bits[i] != '0')
      throw UsageError("bitstring may contain only 0 and 1");
  }
  return v;
}

F2Vec f2_apply(const IMat& m, F2Vec v) {
  IVec x = f2_to_vec(v, static_cast<int>(m.cols()));
  return f2_from_vec(m * x);
}

std::vector<F2Vec> stabilizer_transvection_classes(int genus, F2Vec beta) {
  check_beta(genus, beta);
  std::vector<F2Vec> classes;
  const F2Vec all = (1u << (2 * genus));
  for (F2Vec c = 1; c < all; ++c)
    if (f2_pair(c, beta) == 0) classes.push_back(c);
  return classes;
}

std::vector<IMat> stabilizer_generators(int genus, F2Vec beta) {
  SymplecticSpace space(genus);
  IMat j = space.form();
  std::vector<IMat> gens;
  for (F2Vec c : stabilizer_transvection_classes(genus, beta))
    gens.push_back(reduce_mod(transvection(f2_to_vec(c, space.dim()), j), 2));
  return gens;
}

std::vector<std::vector<F2Vec>> orbit_classify(int genus, F2Vec beta) {
  check_beta(genus, beta);
  const std::vector<F2Vec> gens = stabilizer_transvection_classes(genus, beta);
  const F2Vec all = (1u << (2 * genus));
  std::vector<bool> seen(all, false);
  std::vector<std::vector<F2Vec>> orbits;

  for (F2Vec start = 1; start < all; ++start) {
    if (seen[start]) continue;
    std::vector<F2Vec> orbit;
    std::deque<F2Vec> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      F2Vec v = queue.front();
      queue.pop_front();
      orbit.push_back(v);
      for (F2Vec c : gens) {
        F2Vec w = f2_transvect(v, c);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });
  return orbits;
}

bool GroupClosure::contains(const IMat& m) const {
  return keys.count(encode_mod_p(reduce_mod(m, modulus))) > 0;
}

GroupClosure closure_mod_p(const std::vector<IMat>& generators, Int p,
                           std::size_t element_budget) {
  if (p < 2 || p > 127) throw UsageError("modulus out of encoding range");
  if (generators.empty()) throw UsageError("closure needs at least one generator");
  const int dim = static_cast<int>(generators.front().rows());

  GroupClosure cl;
  cl.modulus = p;
  cl.dim = dim;
  std::vector<IMat> gens;
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw UsageError("closure generators have mixed dimensions");
    gens.push_back(reduce_mod(g, p));
  }

  IMat id = IMat::Identity(dim, dim);
  cl.elements.push_back(id);
  cl.keys.insert(encode_mod_p(id));

  std::size_t next = 0;
  while (next < cl.elements.size()) {
    IMat m = cl.elements[next++];
    for (const auto& g : gens) {
      IMat n = reduce_mod(IMat(m * g), p);
      if (cl.keys.insert(encode_mod_p(n)).second) {
        cl.elements.push_back(n);
        if (cl.elements.size() > element_budget)
          throw CapabilityError("group closure exceeded its element budget");
      }
    }
  }
  return cl;
}

GroupClosure stabilizer_closure(int genus, F2Vec beta) {
  check_beta(genus, beta);
  if (genus > 3)
    throw CapabilityError(
        "full stabilizer enumeration is limited to genus 2 and 3");
  return closure_mod_p(stabilizer_generators(genus, beta), 2);
}

Int sp_group_order(int n, Int q) {
  if (n < 1 || q < 2) throw UsageError("bad symplectic order parameters");
  using Wide = __int128;
  Wide order = 1;
  const Wide limit = Wide(1) << 62;
  for (int i = 0; i < n * n; ++i) {
    order *= q;
    if (order > limit) throw CapabilityError("group order exceeds 63 bits");
  }
  for (int i = 1; i <= n; ++i) {
    Wide f = 1;
    for (int k = 0; k < 2 * i; ++k) f *= q;
    order *= (f - 1);
    if (order > limit) throw CapabilityError("group order exceeds 63 bits");
  }
  return static_cast<Int>(order);
}

ShadowGraph shadow_n1(int genus, F2Vec beta) {
  check_beta(genus, beta);
  ShadowGraph g;
  g.genus = genus;
  g.beta = beta;
  const F2Vec all = (1u << (2 * genus));
  for (F2Vec v = 1; v < all; ++v)
    if (f2_pair(v, beta) == 1) g.vertices.push_back(v);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      F2Vec u = g.vertices[i], v = g.vertices[j];
      if (f2_pair(u, v) == 1 && (u ^ v) != beta)
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

bool graph_connected(const ShadowGraph& g) {
  if (g.vertices.empty()) return true;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t found = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++found;
        queue.push_back(w);
      }
  }
  return found == g.vertices.size();
}

TransitivityReport transitivity_report(const ShadowGraph& g,
                                       const std::vector<IMat>& generators) {
  std::map<F2Vec, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index[g.vertices[i]] = static_cast<int>(i);

  // vertex orbits
  std::vector<int> vorbit(g.vertices.size(), -1);
  std::size_t vcount = 0;
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (vorbit[s] >= 0) continue;
    ++vcount;
    std::deque<int> queue{static_cast<int>(s)};
    vorbit[s] = static_cast<int>(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& m : generators) {
        auto it = index.find(f2_apply(m, g.vertices[v]));
        if (it == index.end())
          throw InternalError("group does not preserve the shadow vertices");
        if (vorbit[it->second] < 0) {
          vorbit[it->second] = static_cast<int>(s);
          queue.push_back(it->second);
        }
      }
    }
  }

  // ordered edge orbits
  std::map<std::pair<int, int>, int> eindex;
  std::vector<std::pair<int, int>> darts;
  for (auto [i, j] : g.edges) {
    eindex[{i, j}] = static_cast<int>(darts.size());
    darts.emplace_back(i, j);
    eindex[{j, i}] = static_cast<int>(darts.size());
    darts.emplace_back(j, i);
  }
  std::vector<int> eorbit(darts.size(), -1);
  std::size_t ecount = 0;
  for (std::size_t s = 0; s < darts.size(); ++s) {
    if (eorbit[s] >= 0) continue;
    ++ecount;
    std::deque<int> queue{static_cast<int>(s)};
    eorbit[s] = static_cast<int>(s);
    while (!queue.empty()) {
      auto [i, j] = darts[queue.front()];
      queue.pop_front();
      for (const auto& m : generators) {
        int ni = index.at(f2_apply(m, g.vertices[i]));
        int nj = index.at(f2_apply(m, g.vertices[j]));
        auto it = eindex.find({ni, nj});
        if (it == eindex.end())
          throw InternalError("group does not preserve the shadow edges");
        if (eorbit[it->second] < 0) {
          eorbit[it->second] = static_cast<int>(s);
          queue.push_back(it->second);
        }
      }
    }
  }
  return {vcount, ecount};
}

} // namespace prym
