#include "prym/pairing.hpp"

#include <cstdlib>

#include "prym/errors.hpp"
#include "prym/snf.hpp"

namespace prym {

namespace {

// Barycentric refinement bookkeeping. 1-cells: per edge the two halves
// [tail, mid] and [head, mid]; per face position a corner spoke
// [corner, center] and a midpoint spoke [mid, center]. 2-cells: per face
// position the triangles A = [corner_i, mid, center] (coherent +1) and
// B = [corner_{i+1}, mid, center] (coherent -1).
struct Refinement {
  int n_half = 0;
  std::vector<int> spoke_offset;    // per face, first spoke id
  int n_one = 0;                    // total 1-cells
  int n_tri = 0;                    // total 2-cells (A,B alternating)
  IMat boundary2;                   // n_one x n_tri
  IVec fundamental;                 // n_tri coherent coefficients
  IMat face01_of_tri;               // see cup evaluation below
  std::vector<int> tri_face01;      // 1-cell index of [v0,v1] per triangle
  std::vector<int> tri_face12;      // 1-cell index of [v1,v2] per triangle
  std::vector<int> one_cell_tail;   // 0-cell ids per 1-cell, for delta0
  std::vector<int> one_cell_head;
  int n_zero = 0;
};

Refinement refine(const CwSurface& s) {
  Refinement r;
  const int E = static_cast<int>(s.edges.size());
  const int V = s.num_vertices;
  const int F = static_cast<int>(s.faces.size());
  r.n_half = 2 * E;

  int spokes = 0;
  r.spoke_offset.resize(F);
  for (int f = 0; f < F; ++f) {
    r.spoke_offset[f] = r.n_half + spokes;
    spokes += 2 * static_cast<int>(s.faces[f].size());
  }
  r.n_one = r.n_half + spokes;
  r.n_zero = V + E + F;  // vertices, edge midpoints, face centers

  // 0-cell ids: vertex v -> v, midpoint of e -> V + e, center of f -> V + E + f
  r.one_cell_tail.resize(r.n_one);
  r.one_cell_head.resize(r.n_one);
  for (int e = 0; e < E; ++e) {
    r.one_cell_tail[2 * e] = s.edges[e].tail;       // [tail, mid]
    r.one_cell_head[2 * e] = V + e;
    r.one_cell_tail[2 * e + 1] = s.edges[e].head;   // [head, mid]
    r.one_cell_head[2 * e + 1] = V + e;
  }

  int tris = 0;
  for (int f = 0; f < F; ++f) tris += 2 * static_cast<int>(s.faces[f].size());
  r.n_tri = tris;
  r.boundary2 = IMat::Zero(r.n_one, r.n_tri);
  r.fundamental = IVec::Zero(r.n_tri);
  r.tri_face01.resize(r.n_tri);
  r.tri_face12.resize(r.n_tri);

  int tri = 0;
  for (int f = 0; f < F; ++f) {
    const auto& word = s.faces[f];
    const int L = static_cast<int>(word.size());
    for (int i = 0; i < L; ++i) {
      const int d = word[i];
      const int e = std::abs(d) - 1;
      const int tail_half = d > 0 ? 2 * e : 2 * e + 1;
      const int head_half = d > 0 ? 2 * e + 1 : 2 * e;
      const int u_i = r.spoke_offset[f] + 2 * i;            // corner spoke
      const int w_i = r.spoke_offset[f] + 2 * i + 1;        // midpoint spoke
      const int u_next = r.spoke_offset[f] + 2 * ((i + 1) % L);
      const int corner_i = d > 0 ? s.edges[e].tail : s.edges[e].head;

      r.one_cell_tail[u_i] = corner_i;
      r.one_cell_head[u_i] = V + E + f;
      r.one_cell_tail[w_i] = V + e;
      r.one_cell_head[w_i] = V + E + f;

      // A = [corner_i, mid, center]: faces [mid,center], [corner,center], [corner,mid]
      r.boundary2(w_i, tri) += 1;
      r.boundary2(u_i, tri) -= 1;
      r.boundary2(tail_half, tri) += 1;
      r.fundamental(tri) = 1;
      r.tri_face01[tri] = tail_half;
      r.tri_face12[tri] = w_i;
      ++tri;

      // B = [corner_{i+1}, mid, center]
      r.boundary2(w_i, tri) += 1;
      r.boundary2(u_next, tri) -= 1;
      r.boundary2(head_half, tri) += 1;
      r.fundamental(tri) = -1;
      r.tri_face01[tri] = head_half;
      r.tri_face12[tri] = w_i;
      ++tri;
    }
  }
  if ((r.boundary2 * r.fundamental).cwiseAbs().maxCoeff() != 0)
    throw InternalError("fundamental 2-chain is not a cycle");
  return r;
}

} // namespace

SurfaceHomology surface_homology(const CwSurface& s, const IVec& ref_cycle_a,
                                 const IVec& ref_cycle_b, Int ref_pairing) {
  s.validate_closed_oriented();
  if (!s.connected()) throw UsageError("surface must be connected");
  const int E = static_cast<int>(s.edges.size());
  const int V = s.num_vertices;

  // CW chain level: cycles modulo face boundaries
  IMat d1 = IMat::Zero(V, E);
  for (int e = 0; e < E; ++e) {
    d1(s.edges[e].head, e) += 1;
    d1(s.edges[e].tail, e) -= 1;
  }
  IMat cycles = kernel_basis(d1);  // E x k, saturated
  IMat cycles_left = integer_left_inverse(cycles);

  IMat face_chains = IMat::Zero(E, static_cast<int>(s.faces.size()));
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (int d : s.faces[f]) face_chains(std::abs(d) - 1, static_cast<int>(f)) += d > 0 ? 1 : -1;

  // face boundaries expressed in cycle coordinates
  IMat relations = cycles_left * face_chains;
  if (!(cycles * relations - face_chains).isZero(0))
    throw InternalError("face boundary is not a cycle");

  QuotientBasis q = quotient_basis(static_cast<int>(cycles.cols()), relations);

  SurfaceHomology h;
  h.rank = static_cast<int>(q.basis.cols());
  h.cycle_basis = cycles * q.basis;
  h.h1_projection = q.projection * cycles_left;
  if (!(h.h1_projection * h.cycle_basis - IMat::Identity(h.rank, h.rank)).isZero(0))
    throw InternalError("homology projection does not split the basis");

  // cochain level on the refinement
  Refinement r = refine(s);
  IMat delta1 = r.boundary2.transpose();
  IMat cocycles = kernel_basis(delta1);  // n_one x z

  IMat delta0 = IMat::Zero(r.n_one, r.n_zero);
  for (int c = 0; c < r.n_one; ++c) {
    delta0(c, r.one_cell_head[c]) += 1;
    delta0(c, r.one_cell_tail[c]) -= 1;
  }
  IMat cocycles_left = integer_left_inverse(cocycles);
  IMat corelations = cocycles_left * delta0;
  if (!(cocycles * corelations - delta0).isZero(0))
    throw InternalError("coboundary is not a cocycle");
  QuotientBasis qc = quotient_basis(static_cast<int>(cocycles.cols()), corelations);
  IMat h1_cocycles = cocycles * qc.basis;  // n_one x rank
  if (h1_cocycles.cols() != h.rank)
    throw InternalError("cohomology and homology ranks disagree");

  // refine the cycle basis through edge midpoints: e -> [tail,mid] - [head,mid]
  IMat refine_chain = IMat::Zero(r.n_one, E);
  for (int e = 0; e < E; ++e) {
    refine_chain(2 * e, e) = 1;
    refine_chain(2 * e + 1, e) = -1;
  }
  IMat refined_basis = refine_chain * h.cycle_basis;

  IMat kron = h1_cocycles.transpose() * refined_basis;  // rank x rank
  if (!is_unimodular(kron))
    throw InternalError("Kronecker pairing of the chosen bases is not unimodular");
  IMat dual_cocycles = h1_cocycles * unimodular_inverse(kron).transpose();

  // cup product against the fundamental chain
  IMat cup = IMat::Zero(h.rank, h.rank);
  for (int i = 0; i < h.rank; ++i)
    for (int j = 0; j < h.rank; ++j) {
      Int acc = 0;
      for (int t = 0; t < r.n_tri; ++t)
        acc += r.fundamental(t) * dual_cocycles(r.tri_face01[t], i) *
               dual_cocycles(r.tri_face12[t], j);
      cup(i, j) = acc;
    }
  if (!(cup + cup.transpose()).isZero(0))
    throw InternalError("cup pairing is not skew");
  if (!is_unimodular(cup))
    throw InternalError("cup pairing is not unimodular");

  h.gram = unimodular_inverse(cup);
  if (!(h.gram + h.gram.transpose()).isZero(0))
    throw InternalError("intersection form is not skew");

  // pin the global sign with the reference pair
  Int p = h.pair(h.coords(ref_cycle_a), h.coords(ref_cycle_b));
  if (p != ref_pairing && p != -ref_pairing)
    throw InternalError("reference cycles have unexpected pairing magnitude");
  if (p != ref_pairing) h.gram = -h.gram;
  return h;
}

} // namespace prym
