#pragma once

#include <string>
#include <vector>

#include "prym/types.hpp"

namespace prym {

// Closed oriented surface presented as a polygon complex: faces are cyclic
// dart words over directed edges. Dart +(e+1) traverses edge e forward,
// -(e+1) backward. Every edge must appear exactly twice across all faces,
// once per direction, which is what makes the complex a closed oriented
// surface.
struct CwSurface {
  struct Edge {
    int tail = 0, head = 0;
  };

  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> faces;

  int euler_characteristic() const;
  bool connected() const;
  // throws InternalError naming the violated condition
  void validate_closed_oriented() const;
};

// One-vertex ribbon model of the closed genus-g surface: the 2g edge loops
// a_1, b_1, ..., a_g, b_g and a single face reading the commutator product
// a1 b1 a1^-1 b1^-1 a2 b2 ...
class RibbonSurface {
 public:
  explicit RibbonSurface(int genus);
  RibbonSurface() : RibbonSurface(1) {}

  int genus() const { return genus_; }
  const CwSurface& cw() const { return cw_; }

  int edge_a(int i) const;  // handles numbered from 1
  int edge_b(int i) const;
  std::string edge_name(int e) const;
  int edge_by_name(const std::string& name) const;

 private:
  int genus_;
  CwSurface cw_;
};

// Free-homotopy word in the edge letters, stored cyclically reduced.
struct Loop {
  std::vector<int> letters;  // +(e+1) / -(e+1)

  // whitespace-separated letters, "-" prefix inverts: "a3 -a4 b1"
  static Loop parse(const RibbonSurface& s, const std::string& text);
  std::string str(const RibbonSurface& s) const;
  Loop inverse() const;
};

// Abelianization: signed letter counts in interleaved coordinates.
IVec homology_class(const RibbonSurface& s, const Loop& l);

} // namespace prym
