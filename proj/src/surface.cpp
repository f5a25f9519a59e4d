#include "prym/surface.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "prym/errors.hpp"

namespace prym {

int CwSurface::euler_characteristic() const {
  return num_vertices - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

bool CwSurface::connected() const {
  if (num_vertices == 0) return true;
  std::vector<int> root(num_vertices);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Edge& e : edges) root[find(e.tail)] = find(e.head);
  int comp = find(0);
  for (int v = 0; v < num_vertices; ++v)
    if (find(v) != comp) return false;
  return true;
}

void CwSurface::validate_closed_oriented() const {
  std::vector<int> forward(edges.size(), 0), backward(edges.size(), 0);
  for (const auto& face : faces)
    for (int d : face) {
      if (d == 0 || std::abs(d) > static_cast<int>(edges.size()))
        throw InternalError("face word references a missing edge");
      (d > 0 ? forward : backward)[std::abs(d) - 1]++;
    }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (forward[e] != 1 || backward[e] != 1)
      throw InternalError("edge is not traversed once per direction");
  // face words must close up as vertex paths
  for (const auto& face : faces) {
    if (face.empty()) throw InternalError("empty face word");
    for (std::size_t i = 0; i < face.size(); ++i) {
      int d = face[i], n = face[(i + 1) % face.size()];
      int head = d > 0 ? edges[d - 1].head : edges[-d - 1].tail;
      int tail = n > 0 ? edges[n - 1].tail : edges[-n - 1].head;
      if (head != tail) throw InternalError("face word does not close up");
    }
  }
}

RibbonSurface::RibbonSurface(int genus) : genus_(genus) {
  if (genus < 1) throw UsageError("genus must be at least 1");
  cw_.num_vertices = 1;
  cw_.edges.assign(2 * genus, {0, 0});
  std::vector<int> face;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;  // dart ids
    face.insert(face.end(), {a, b, -a, -b});
  }
  cw_.faces.push_back(std::move(face));
  cw_.validate_closed_oriented();
}

int RibbonSurface::edge_a(int i) const {
  if (i < 1 || i > genus_) throw UsageError("handle index out of range");
  return 2 * (i - 1);
}

int RibbonSurface::edge_b(int i) const {
  if (i < 1 || i > genus_) throw UsageError("handle index out of range");
  return 2 * (i - 1) + 1;
}

std::string RibbonSurface::edge_name(int e) const {
  if (e < 0 || e >= 2 * genus_) throw UsageError("edge index out of range");
  return (e % 2 == 0 ? "a" : "b") + std::to_string(e / 2 + 1);
}

int RibbonSurface::edge_by_name(const std::string& name) const {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
    throw UsageError("edge names look like a3 or b1: " + name);
  char* end = nullptr;
  long i = std::strtol(name.c_str() + 1, &end, 10);
  if (*end != '\0' || i < 1 || i > genus_)
    throw UsageError("edge names look like a3 or b1: " + name);
  return name[0] == 'a' ? edge_a(static_cast<int>(i)) : edge_b(static_cast<int>(i));
}

namespace {

void cyclic_reduce(std::vector<int>& w) {
  bool changed = true;
  while (changed && !w.empty()) {
    changed = false;
    std::vector<int> out;
    for (int d : w) {
      if (!out.empty() && out.back() == -d) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(d);
      }
    }
    while (out.size() >= 2 && out.front() == -out.back()) {
      out.erase(out.begin());
      out.pop_back();
      changed = true;
    }
    w = std::move(out);
  }
}

} // namespace

Loop Loop::parse(const RibbonSurface& s, const std::string& text) {
  Loop l;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok[0] == '-') {
      sign = -1;
      tok.erase(0, 1);
    }
    l.letters.push_back(sign * (s.edge_by_name(tok) + 1));
  }
  cyclic_reduce(l.letters);
  return l;
}

std::string Loop::str(const RibbonSurface& s) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    if (letters[i] < 0) out << '-';
    out << s.edge_name(std::abs(letters[i]) - 1);
  }
  return out.str();
}

Loop Loop::inverse() const {
  Loop inv;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    inv.letters.push_back(-*it);
  return inv;
}

IVec homology_class(const RibbonSurface& s, const Loop& l) {
  IVec v = IVec::Zero(2 * s.genus());
  for (int d : l.letters) v(std::abs(d) - 1) += d > 0 ? 1 : -1;
  return v;
}

} // namespace prym
