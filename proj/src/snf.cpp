#include "prym/snf.hpp"

#include <algorithm>
#include <cstdlib>

#include "prym/errors.hpp"

namespace prym {

namespace {

// Entry-size guard: all callers work with tiny matrices, so anything close
// to the int64 range signals a logic error rather than a legitimate value.
constexpr Int kEntryLimit = Int(1) << 55;

void guard(const IMat& m) {
  if (m.size() > 0 && m.cwiseAbs().maxCoeff() >= kEntryLimit)
    throw InternalError("integer entry overflow guard tripped");
}

// floor division so remainders satisfy 0 <= r < |d|
Int fdiv(Int a, Int d) {
  Int q = a / d, r = a % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

} // namespace

SmithResult smith_normal_form(const IMat& a) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  SmithResult res;
  res.u = IMat::Identity(n, n);
  res.v = IMat::Identity(m, m);
  res.s = a;
  IMat& s = res.s;

  int t = 0;
  while (t < std::min(n, m)) {
    // smallest nonzero entry in the trailing block, lexicographic ties
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (s(i, j) != 0 &&
            (pi < 0 || std::abs(s(i, j)) < std::abs(s(pi, pj))))
          pi = i, pj = j;
    if (pi < 0) break;

    s.row(t).swap(s.row(pi));
    res.u.row(t).swap(res.u.row(pi));
    s.col(t).swap(s.col(pj));
    res.v.col(t).swap(res.v.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (s(i, t) == 0) continue;
        Int q = fdiv(s(i, t), s(t, t));
        s.row(i) -= q * s.row(t);
        res.u.row(i) -= q * res.u.row(t);
        if (s(i, t) != 0) {  // remainder strictly smaller: promote it
          s.row(t).swap(s.row(i));
          res.u.row(t).swap(res.u.row(i));
          clean = false;
        }
      }
      for (int j = t + 1; j < m; ++j) {
        if (s(t, j) == 0) continue;
        Int q = fdiv(s(t, j), s(t, t));
        s.col(j) -= q * s.col(t);
        res.v.col(j) -= q * res.v.col(t);
        if (s(t, j) != 0) {
          s.col(t).swap(s.col(j));
          res.v.col(t).swap(res.v.col(j));
          clean = false;
        }
      }
      // pivot must divide the rest of the block for the divisor chain
      if (clean) {
        for (int i = t + 1; i < n && clean; ++i)
          for (int j = t + 1; j < m && clean; ++j)
            if (s(i, j) % s(t, t) != 0) {
              s.col(t) += s.col(j);
              res.v.col(t) += res.v.col(j);
              clean = false;
            }
      }
      guard(s);
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      res.u.row(t) = -res.u.row(t);
    }
    ++t;
  }
  res.rank = t;
  return res;
}

IMat kernel_basis(const IMat& a) {
  SmithResult f = smith_normal_form(a);
  const int m = static_cast<int>(a.cols());
  IMat k(m, m - f.rank);
  for (int j = f.rank; j < m; ++j) k.col(j - f.rank) = f.v.col(j);
  return k;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  SmithResult f = smith_normal_form(a);
  IVec ub = f.u * b;
  const int m = static_cast<int>(a.cols());
  IVec z = IVec::Zero(m);
  for (int i = 0; i < static_cast<int>(a.rows()); ++i) {
    if (i < f.rank) {
      if (ub(i) % f.s(i, i) != 0) return std::nullopt;
      z(i) = ub(i) / f.s(i, i);
    } else if (ub(i) != 0) {
      return std::nullopt;
    }
  }
  return f.v * z;
}

Int determinant(const IMat& a) {
  if (a.rows() != a.cols()) throw UsageError("determinant needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1;
  using Wide = __int128;
  std::vector<std::vector<Wide>> w(n, std::vector<Wide>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = a(i, j);

  constexpr Wide limit = Wide(1) << 100;
  Wide prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        if (w[i][j] > limit || w[i][j] < -limit)
          throw InternalError("determinant overflow guard tripped");
      }
    prev = w[k][k];
  }
  Wide d = w[n - 1][n - 1];
  if (sign < 0) d = -d;
  if (d > kEntryLimit || d < -kEntryLimit)
    throw InternalError("determinant exceeds entry guard");
  return static_cast<Int>(d);
}

bool is_unimodular(const IMat& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

IMat unimodular_inverse(const IMat& a) {
  if (a.rows() != a.cols()) throw UsageError("inverse needs a square matrix");
  SmithResult f = smith_normal_form(a);
  const int n = static_cast<int>(a.rows());
  if (f.rank != n) throw DegenerateInput("matrix is singular over the integers");
  for (int i = 0; i < n; ++i)
    if (f.s(i, i) != 1)
      throw DegenerateInput("matrix is not unimodular");
  return f.v * f.u;  // a = u^-1 s v^-1 with s = id
}

IMat integer_left_inverse(const IMat& a) {
  SmithResult f = smith_normal_form(a);
  const int n = static_cast<int>(a.rows()), k = static_cast<int>(a.cols());
  if (f.rank != k) throw DegenerateInput("columns are not independent");
  for (int i = 0; i < k; ++i)
    if (f.s(i, i) != 1)
      throw DegenerateInput("column span is not saturated");
  IMat cut = IMat::Zero(k, n);
  cut.block(0, 0, k, k) = IMat::Identity(k, k);
  return f.v * cut * f.u;  // (v [id 0] u) a == id
}

QuotientBasis quotient_basis(int k, const IMat& relations) {
  if (relations.size() > 0 && relations.rows() != k)
    throw UsageError("relation vectors live in the wrong rank");
  IMat r = relations.size() > 0 ? relations : IMat::Zero(k, 0);
  SmithResult f = smith_normal_form(r);
  for (int i = 0; i < f.rank; ++i)
    if (f.s(i, i) != 1)
      throw DegenerateInput("quotient lattice has torsion");
  IMat uinv = unimodular_inverse(f.u);
  const int q = k - f.rank;
  QuotientBasis out;
  out.basis = IMat(k, q);
  out.projection = IMat(q, k);
  for (int j = 0; j < q; ++j) {
    out.basis.col(j) = uinv.col(f.rank + j);
    out.projection.row(j) = f.u.row(f.rank + j);
  }
  return out;
}

SkewReduction skew_reduce(const IMat& g, PairLayout layout) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n || !g.isApprox(-g.transpose()))
    throw UsageError("skew reduction needs a skew-symmetric square matrix");
  if (n % 2 != 0) throw DegenerateInput("odd rank skew form is degenerate");

  IMat s = g;
  IMat w = IMat::Identity(n, n);
  std::vector<bool> done(n, false);
  std::vector<std::pair<int, int>> pairs;
  SkewReduction out;

  auto add_basis = [&](int dst, Int c, int src) {
    // basis op b_dst += c * b_src, mirrored on rows and columns of the Gram
    s.row(dst) += c * s.row(src);
    s.col(dst) += c * s.col(src);
    w.col(dst) += c * w.col(src);
    guard(s);
  };

  for (int step = 0; step < n / 2; ++step) {
    int pi = -1, pj = -1;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (done[j] || s(i, j) == 0) continue;
        if (pi < 0 || std::abs(s(i, j)) < std::abs(s(pi, pj))) pi = i, pj = j;
      }
    }
    if (pi < 0) throw DegenerateInput("skew form is degenerate");

    for (;;) {
      Int d = s(pi, pj);
      bool again = false;
      for (int k = 0; k < n && !again; ++k) {
        if (done[k] || k == pi || k == pj) continue;
        // clear s(pi,k) with b_k -= q * b_pj, then s(pj,k) with b_k += q' * b_pi
        if (s(pi, k) != 0) {
          Int q = fdiv(s(pi, k), d);
          add_basis(k, -q, pj);
          if (s(pi, k) != 0) { pj = k; again = true; break; }
        }
        if (s(pj, k) != 0) {
          Int q = fdiv(s(pj, k), -d);
          add_basis(k, -q, pi);
          if (s(pj, k) != 0) { pi = std::min(pj, k); pj = std::max(pj, k); again = true; break; }
        }
      }
      if (!again) break;
    }

    if (s(pi, pj) < 0) std::swap(pi, pj);
    done[pi] = done[pj] = true;
    pairs.emplace_back(pi, pj);
    out.divisors.push_back(s(pi, pj));
  }

  // permute into the requested layout
  const int m = n / 2;
  IMat perm = IMat::Zero(n, n);
  for (int p = 0; p < m; ++p) {
    int e = layout == PairLayout::Interleaved ? 2 * p : p;
    int f = layout == PairLayout::Interleaved ? 2 * p + 1 : m + p;
    perm(pairs[p].first, e) = 1;
    perm(pairs[p].second, f) = 1;
  }
  out.w = w * perm;
  return out;
}

IMat standard_skew_gram(int m, PairLayout layout, const std::vector<Int>& divisors) {
  IMat j = IMat::Zero(2 * m, 2 * m);
  for (int p = 0; p < m; ++p) {
    Int d = divisors.empty() ? 1 : divisors.at(p);
    int e = layout == PairLayout::Interleaved ? 2 * p : p;
    int f = layout == PairLayout::Interleaved ? 2 * p + 1 : m + p;
    j(e, f) = d;
    j(f, e) = -d;
  }
  return j;
}

} // namespace prym
