#include "prym/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "prym/errors.hpp"
#include "prym/snf.hpp"

namespace prym {

namespace {

CMat to_complex(const IMat& m) { return m.cast<double>().cast<Cplx>(); }

double sym_residual(const CMat& tau) { return (tau - tau.transpose()).norm(); }

double min_im_eigenvalue(const CMat& tau) {
  RMat im = 0.5 * (tau.imag() + tau.imag().transpose());
  Eigen::SelfAdjointEigenSolver<RMat> es(im);
  return es.eigenvalues().minCoeff();
}

// uniform in [-1, 1), 53-bit resolution, engine-order deterministic
double uniform_signed(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

CMat fl_apply(const CMat& num, const CMat& den, double tol) {
  Eigen::JacobiSVD<CMat> svd(den);
  const auto& sv = svd.singularValues();
  double smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smin > tol * std::max(1.0, smax))) {
    std::ostringstream os;
    os << "near-singular action denominator, condition number "
       << (smin > 0 ? smax / smin : std::numeric_limits<double>::infinity());
    throw DegenerateInput(os.str());
  }
  return den.transpose().partialPivLu().solve(num.transpose()).transpose();
}

CMat extract_blocks(const CMat& pi, int g) {
  return pi.block(1, 1, g - 1, g - 1) - pi.block(g, 1, g - 1, g - 1);
}

// Membership check used around the fractional linear action itself: the
// symmetry residual scales with the matrix, and the imaginary part only has
// to stay positive definite. Absolute margins shrink under well-conditioned
// actions of large integer words without the point leaving Siegel space.
void require_action_point(const CMat& tau, double tol, const char* where) {
  if (tau.rows() != tau.cols() || tau.rows() == 0)
    throw DegenerateInput(std::string(where) + ": matrix must be square");
  double scale = std::max(1.0, tau.norm());
  if (sym_residual(tau) > tol * scale) {
    std::ostringstream os;
    os << where << ": asymmetric, residual " << sym_residual(tau);
    throw DegenerateInput(os.str());
  }
  if (!(min_im_eigenvalue(tau) > 0)) {
    std::ostringstream os;
    os << where << ": imaginary part not positive definite, smallest eigenvalue "
       << min_im_eigenvalue(tau);
    throw DegenerateInput(os.str());
  }
}

} // namespace

bool is_siegel_point(const CMat& tau, double tol) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) return false;
  return sym_residual(tau) <= tol && min_im_eigenvalue(tau) > tol;
}

void require_siegel_point(const CMat& tau, double tol) {
  if (tau.rows() != tau.cols() || tau.rows() == 0)
    throw DegenerateInput("Siegel point must be square and nonempty");
  if (sym_residual(tau) > tol) {
    std::ostringstream os;
    os << "Siegel point asymmetric: residual " << sym_residual(tau);
    throw DegenerateInput(os.str());
  }
  if (!(min_im_eigenvalue(tau) > tol)) {
    std::ostringstream os;
    os << "imaginary part not positive definite: smallest eigenvalue "
       << min_im_eigenvalue(tau);
    throw DegenerateInput(os.str());
  }
}

ModularElement ModularElement::from(const IMat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw UsageError("modular element must be square of even size");
  const int h = static_cast<int>(m.rows()) / 2;
  IMat j = standard_skew_gram(h, PairLayout::Blocks);
  IMat t = m.transpose() * j * m;
  ModularElement out;
  out.m = m;
  if ((t - j).isZero(0))
    out.anti = false;
  else if ((t + j).isZero(0))
    out.anti = true;
  else
    throw UsageError("matrix does not preserve the block form up to sign");
  return out;
}

ModularElement ModularElement::z_conjugate() const {
  ModularElement out = *this;
  const int h = half();
  out.m.topRightCorner(h, h) = -beta();
  out.m.bottomLeftCorner(h, h) = -gamma();
  return out;
}

CMat act(const ModularElement& m, const CMat& tau, double tol) {
  if (m.anti) throw UsageError("action requires a symplectic element");
  if (tau.rows() != m.half()) throw UsageError("action dimension mismatch");
  require_action_point(tau, tol, "action input");
  CMat num = to_complex(m.alpha()) * tau + to_complex(m.beta());
  CMat den = to_complex(m.gamma()) * tau + to_complex(m.delta());
  CMat out = fl_apply(num, den, tol);
  require_action_point(out, tol, "action output");
  return out;
}

CMat act_variant(const ModularElement& m, const CMat& tau, double tol) {
  if (m.anti) throw UsageError("action requires a symplectic element");
  if (tau.rows() != m.half()) throw UsageError("action dimension mismatch");
  require_action_point(tau, tol, "action input");
  CMat num = to_complex(m.alpha()) * tau - to_complex(m.beta());
  CMat den = -to_complex(m.gamma()) * tau + to_complex(m.delta());
  CMat out = fl_apply(num, den, tol);
  require_action_point(out, tol, "action output");
  return out;
}

CMat neg_conj(const CMat& tau) { return -tau.conjugate(); }

IMat PeriodMatrix::a_permutation() const {
  const int h = handles();
  if (sigma.rows() != 2 * h || sigma.cols() != 2 * h)
    throw UsageError("deck action dimension mismatch");
  if (!sigma.topRightCorner(h, h).isZero(0) ||
      !sigma.bottomLeftCorner(h, h).isZero(0))
    throw UsageError("deck action must have vanishing off-diagonal blocks");
  IMat p = sigma.topLeftCorner(h, h);
  if (!(p * p).isIdentity())
    throw UsageError("deck a-block must square to the identity");
  return p;
}

CMat prym_extract(const PeriodMatrix& pm, const SiegelTols& tols) {
  if (pm.g < 2) throw UsageError("extraction requires base genus at least 2");
  if (pm.pi.rows() != pm.handles())
    throw UsageError("period matrix size must match the handle count");
  require_siegel_point(pm.pi, tols.membership);
  IMat p = pm.a_permutation();
  CMat pc = to_complex(p);
  double fixed = (pm.pi - pc * pm.pi * pc.transpose()).norm();
  if (fixed > tols.fixed_point) {
    std::ostringstream os;
    os << "period matrix not fixed by the deck action: residual " << fixed;
    throw DegenerateInput(os.str());
  }
  CMat tau = extract_blocks(pm.pi, pm.g);
  require_siegel_point(tau, tols.membership);
  return tau;
}

CMat random_siegel_point(int h, std::uint64_t seed) {
  if (h < 1) throw UsageError("Siegel dimension must be positive");
  std::mt19937_64 rng(seed);
  RMat re = RMat::Zero(h, h);
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) {
      double v = uniform_signed(rng);
      re(i, j) = v;
      re(j, i) = v;
    }
  RMat a(h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) a(i, j) = uniform_signed(rng);
  RMat im = a * a.transpose() + static_cast<double>(h) * RMat::Identity(h, h);
  CMat tau = re.cast<Cplx>() + Cplx(0, 1) * im.cast<Cplx>();
  return tau;
}

PeriodMatrix random_symmetric_period(const IMat& sigma_sym, int g,
                                     std::uint64_t seed,
                                     const SiegelTols& tols) {
  if (g < 2) throw UsageError("base genus must be at least 2");
  const int h = 2 * g - 1;
  ModularElement se = ModularElement::from(sigma_sym);
  if (se.anti) throw UsageError("deck action must be symplectic");
  if (!(se.m * se.m).isIdentity())
    throw UsageError("deck action must square to the identity");
  CMat pi0 = random_siegel_point(h, seed);

  PeriodMatrix pm;
  pm.sigma = sigma_sym;
  pm.g = g;
  if (se.beta().isZero(0) && se.gamma().isZero(0)) {
    CMat pc = to_complex(se.alpha());
    pm.pi = 0.5 * (pi0 + pc * pi0 * pc.transpose());
  } else {
    // midpoint iteration toward the fixed locus of the induced action
    CMat cur = pi0;
    for (int step = 0; step < 200; ++step) {
      CMat next = 0.5 * (cur + act(se, cur, tols.membership));
      double delta = (next - cur).norm();
      cur = next;
      if (delta < 1e-13) break;
    }
    pm.pi = cur;
  }
  require_siegel_point(pm.pi, tols.membership);
  double fixed = (pm.pi - act(se, pm.pi, tols.membership)).norm();
  if (fixed > tols.fixed_point) {
    std::ostringstream os;
    os << "fixed-point search failed: residual " << fixed;
    throw DegenerateInput(os.str());
  }
  return pm;
}

EquivarianceResiduals equivariance_residuals(const IMat& m_sym,
                                             const IMat& m_minus,
                                             const PeriodMatrix& pm,
                                             const SiegelTols& tols) {
  ModularElement up = ModularElement::from(m_sym);
  ModularElement down = ModularElement::from(m_minus);
  if (up.anti || down.anti)
    throw UsageError("equivariance requires symplectic elements");
  if (!(m_sym * pm.sigma - pm.sigma * m_sym).isZero(0))
    throw UsageError("word must centralize the deck action");
  CMat tau = prym_extract(pm, tols);

  CMat up_std = act(up, pm.pi, tols.membership);
  CMat up_var = act_variant(up, pm.pi, tols.membership);
  CMat down_std = act(down, tau, tols.membership);
  CMat down_var = act_variant(down, tau, tols.membership);

  EquivarianceResiduals r;
  r.variant_both = (extract_blocks(up_var, pm.g) - down_var).norm();
  r.standard_both = (extract_blocks(up_std, pm.g) - down_std).norm();
  r.mixed = (extract_blocks(up_std, pm.g) - down_var).norm();
  return r;
}

double antiholomorphic_residual(const ModularElement& m, const CMat& tau,
                                double tol) {
  if (m.anti) throw UsageError("anti-holomorphic check takes a symplectic element");
  CMat lhs = neg_conj(act(m, tau, tol));
  CMat rhs = act(m.z_conjugate(), neg_conj(tau), tol);
  return (lhs - rhs).norm();
}

} // namespace prym
