// Copyright 2026 The holevo-gauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holevo/sdp.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <string>

namespace holevo {

BlockMatrix BlockMatrix::zeros(const std::vector<int>& sizes) {
  BlockMatrix out;
  out.blocks.reserve(sizes.size());
  for (int s : sizes) out.blocks.push_back(MatrixXcd::Zero(s, s));
  return out;
}

MatrixXcd BlockMatrix::dense() const {
  Eigen::Index total = 0;
  for (const auto& blk : blocks) total += blk.rows();
  MatrixXcd out = MatrixXcd::Zero(total, total);
  Eigen::Index offset = 0;
  for (const auto& blk : blocks) {
    out.block(offset, offset, blk.rows(), blk.cols()) = blk;
    offset += blk.rows();
  }
  return out;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& other) {
  if (other.blocks.size() != blocks.size()) {
    throw InputError("BlockMatrix: block count mismatch");
  }
  for (size_t k = 0; k < blocks.size(); ++k) blocks[k] += other.blocks[k];
  return *this;
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& other) const {
  BlockMatrix out = *this;
  out += other * -1.0;
  return out;
}

BlockMatrix BlockMatrix::operator*(double s) const {
  BlockMatrix out = *this;
  for (auto& blk : out.blocks) blk *= s;
  return out;
}

double trace_inner(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.blocks.size() != b.blocks.size()) {
    throw InputError("trace_inner: block count mismatch");
  }
  double sum = 0.0;
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    // Re Tr(A B) = sum_ij Re(A_ij B_ji)
    sum += (a.blocks[k].array() * b.blocks[k].transpose().array()).real().sum();
  }
  return sum;
}

BlockMatrix SdpProblem::combine(const VectorXd& y) const {
  if (y.size() != num_constraints()) {
    throw InputError("combine: y has the wrong length");
  }
  BlockMatrix out = BlockMatrix::zeros(block_sizes);
  for (int j = 0; j < num_constraints(); ++j) {
    if (y(j) == 0.0) continue;
    out += basis_matrices[j] * y(j);
  }
  return out;
}

void SdpProblem::validate() const {
  const size_t nb = block_sizes.size();
  if (block_kinds.size() != nb) throw InputError("block_kinds size mismatch");
  if (basis_matrices.size() != static_cast<size_t>(b.size())) {
    throw InputError("number of basis matrices does not match b");
  }
  auto check = [&](const BlockMatrix& m, const char* what) {
    if (m.blocks.size() != nb) {
      throw InputError(std::string(what) + ": block count mismatch");
    }
    for (size_t k = 0; k < nb; ++k) {
      const auto& blk = m.blocks[k];
      if (blk.rows() != block_sizes[k] || blk.cols() != block_sizes[k]) {
        throw InputError(std::string(what) + ": block has the wrong size");
      }
      const double scale = std::max(1.0, max_abs(blk));
      if (!is_hermitian(blk, 1e-12 * scale)) {
        throw InputError(std::string(what) + ": block is not Hermitian");
      }
      if (block_kinds[k] == BlockKind::kReal &&
          max_abs(MatrixXd(blk.imag())) > 0.0) {
        throw InputError(std::string(what) + ": real block has imaginary entries");
      }
    }
  };
  check(c_matrix, "C");
  for (const auto& bj : basis_matrices) check(bj, "B_j");
}

namespace {

// The iteration runs in extended precision; the problems are tiny and the
// extra digits keep the search direction accurate when X and Z become
// ill-conditioned near a degenerate optimum.
using Real = long double;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Blocks = std::vector<Mat>;

// Real-arithmetic image of the problem: complex blocks become their embedding
// scaled by 1/2.
struct RealProblem {
  std::vector<int> sizes;
  std::vector<Blocks> a;  // a[j][block]
  std::vector<std::vector<bool>> nonzero;
  Blocks c;
  Vec b;
  int total_dim = 0;
};

Mat embed(const MatrixXcd& blk, BlockKind kind) {
  if (kind == BlockKind::kReal) return blk.real().cast<Real>();
  return (0.5 * realify(0.5 * (blk + blk.adjoint()))).cast<Real>();
}

RealProblem to_real(const SdpProblem& p) {
  RealProblem rp;
  rp.b = p.b.cast<Real>();
  const size_t nb = p.block_sizes.size();
  for (size_t k = 0; k < nb; ++k) {
    const int s = p.block_kinds[k] == BlockKind::kReal ? p.block_sizes[k]
                                                       : 2 * p.block_sizes[k];
    rp.sizes.push_back(s);
    rp.total_dim += s;
    rp.c.push_back(embed(p.c_matrix.blocks[k], p.block_kinds[k]));
  }
  for (const auto& bj : p.basis_matrices) {
    Blocks blocks;
    std::vector<bool> nz;
    for (size_t k = 0; k < nb; ++k) {
      blocks.push_back(embed(bj.blocks[k], p.block_kinds[k]));
      nz.push_back(blocks.back().cwiseAbs().maxCoeff() > 0);
    }
    rp.a.push_back(std::move(blocks));
    rp.nonzero.push_back(std::move(nz));
  }
  return rp;
}

Real inner(const Blocks& x, const Blocks& y) {
  Real s = 0;
  for (size_t k = 0; k < x.size(); ++k) s += (x[k].array() * y[k].array()).sum();
  return s;
}

// Tr(A_j M) for each j; M need not be symmetric.
Vec apply_a(const RealProblem& rp, const Blocks& m) {
  Vec out(rp.b.size());
  for (Eigen::Index j = 0; j < rp.b.size(); ++j) {
    Real s = 0;
    for (size_t k = 0; k < m.size(); ++k) {
      if (!rp.nonzero[j][k]) continue;
      s += (rp.a[j][k].array() * m[k].transpose().array()).sum();
    }
    out(j) = s;
  }
  return out;
}

Blocks apply_at(const RealProblem& rp, const Vec& y) {
  Blocks out;
  for (int s : rp.sizes) out.push_back(Mat::Zero(s, s));
  for (Eigen::Index j = 0; j < y.size(); ++j) {
    if (y(j) == 0) continue;
    for (size_t k = 0; k < out.size(); ++k) {
      if (rp.nonzero[j][k]) out[k] += y(j) * rp.a[j][k];
    }
  }
  return out;
}

Mat sym(const Mat& m) { return Real(0.5) * (m + m.transpose()); }

Real max_abs_blocks(const Blocks& x) {
  Real m = 0;
  for (const auto& blk : x) {
    if (blk.size() > 0) m = std::max(m, blk.cwiseAbs().maxCoeff());
  }
  return m;
}

Real min_eig(const Mat& s) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(s, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

// Largest alpha with X + alpha dX >= 0 (infinity if unbounded).
Real max_step(const Blocks& x, const Blocks& dx) {
  Real alpha = std::numeric_limits<Real>::infinity();
  for (size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<Mat> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0;
    const Mat l = llt.matrixL();
    Mat t = l.triangularView<Eigen::Lower>().solve(dx[k]);
    t = l.triangularView<Eigen::Lower>().solve(Mat(t.transpose())).transpose();
    const Real lam = min_eig(sym(t));
    if (lam < 0) alpha = std::min(alpha, Real(-1) / lam);
  }
  return alpha;
}

bool is_pd(const Mat& m) {
  Eigen::LLT<Mat> llt(m);
  return llt.info() == Eigen::Success;
}

// Cholesky of the Schur complement. Near the optimum of degenerate problems
// the matrix is numerically semidefinite; a small diagonal shift keeps the
// factorization alive and iterative refinement against the unshifted matrix
// recovers the accuracy.
class SchurSolver {
 public:
  explicit SchurSolver(const Mat& m) : m_(m) {
    const Real scale = std::max<Real>(m.diagonal().cwiseAbs().maxCoeff(), 1e-300L);
    Real shift = 0;
    for (int attempt = 0; attempt < 14; ++attempt) {
      llt_.compute(m + shift * Mat::Identity(m.rows(), m.cols()));
      if (llt_.info() == Eigen::Success) {
        ok_ = true;
        shifted_ = shift > 0;
        return;
      }
      shift = shift == 0 ? Real(1e-18L) * scale : 10 * shift;
    }
  }

  bool ok() const { return ok_; }

  Vec solve(const Vec& rhs) const {
    Vec x = llt_.solve(rhs);
    if (shifted_) {
      for (int k = 0; k < 5; ++k) x += llt_.solve(rhs - m_ * x);
    }
    return x;
  }

 private:
  const Mat& m_;
  Eigen::LLT<Mat> llt_;
  bool ok_ = false;
  bool shifted_ = false;
};

struct Iterate {
  Blocks x, z;
  Vec y;
};

SdpSolution pack_solution(const SdpProblem& p, const RealProblem& rp,
                          const Iterate& it, int iterations) {
  SdpSolution sol;
  sol.y = it.y.cast<double>();
  sol.iterations = iterations;
  sol.x = BlockMatrix::zeros(p.block_sizes);
  for (size_t k = 0; k < it.x.size(); ++k) {
    const MatrixXd xk = sym(it.x[k]).cast<double>();
    if (p.block_kinds[k] == BlockKind::kReal) {
      sol.x.blocks[k] = xk.cast<Complex>();
    } else {
      sol.x.blocks[k] = unrealify(xk);
    }
  }
  const Real primal = inner(rp.c, it.x);
  const Real dual = rp.b.dot(it.y);
  sol.primal_value = static_cast<double>(primal);
  sol.dual_value = static_cast<double>(dual);
  sol.gap = static_cast<double>(dual - primal);
  sol.primal_infeasibility =
      static_cast<double>((apply_a(rp, it.x) - rp.b).cwiseAbs().maxCoeff());
  Blocks rd = apply_at(rp, it.y);
  for (size_t k = 0; k < rd.size(); ++k) rd[k] -= rp.c[k] + it.z[k];
  sol.dual_infeasibility = static_cast<double>(max_abs_blocks(rd));
  return sol;
}

std::string describe(const SdpSolution& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "gap %.3e, primal residual %.3e, dual residual %.3e, dual value %.6g",
                s.gap, s.primal_infeasibility, s.dual_infeasibility, s.dual_value);
  return buf;
}

}  // namespace

SdpSolution solve(const SdpProblem& problem, const SolverOptions& options) {
  problem.validate();
  if (!(options.tol > 0.0)) throw InputError("solver tolerance must be positive");
  const RealProblem rp = to_real(problem);
  const int m = problem.num_constraints();
  const size_t nb = rp.sizes.size();
  const Real n = rp.total_dim;

  // Starting point.
  Real norm_c = 0;
  Real norm_a_max = 0;
  Real xi = std::max<Real>(10, std::sqrt(n));
  for (const auto& blk : rp.c) norm_c = std::max(norm_c, blk.norm());
  for (int j = 0; j < m; ++j) {
    Real na = 0;
    for (size_t k = 0; k < nb; ++k) na += rp.a[j][k].squaredNorm();
    na = std::sqrt(na);
    norm_a_max = std::max(norm_a_max, na);
    xi = std::max(xi, n * (1 + std::abs(rp.b(j))) / (1 + na));
  }
  const Real eta = std::max({Real(10), std::sqrt(n), norm_c, norm_a_max});

  Iterate it;
  it.y = Vec::Zero(m);
  for (int s : rp.sizes) it.x.push_back(xi * Mat::Identity(s, s));
  bool feasible_start = false;
  if (options.initial_y) {
    if (options.initial_y->size() != m) {
      throw InputError("initial_y has the wrong length");
    }
    const Vec y0 = options.initial_y->cast<Real>();
    Blocks z0 = apply_at(rp, y0);
    for (size_t k = 0; k < nb; ++k) z0[k] -= rp.c[k];
    feasible_start = std::all_of(z0.begin(), z0.end(), is_pd);
    if (feasible_start) {
      it.y = y0;
      it.z = std::move(z0);
    }
  }
  if (!feasible_start) {
    for (int s : rp.sizes) it.z.push_back(eta * Mat::Identity(s, s));
  }

  // Gram matrix of the constraint operator, used to pull X back onto
  // A(X) = b when rounding lets the residual drift.
  Mat gram = Mat::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Real s = 0;
      for (size_t k = 0; k < nb; ++k) {
        if (rp.nonzero[i][k] && rp.nonzero[j][k]) {
          s += (rp.a[i][k].array() * rp.a[j][k].array()).sum();
        }
      }
      gram(i, j) = gram(j, i) = s;
    }
  }
  const Eigen::LDLT<Mat> gram_ldlt(gram);
  auto restore_primal_feasibility = [&](Blocks& x) {
    const Vec resid = rp.b - apply_a(rp, x);
    Blocks corr = apply_at(rp, gram_ldlt.solve(resid));
    Blocks trial(nb);
    for (size_t k = 0; k < nb; ++k) trial[k] = sym(x[k] + corr[k]);
    if (std::all_of(trial.begin(), trial.end(), is_pd)) x = std::move(trial);
  };

  SdpSolution best;
  double best_score = std::numeric_limits<double>::infinity();
  int stall = 0;

  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    SdpSolution current = pack_solution(problem, rp, it, iter);
    const double scale = std::max(1.0, std::abs(current.dual_value));
    const double score = std::max({std::abs(current.gap) / scale,
                                   current.primal_infeasibility / scale,
                                   current.dual_infeasibility});
    if (score < best_score) {
      best_score = score;
      best = current;
      stall = 0;
    } else {
      ++stall;
    }
    if (score <= options.tol) return current;
    if (iter == options.max_iterations) break;
    if (stall > 10) {
      throw ConvergenceError("SDP solver stalled (" + describe(best) + ")", best);
    }

    const Vec rp_vec = rp.b - apply_a(rp, it.x);
    Blocks rd = apply_at(rp, it.y);
    for (size_t k = 0; k < nb; ++k) rd[k] -= rp.c[k] + it.z[k];
    const Real mu = inner(it.x, it.z) / n;

    Blocks z_inv(nb);
    for (size_t k = 0; k < nb; ++k) {
      Eigen::LLT<Mat> llt(it.z[k]);
      if (llt.info() != Eigen::Success) {
        throw ConvergenceError("dual slack lost positive definiteness (" +
                                   describe(best) + ")",
                               best);
      }
      z_inv[k] = llt.solve(Mat::Identity(rp.sizes[k], rp.sizes[k]));
    }

    // Schur complement M_ij = sum_blocks Tr(A_i X A_j Z^{-1}).
    Mat schur = Mat::Zero(m, m);
    for (size_t k = 0; k < nb; ++k) {
      for (int i = 0; i < m; ++i) {
        if (!rp.nonzero[i][k]) continue;
        const Mat g = it.x[k] * rp.a[i][k] * z_inv[k];
        for (int j = i; j < m; ++j) {
          if (!rp.nonzero[j][k]) continue;
          schur(i, j) += (rp.a[j][k].array() * g.transpose().array()).sum();
        }
      }
    }
    schur.triangularView<Eigen::StrictlyLower>() = schur.transpose();
    const SchurSolver factor(schur);
    if (!factor.ok()) {
      throw ConvergenceError("Schur complement factorization failed (" +
                                 describe(best) + ")",
                             best);
    }

    Blocks x_rd_zinv(nb);
    for (size_t k = 0; k < nb; ++k) x_rd_zinv[k] = it.x[k] * rd[k] * z_inv[k];

    // Direction for the linearized complementarity X Z + dX Z + X dZ = X Z + Rc.
    auto direction = [&](const Blocks& rc, Blocks& dx, Vec& dy, Blocks& dz) {
      Blocks rhs_mat(nb);
      for (size_t k = 0; k < nb; ++k) {
        rhs_mat[k] = rc[k] * z_inv[k] - x_rd_zinv[k];
      }
      dy = factor.solve(apply_a(rp, rhs_mat) - rp_vec);
      dz = apply_at(rp, dy);
      dx.resize(nb);
      for (size_t k = 0; k < nb; ++k) {
        dz[k] += rd[k];
        dx[k] = sym((rc[k] - it.x[k] * dz[k]) * z_inv[k]);
      }
    };

    // Predictor.
    Blocks rc(nb);
    for (size_t k = 0; k < nb; ++k) rc[k] = -it.x[k] * it.z[k];
    Blocks dx_aff, dz_aff;
    Vec dy_aff;
    direction(rc, dx_aff, dy_aff, dz_aff);
    const Real ap_aff = std::min<Real>(1, max_step(it.x, dx_aff));
    const Real ad_aff = std::min<Real>(1, max_step(it.z, dz_aff));
    Real mu_aff = 0;
    for (size_t k = 0; k < nb; ++k) {
      mu_aff += ((it.x[k] + ap_aff * dx_aff[k]).array() *
                 (it.z[k] + ad_aff * dz_aff[k]).array())
                    .sum();
    }
    mu_aff /= n;
    const Real sigma =
        std::clamp<Real>(std::pow(std::max<Real>(mu_aff, 0) / mu, 3), 0, 1);

    // Corrector.
    for (size_t k = 0; k < nb; ++k) {
      rc[k] = sigma * mu * Mat::Identity(rp.sizes[k], rp.sizes[k]) -
              it.x[k] * it.z[k] - dx_aff[k] * dz_aff[k];
    }
    Blocks dx, dz;
    Vec dy;
    direction(rc, dx, dy, dz);

    const Real tau = 0.98L;
    Real ap = std::min<Real>(1, tau * max_step(it.x, dx));
    Real ad = std::min<Real>(1, tau * max_step(it.z, dz));
    if (ap < 1e-14L && ad < 1e-14L) {
      throw ConvergenceError("SDP solver step length collapsed (" +
                                 describe(best) + ")",
                             best);
    }
    // Rounding can push a boundary step just outside the cone; back off.
    auto advance = [&](const Blocks& cur, const Blocks& d, Real& alpha) {
      Blocks next(nb);
      for (int attempt = 0; attempt < 30; ++attempt) {
        for (size_t k = 0; k < nb; ++k) next[k] = sym(cur[k] + alpha * d[k]);
        if (std::all_of(next.begin(), next.end(), is_pd)) return next;
        alpha *= 0.8L;
      }
      alpha = 0;
      return cur;
    };
    it.x = advance(it.x, dx, ap);
    it.z = advance(it.z, dz, ad);
    it.y += ad * dy;
    restore_primal_feasibility(it.x);
  }
  throw ConvergenceError(
      "SDP solver reached the iteration limit (" + describe(best) + ")", best);
}

CertificateReport verify_certificate(const SdpProblem& problem,
                                     const BlockMatrix& x, const VectorXd& y,
                                     double tol) {
  problem.validate();
  if (y.size() != problem.num_constraints()) {
    throw InputError("verify_certificate: y has the wrong length");
  }
  if (x.blocks.size() != problem.block_sizes.size()) {
    throw InputError("verify_certificate: X has the wrong number of blocks");
  }
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    if (x.blocks[k].rows() != problem.block_sizes[k] ||
        x.blocks[k].cols() != problem.block_sizes[k]) {
      throw InputError("verify_certificate: X block has the wrong size");
    }
  }

  CertificateReport report;
  report.min_eig_x = std::numeric_limits<double>::infinity();
  for (const auto& blk : x.blocks) {
    report.min_eig_x =
        std::min(report.min_eig_x, min_eigenvalue(MatrixXcd(0.5 * (blk + blk.adjoint()))));
  }
  const BlockMatrix slack = problem.combine(y) - problem.c_matrix;
  report.min_eig_slack = std::numeric_limits<double>::infinity();
  for (const auto& blk : slack.blocks) {
    report.min_eig_slack = std::min(
        report.min_eig_slack, min_eigenvalue(MatrixXcd(0.5 * (blk + blk.adjoint()))));
  }
  for (int j = 0; j < problem.num_constraints(); ++j) {
    report.max_constraint_residual =
        std::max(report.max_constraint_residual,
                 std::abs(trace_inner(problem.basis_matrices[j], x) - problem.b(j)));
  }
  report.primal_value = trace_inner(problem.c_matrix, x);
  report.dual_value = y.dot(problem.b);
  report.gap = report.dual_value - report.primal_value;
  report.optimal = report.min_eig_x >= -tol && report.min_eig_slack >= -tol &&
                   report.max_constraint_residual <= tol &&
                   std::abs(report.gap) <= tol;
  return report;
}

}  // namespace holevo
