// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sdp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "ncagm/sdp/kernels.hpp"

namespace ncagm::sdp {

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::max_iterations: return "max_iterations";
    case SolveStatus::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

// Iterates are carried in extended precision. Near the optimum X and Z are
// both badly conditioned and X Z loses most of its digits in binary64, which
// stalls the method just short of a 1e-8 gap.
using Real = long double;
using Mat = kernels::Matrix<Real>;
using Vec = kernels::Vector<Real>;
using Blocks = std::vector<Mat>;

constexpr Real kInfeasibilityTolerance = 1e-8;

bool is_dense(const Block& b) { return b.kind == BlockKind::dense; }

Blocks zeros(const std::vector<Block>& layout) {
  Blocks out;
  out.reserve(layout.size());
  for (const Block& b : layout) out.push_back(is_dense(b) ? Mat::Zero(b.size, b.size) : Mat::Zero(b.size, 1));
  return out;
}

Blocks scaled_identity(const std::vector<Block>& layout, Real alpha) {
  Blocks out;
  out.reserve(layout.size());
  for (const Block& b : layout) {
    out.push_back(is_dense(b) ? Mat(alpha * Mat::Identity(b.size, b.size)) : Mat::Constant(b.size, 1, alpha));
  }
  return out;
}

Real inner(const Blocks& u, const Blocks& v) {
  Real s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k].cwiseProduct(v[k]).sum();
  return s;
}

Real norm(const Blocks& u) { return std::sqrt(inner(u, u)); }

void axpy(Blocks& y, Real a, const Blocks& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

Blocks to_blocks(const std::vector<Block>& layout, const SparseSymmetric& mat) {
  Blocks out = zeros(layout);
  for (const Entry& e : mat.entries()) {
    if (is_dense(layout[e.block])) {
      out[e.block](e.row, e.col) += e.value;
      if (e.row != e.col) out[e.block](e.col, e.row) += e.value;
    } else {
      out[e.block](e.row, 0) += e.value;
    }
  }
  return out;
}

std::vector<Eigen::MatrixXd> to_double(const Blocks& blocks) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(blocks.size());
  for (const Mat& b : blocks) out.push_back(b.cast<double>());
  return out;
}

class InteriorPoint {
 public:
  InteriorPoint(const SdpProblem& problem, const SolverOptions& options)
      : problem_(problem), options_(options), layout_(problem.blocks) {}

  Solution run();

 private:
  struct Iterate {
    Blocks x;
    Blocks z;
    Vec y;
  };

  void warn(const std::string& msg) const {
    if (options_.log) options_.log(msg);
  }
  bool presolve(Solution& sol);
  Vec apply_a(const Blocks& w) const;
  Blocks apply_at(const Vec& y) const;
  Mat schur(const Blocks& x, const Blocks& zinv) const;
  static Real max_step(const std::vector<Block>& layout, const Blocks& v, const Blocks& dv);
  void finish(Solution& sol, const Iterate& it) const;

  const SdpProblem& problem_;
  const SolverOptions& options_;
  const std::vector<Block>& layout_;
  std::vector<int> kept_;
  std::vector<kernels::BlockRows<Real>> rows_;
  // Kept rows are normalized to unit Frobenius norm; b_ is the scaled
  // right-hand side, b_orig_ the input one.
  Vec row_scale_;
  Vec b_;
  Vec b_orig_;
  // Factor of tr(A_i A_j) over the scaled kept rows, used to project search
  // directions back onto A(dX) = Rp.
  Eigen::LLT<Mat> gram_factor_;
};

Vec InteriorPoint::apply_a(const Blocks& w) const {
  Vec out = Vec::Zero(static_cast<Eigen::Index>(kept_.size()));
  for (std::size_t blk = 0; blk < rows_.size(); ++blk) {
    const auto& br = rows_[blk];
    const auto& wb = w[blk];
    for (std::size_t p = 0; p < br.rows.size(); ++p) {
      Real s = 0;
      for (std::size_t k = br.start[p]; k < br.start[p + 1]; ++k) {
        const auto& e = br.entries[k];
        if (br.kind == BlockKind::diagonal) {
          s += e.value * wb(e.row, 0);
        } else {
          s += e.row == e.col ? e.value * wb(e.row, e.row) : e.value * (wb(e.row, e.col) + wb(e.col, e.row));
        }
      }
      out[br.rows[p]] += s;
    }
  }
  return out;
}

Blocks InteriorPoint::apply_at(const Vec& y) const {
  Blocks out = zeros(layout_);
  for (std::size_t blk = 0; blk < rows_.size(); ++blk) {
    const auto& br = rows_[blk];
    auto& ob = out[blk];
    for (std::size_t p = 0; p < br.rows.size(); ++p) {
      const Real yi = y[br.rows[p]];
      for (std::size_t k = br.start[p]; k < br.start[p + 1]; ++k) {
        const auto& e = br.entries[k];
        if (br.kind == BlockKind::diagonal) {
          ob(e.row, 0) += yi * e.value;
        } else {
          ob(e.row, e.col) += yi * e.value;
          if (e.row != e.col) ob(e.col, e.row) += yi * e.value;
        }
      }
    }
  }
  return out;
}

Mat InteriorPoint::schur(const Blocks& x, const Blocks& zinv) const {
  const auto m = static_cast<Eigen::Index>(kept_.size());
  Mat out = Mat::Zero(m, m);
  for (std::size_t blk = 0; blk < rows_.size(); ++blk) {
    const auto& br = rows_[blk];
    if (br.rows.empty()) continue;
    if (br.kind == BlockKind::diagonal) {
      kernels::schur_diagonal<Real>(br, x[blk].col(0), zinv[blk].col(0), out);
    } else if (options_.parallel) {
      kernels::schur_dense_parallel(br, x[blk], zinv[blk], out);
    } else {
      kernels::schur_dense_serial(br, x[blk], zinv[blk], out);
    }
  }
  out.triangularView<Eigen::StrictlyLower>() = out.transpose();
  return out;
}

Real InteriorPoint::max_step(const std::vector<Block>& layout, const Blocks& v, const Blocks& dv) {
  Real alpha = std::numeric_limits<Real>::infinity();
  for (std::size_t blk = 0; blk < layout.size(); ++blk) {
    if (is_dense(layout[blk])) {
      Eigen::LLT<Mat> llt(v[blk]);
      if (llt.info() != Eigen::Success) return 0;
      Mat w = llt.matrixL().solve(dv[blk]);
      w = llt.matrixL().solve(Mat(w.transpose()));
      w = Real(0.5) * (w + w.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Mat> eig(w, Eigen::EigenvaluesOnly);
      const Real lo = eig.eigenvalues()(0);
      if (lo < 0) alpha = std::min(alpha, -1 / lo);
    } else {
      for (Eigen::Index r = 0; r < v[blk].rows(); ++r) {
        if (dv[blk](r, 0) < 0) alpha = std::min(alpha, -v[blk](r, 0) / dv[blk](r, 0));
      }
    }
  }
  return alpha;
}

bool InteriorPoint::presolve(Solution& sol) {
  const auto& cons = problem_.constraints;
  std::vector<int> candidates;
  std::map<std::vector<Entry>, int> seen;
  auto rhs_close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b)); };

  for (std::size_t k = 0; k < cons.size(); ++k) {
    const auto& entries = cons[k].matrix.entries();
    if (entries.empty()) {
      if (!rhs_close(cons[k].rhs, 0.0)) {
        warn("constraint " + std::to_string(k + 1) + " has empty data and nonzero right-hand side");
        return false;
      }
      sol.dropped_constraints.push_back(static_cast<int>(k));
      continue;
    }
    auto [it, inserted] = seen.try_emplace(entries, static_cast<int>(k));
    if (!inserted) {
      if (!rhs_close(cons[k].rhs, cons[static_cast<std::size_t>(it->second)].rhs)) {
        warn("constraints " + std::to_string(it->second + 1) + " and " + std::to_string(k + 1) +
             " have identical data but different right-hand sides");
        return false;
      }
      sol.dropped_constraints.push_back(static_cast<int>(k));
      continue;
    }
    candidates.push_back(static_cast<int>(k));
  }

  // Remaining dependencies show up as vanishing pivots of the Gram matrix
  // tr(A_i A_j), which is the Schur complement at X = Z = I.
  std::vector<const SparseSymmetric*> mats;
  for (int k : candidates) mats.push_back(&cons[static_cast<std::size_t>(k)].matrix);
  const auto cand_rows = kernels::split_by_block<Real>(layout_, mats);
  const auto m = static_cast<Eigen::Index>(candidates.size());
  Mat gram = Mat::Zero(m, m);
  for (const auto& br : cand_rows) {
    if (br.rows.empty()) continue;
    if (br.kind == BlockKind::diagonal) {
      const Vec ones = Vec::Ones(br.size);
      kernels::schur_diagonal(br, ones, ones, gram);
    } else {
      const Mat eye = Mat::Identity(br.size, br.size);
      if (options_.parallel) {
        kernels::schur_dense_parallel(br, eye, eye, gram);
      } else {
        kernels::schur_dense_serial(br, eye, eye, gram);
      }
    }
  }
  gram.triangularView<Eigen::StrictlyLower>() = gram.transpose();
  const Real dep_tol = options_.dependency_tolerance;
  const auto chol = options_.parallel ? kernels::pivoted_cholesky_parallel(gram, dep_tol)
                                      : kernels::pivoted_cholesky_serial(gram, dep_tol);

  const Eigen::Index rank = chol.rank;
  std::vector<int> independent;
  for (Eigen::Index k = 0; k < rank; ++k) independent.push_back(candidates[chol.perm[static_cast<std::size_t>(k)]]);
  if (rank < m) {
    const auto lower = chol.lower.topLeftCorner(rank, rank).triangularView<Eigen::Lower>();
    Vec b_ind(rank);
    Vec coupling(rank);
    for (Eigen::Index k = 0; k < rank; ++k) b_ind[k] = cons[static_cast<std::size_t>(independent[k])].rhs;
    for (Eigen::Index k = rank; k < m; ++k) {
      const Eigen::Index orig = chol.perm[static_cast<std::size_t>(k)];
      for (Eigen::Index t = 0; t < rank; ++t) coupling[t] = gram(chol.perm[static_cast<std::size_t>(t)], orig);
      Vec c = lower.solve(coupling);
      c = lower.transpose().solve(c);
      const Real bi = cons[static_cast<std::size_t>(candidates[orig])].rhs;
      const Real predicted = c.dot(b_ind);
      const Real scale = 1 + std::abs(bi) + c.cwiseAbs().dot(b_ind.cwiseAbs());
      if (std::abs(bi - predicted) > Real(1e-7) * scale) {
        warn("dependent constraint " + std::to_string(candidates[orig] + 1) + " is inconsistent with the others");
        return false;
      }
      sol.dropped_constraints.push_back(candidates[orig]);
    }
  }
  std::sort(sol.dropped_constraints.begin(), sol.dropped_constraints.end());
  if (!sol.dropped_constraints.empty()) {
    warn("dropped " + std::to_string(sol.dropped_constraints.size()) + " linearly dependent constraint(s)");
  }

  std::vector<Eigen::Index> gram_pos(cons.size(), -1);
  for (Eigen::Index k = 0; k < m; ++k) gram_pos[static_cast<std::size_t>(candidates[static_cast<std::size_t>(k)])] = k;
  std::sort(independent.begin(), independent.end());
  kept_ = std::move(independent);
  const auto kept = static_cast<Eigen::Index>(kept_.size());

  mats.clear();
  for (int k : kept_) mats.push_back(&cons[static_cast<std::size_t>(k)].matrix);
  rows_ = kernels::split_by_block<Real>(layout_, mats);

  Mat kept_gram(kept, kept);
  for (Eigen::Index i = 0; i < kept; ++i) {
    const Eigen::Index gi = gram_pos[static_cast<std::size_t>(kept_[static_cast<std::size_t>(i)])];
    for (Eigen::Index j = 0; j < kept; ++j) {
      kept_gram(i, j) = gram(gi, gram_pos[static_cast<std::size_t>(kept_[static_cast<std::size_t>(j)])]);
    }
  }
  row_scale_ = kept_gram.diagonal().cwiseSqrt().cwiseInverse();
  for (auto& br : rows_) {
    for (std::size_t p = 0; p < br.rows.size(); ++p) {
      const Real sc = row_scale_[br.rows[p]];
      for (std::size_t k = br.start[p]; k < br.start[p + 1]; ++k) br.entries[k].value *= sc;
    }
  }
  b_orig_.resize(kept);
  for (Eigen::Index k = 0; k < kept; ++k) b_orig_[k] = cons[static_cast<std::size_t>(kept_[static_cast<std::size_t>(k)])].rhs;
  b_ = b_orig_.cwiseProduct(row_scale_);
  gram_factor_.compute(row_scale_.asDiagonal() * kept_gram * row_scale_.asDiagonal());
  return true;
}

void InteriorPoint::finish(Solution& sol, const Iterate& it) const {
  sol.primal_blocks = to_double(it.x);
  sol.dual_slack = to_double(it.z);
  sol.dual = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(problem_.constraints.size()));
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    sol.dual[kept_[k]] = static_cast<double>(it.y[i] * row_scale_[i]);
  }
}

Solution InteriorPoint::run() {
  problem_.validate();
  Solution sol;
  const Blocks c = to_blocks(layout_, problem_.objective);

  if (!presolve(sol)) {
    sol.status = SolveStatus::infeasible;
    finish(sol, {zeros(layout_), zeros(layout_), Vec::Zero(static_cast<Eigen::Index>(kept_.size()))});
    return sol;
  }

  const auto m = static_cast<Eigen::Index>(kept_.size());
  const auto n_total = static_cast<Real>(problem_.total_dimension());
  double data_norm = problem_.objective.frobenius_norm();
  for (int k : kept_) data_norm = std::max(data_norm, problem_.constraints[static_cast<std::size_t>(k)].matrix.frobenius_norm());
  const Real alpha0 = 1 + (m > 0 ? b_orig_.cwiseAbs().maxCoeff() : Real(0)) + data_norm;
  const Real b_norm = b_orig_.norm();
  const Real c_norm = norm(c);
  const Real tol = options_.tolerance;

  Iterate cur{scaled_identity(layout_, alpha0), scaled_identity(layout_, alpha0), Vec::Zero(m)};
  Blocks& x = cur.x;
  Blocks& z = cur.z;
  Vec& y = cur.y;

  // The iterate with the smallest max(gap, pinf, dinf) is returned when the
  // method stops short of the tolerance.
  Iterate best = cur;
  Real best_merit = std::numeric_limits<Real>::infinity();
  Solution best_report;

  int stalled = 0;
  for (int iter = 0;; ++iter) {
    const Vec rp = b_ - apply_a(x);
    Blocks rd = c;
    axpy(rd, -1, z);
    axpy(rd, -1, apply_at(y));

    const Real pobj = inner(c, x);
    const Real dobj = b_.dot(y);
    const Real gap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
    const Real pinf = rp.cwiseQuotient(row_scale_).norm() / (1 + b_norm);
    const Real dinf = norm(rd) / (1 + c_norm);
    sol.objective_primal = static_cast<double>(pobj);
    sol.objective_dual = static_cast<double>(dobj);
    sol.gap = static_cast<double>(gap);
    sol.primal_infeasibility = static_cast<double>(pinf);
    sol.dual_infeasibility = static_cast<double>(dinf);
    sol.iterations = iter;

    if (options_.verbose && options_.log) {
      std::ostringstream os;
      os.precision(10);
      os << "iter " << iter << "  pobj " << sol.objective_primal << "  dobj " << sol.objective_dual << "  gap "
         << sol.gap << "  pinf " << sol.primal_infeasibility << "  dinf " << sol.dual_infeasibility;
      options_.log(os.str());
    }

    if (!std::isfinite(pobj) || !std::isfinite(dobj)) {
      warn("non-finite objective");
      sol.status = SolveStatus::numerical_failure;
      break;
    }
    if (gap <= tol && pinf <= tol && dinf <= tol) {
      sol.status = SolveStatus::optimal;
      break;
    }
    const Real merit = std::max({gap, pinf, dinf});
    if (merit < best_merit) {
      best_merit = merit;
      best = cur;
      best_report = sol;
    }
    if (dobj > 0) {
      // A dual ray: Z + A^T y stays bounded while b^T y grows.
      Blocks ray = c;
      axpy(ray, -1, rd);
      if (norm(ray) / dobj < kInfeasibilityTolerance) {
        sol.status = SolveStatus::infeasible;
        break;
      }
    }
    if (pobj < 0 && (b_ - rp).norm() / -pobj < kInfeasibilityTolerance) {
      sol.status = SolveStatus::unbounded;
      break;
    }
    if (iter >= options_.max_iterations) {
      sol.status = SolveStatus::max_iterations;
      break;
    }

    const Real mu = inner(x, z) / n_total;

    Blocks zinv = zeros(layout_);
    bool ok = true;
    for (std::size_t blk = 0; blk < layout_.size() && ok; ++blk) {
      if (is_dense(layout_[blk])) {
        Eigen::LLT<Mat> llt(z[blk]);
        ok = llt.info() == Eigen::Success;
        zinv[blk] = llt.solve(Mat::Identity(layout_[blk].size, layout_[blk].size));
        zinv[blk] = Real(0.5) * (zinv[blk] + zinv[blk].transpose()).eval();
      } else {
        zinv[blk] = z[blk].cwiseInverse();
      }
    }
    if (!ok) {
      warn("dual slack lost definiteness");
      sol.status = SolveStatus::numerical_failure;
      break;
    }

    const Mat schur_matrix = schur(x, zinv);
    // Close to the optimum M can be semidefinite to working precision; the
    // pivoted LDL^T then treats the vanishing pivots as zero.
    Eigen::LLT<Mat> llt(schur_matrix);
    Eigen::LDLT<Mat> ldlt;
    const bool use_llt = llt.info() == Eigen::Success;
    if (!use_llt) ldlt.compute(schur_matrix);
    auto schur_solve = [&](const Vec& rhs) {
      Vec v = use_llt ? Vec(llt.solve(rhs)) : Vec(ldlt.solve(rhs));
      for (int refine = 0; refine < 2; ++refine) {
        const Vec r = rhs - schur_matrix * v;
        v += use_llt ? Vec(llt.solve(r)) : Vec(ldlt.solve(r));
      }
      return v;
    };

    // X Rd Z^{-1}, shared by predictor and corrector.
    Blocks x_rd_zinv = zeros(layout_);
    for (std::size_t blk = 0; blk < layout_.size(); ++blk) {
      x_rd_zinv[blk] = is_dense(layout_[blk]) ? Mat(x[blk] * rd[blk] * zinv[blk])
                                              : Mat(x[blk].cwiseProduct(rd[blk]).cwiseProduct(zinv[blk]));
    }
    const Vec a_xrdzinv = apply_a(x_rd_zinv);
    const Vec a_zinv = apply_a(zinv);

    // Direction towards mu_target with optional second-order term K = dXp dZp.
    auto direction = [&](Real mu_target, const Blocks* second, Blocks& dx, Blocks& dz, Vec& dy) {
      Vec rhs = b_ - mu_target * a_zinv + a_xrdzinv;
      Blocks second_zinv;
      if (second) {
        second_zinv = zeros(layout_);
        for (std::size_t blk = 0; blk < layout_.size(); ++blk) {
          second_zinv[blk] = is_dense(layout_[blk]) ? Mat((*second)[blk] * zinv[blk])
                                                    : Mat((*second)[blk].cwiseProduct(zinv[blk]));
        }
        rhs += apply_a(second_zinv);
      }
      dy = schur_solve(rhs);
      dz = rd;
      axpy(dz, -1, apply_at(dy));
      dx = zeros(layout_);
      for (std::size_t blk = 0; blk < layout_.size(); ++blk) {
        if (is_dense(layout_[blk])) {
          Mat t = mu_target * zinv[blk] - x[blk] - x[blk] * dz[blk] * zinv[blk];
          if (second) t -= second_zinv[blk];
          dx[blk] = Real(0.5) * (t + t.transpose());
        } else {
          dx[blk] = mu_target * zinv[blk] - x[blk] - x[blk].cwiseProduct(dz[blk]).cwiseProduct(zinv[blk]);
          if (second) dx[blk] -= second_zinv[blk];
        }
      }
      // Restore A(dX) = Rp exactly; the product X dZ Z^{-1} is formed with
      // an error that grows with the conditioning of Z.
      axpy(dx, 1, apply_at(gram_factor_.solve(rp - apply_a(dx))));
    };

    Blocks dx, dz;
    Vec dy;
    direction(0, nullptr, dx, dz, dy);
    const Real ap_aff = std::min<Real>(1, max_step(layout_, x, dx));
    const Real ad_aff = std::min<Real>(1, max_step(layout_, z, dz));
    Blocks x_aff = x;
    Blocks z_aff = z;
    axpy(x_aff, ap_aff, dx);
    axpy(z_aff, ad_aff, dz);
    const Real mu_aff = inner(x_aff, z_aff) / n_total;
    const Real sigma = std::clamp<Real>(std::pow(mu_aff / mu, Real(3)), 0, 1);

    Blocks second = zeros(layout_);
    for (std::size_t blk = 0; blk < layout_.size(); ++blk) {
      second[blk] = is_dense(layout_[blk]) ? Mat(dx[blk] * dz[blk]) : Mat(dx[blk].cwiseProduct(dz[blk]));
    }
    direction(sigma * mu, &second, dx, dz, dy);

    const Real gamma = options_.step_fraction;
    const Real ap = std::min<Real>(1, gamma * max_step(layout_, x, dx));
    const Real ad = std::min<Real>(1, gamma * max_step(layout_, z, dz));
    if (!std::isfinite(ap) || !std::isfinite(ad) || !dy.allFinite()) {
      warn("non-finite step");
      sol.status = SolveStatus::numerical_failure;
      break;
    }
    stalled = (ap < 1e-9 && ad < 1e-9) ? stalled + 1 : 0;
    if (stalled >= 3) {
      warn("step lengths stalled");
      sol.status = SolveStatus::numerical_failure;
      break;
    }
    axpy(x, ap, dx);
    axpy(z, ad, dz);
    y += ad * dy;
  }

  if (sol.status == SolveStatus::optimal || sol.status == SolveStatus::infeasible ||
      sol.status == SolveStatus::unbounded || !std::isfinite(best_merit)) {
    finish(sol, cur);
    return sol;
  }
  best_report.status = sol.status;
  best_report.iterations = sol.iterations;
  best_report.dropped_constraints = std::move(sol.dropped_constraints);
  finish(best_report, best);
  return best_report;
}

}  // namespace

Solution solve(const SdpProblem& problem, const SolverOptions& options) {
  InteriorPoint ipm(problem, options);
  return ipm.run();
}

}  // namespace ncagm::sdp
