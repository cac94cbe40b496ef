// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sos/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncagm/errors.hpp"
#include "ncagm/poly/permutation.hpp"

namespace ncagm::sos {
namespace {

/// Image of every basis position under a letter relabelling.
std::vector<int> basis_action(const MonomialBasis& basis, const poly::Permutation& sigma) {
  std::vector<int> image(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    image[a] = static_cast<int>(basis.index_of(sigma.apply(basis.words[a])));
  }
  return image;
}

int block_action(int block, int n, const poly::Permutation& sigma) {
  return block >= 1 && block <= n ? sigma(block) : block;
}

std::vector<poly::Permutation> generators(int n) {
  std::vector<poly::Permutation> gens;
  if (n >= 2) gens.push_back(poly::Permutation::transposition(n, 1, 2));
  if (n >= 3) gens.push_back(poly::Permutation::cycle(n));
  return gens;
}

/// Letters renamed by order of first appearance, e.g. 3 1 3 -> 1 2 1.
std::vector<int> pattern(std::span<const int> letters) {
  std::map<int, int> rename;
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    auto [it, _] = rename.try_emplace(l, static_cast<int>(rename.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

/// Key shared by all words in one orbit of relabelling plus reversal.
std::vector<int> word_class_key(const poly::Word& w) {
  auto fwd = pattern(w.letters());
  auto rev = pattern(w.transpose().letters());
  return std::min(fwd, rev);
}

const sdp::ProblemInfo& checked_layout(const sdp::SdpProblem& problem) {
  if (!problem.info || problem.info->reduced) {
    throw ParameterError("symmetry reduction needs an unreduced problem from assemble_sdp");
  }
  const auto& info = *problem.info;
  const int n = info.n;
  const int q = static_cast<int>(word_count(n, info.d));
  bool ok = static_cast<int>(problem.blocks.size()) == n + 2 && problem.blocks[0].size == 1 &&
            problem.constraints.size() == word_count(n, 2 * info.d + 1);
  for (std::size_t k = 1; ok && k < problem.blocks.size(); ++k) {
    ok = problem.blocks[k].size == q && problem.blocks[k].kind == sdp::BlockKind::dense;
  }
  if (!ok) throw ParameterError("problem layout does not match assemble_sdp");
  return info;
}

sdp::SparseSymmetric act(const sdp::SparseSymmetric& mat, int n, const poly::Permutation& sigma,
                         const std::vector<int>& image) {
  sdp::SparseSymmetric out;
  for (const auto& e : mat.entries()) {
    if (e.block == 0) {
      out.add(0, e.row, e.col, e.value);
    } else {
      out.add(block_action(e.block, n, sigma), image[e.row], image[e.col], e.value);
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace

SymmetryOrbits::SymmetryOrbits(int n, int d) : n_(n), q_(word_count(n, d)) {
  const MonomialBasis basis = monomial_basis(n, d);
  const std::size_t total = static_cast<std::size_t>(n + 1) * q_ * q_;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  for (int blk = 1; blk <= n + 1; ++blk) {
    for (std::size_t r = 0; r < q_; ++r) {
      for (std::size_t c = r + 1; c < q_; ++c) {
        unite(slot(blk, static_cast<int>(r), static_cast<int>(c)),
              slot(blk, static_cast<int>(c), static_cast<int>(r)));
      }
    }
  }
  for (const auto& sigma : generators(n)) {
    const auto image = basis_action(basis, sigma);
    for (int blk = 1; blk <= n + 1; ++blk) {
      for (std::size_t r = 0; r < q_; ++r) {
        for (std::size_t c = 0; c < q_; ++c) {
          unite(slot(blk, static_cast<int>(r), static_cast<int>(c)),
                slot(block_action(blk, n, sigma), image[r], image[c]));
        }
      }
    }
  }

  orbit_.assign(total, -1);
  std::vector<int> root_id(total, -1);
  for (int blk = 1; blk <= n + 1; ++blk) {
    for (std::size_t r = 0; r < q_; ++r) {
      for (std::size_t c = r; c < q_; ++c) {
        const std::size_t s = slot(blk, static_cast<int>(r), static_cast<int>(c));
        const std::size_t root = find(s);
        if (root_id[root] < 0) {
          root_id[root] = static_cast<int>(representatives_.size());
          representatives_.push_back({blk, static_cast<int>(r), static_cast<int>(c)});
        }
      }
    }
  }
  for (std::size_t s = 0; s < total; ++s) orbit_[s] = root_id[find(s)];
}

std::size_t SymmetryOrbits::slot(int block, int row, int col) const {
  return (static_cast<std::size_t>(block - 1) * q_ + static_cast<std::size_t>(row)) * q_ +
         static_cast<std::size_t>(col);
}

int SymmetryOrbits::orbit_of(int block, int row, int col) const {
  if (block < 1 || block > n_ + 1 || row < 0 || col < 0 || static_cast<std::size_t>(row) >= q_ ||
      static_cast<std::size_t>(col) >= q_) {
    throw ParameterError("Gram coordinate out of range");
  }
  return orbit_[slot(block, row, col)];
}

void check_invariance(const sdp::SdpProblem& problem) {
  const auto& info = checked_layout(problem);
  const int n = info.n;
  const MonomialBasis basis = monomial_basis(n, info.d);
  for (const auto& sigma : generators(n)) {
    const auto image = basis_action(basis, sigma);
    if (!(act(problem.objective, n, sigma, image) == problem.objective)) {
      throw InvarianceError("objective is not invariant under the letter group");
    }
    for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
      const std::size_t target = word_index(sigma.apply(word_at(k, n)), n);
      const auto& src = problem.constraints[k];
      const auto& dst = problem.constraints[target];
      if (src.rhs != dst.rhs || !(act(src.matrix, n, sigma, image) == dst.matrix)) {
        throw InvarianceError("constraint for word " + word_at(k, n).to_string() +
                              " is not mapped onto the constraint of its relabelled word");
      }
    }
  }
}

SymmetryReduction symmetry_reduce(const sdp::SdpProblem& problem) {
  check_invariance(problem);
  const auto& info = *problem.info;
  const int n = info.n;

  SymmetryReduction out{sdp::SdpProblem{}, SymmetryOrbits(n, info.d), monomial_basis(n, info.d), {}};
  const int q = static_cast<int>(out.basis.size());

  std::map<std::vector<int>, std::size_t> class_of_key;
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    auto key = word_class_key(word_at(k, n));
    auto [it, inserted] = class_of_key.try_emplace(std::move(key), out.constraint_classes.size());
    if (inserted) out.constraint_classes.emplace_back();
    out.constraint_classes[it->second].push_back(k);
  }

  sdp::SdpProblem& red = out.reduced;
  red.info = info;
  red.info->reduced = true;
  red.blocks = {{1, sdp::BlockKind::dense}, {q, sdp::BlockKind::dense}, {q, sdp::BlockKind::dense}};
  red.objective = problem.objective;
  for (const auto& members : out.constraint_classes) {
    const double size = static_cast<double>(members.size());
    sdp::Constraint row;
    row.rhs = problem.constraints[members.front()].rhs;
    for (std::size_t k : members) {
      for (const auto& e : problem.constraints[k].matrix.entries()) {
        if (e.block == 0) {
          row.matrix.add(0, e.row, e.col, e.value / size);
        } else if (e.block == 1) {
          row.matrix.add(1, e.row, e.col, static_cast<double>(n) * e.value / size);
        } else if (e.block == n + 1) {
          row.matrix.add(2, e.row, e.col, e.value / size);
        }
      }
    }
    row.matrix.canonicalize();
    red.constraints.push_back(std::move(row));
  }
  return out;
}

std::vector<Eigen::MatrixXd> SymmetryReduction::lift_primal(
    const std::vector<Eigen::MatrixXd>& reduced_blocks) const {
  if (reduced_blocks.size() != 3) throw ParameterError("expected three reduced blocks");
  const int n = basis.alphabet;
  const auto q = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::MatrixXd> full(static_cast<std::size_t>(n) + 2, Eigen::MatrixXd::Zero(q, q));
  full[0] = reduced_blocks[0];
  const auto perms = poly::Permutation::all(n);
  const double stabilizer = static_cast<double>(perms.size()) / n;
  for (const auto& sigma : perms) {
    const auto image = basis_action(basis, sigma);
    for (Eigen::Index a = 0; a < q; ++a) {
      for (Eigen::Index b = 0; b < q; ++b) {
        full[sigma(1)](image[a], image[b]) += reduced_blocks[1](a, b) / stabilizer;
        full[n + 1](image[a], image[b]) +=
            reduced_blocks[2](a, b) / static_cast<double>(perms.size());
      }
    }
  }
  return full;
}

Eigen::VectorXd SymmetryReduction::lift_dual(const Eigen::VectorXd& reduced_dual) const {
  if (reduced_dual.size() != static_cast<Eigen::Index>(constraint_classes.size())) {
    throw ParameterError("reduced dual has the wrong length");
  }
  std::size_t total = 0;
  for (const auto& c : constraint_classes) total += c.size();
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t c = 0; c < constraint_classes.size(); ++c) {
    const double share = reduced_dual[static_cast<Eigen::Index>(c)] /
                         static_cast<double>(constraint_classes[c].size());
    for (std::size_t k : constraint_classes[c]) full[static_cast<Eigen::Index>(k)] = share;
  }
  return full;
}

std::optional<sdp::FarkasCertificate> extract_farkas_symmetric(const sdp::SdpProblem& problem,
                                                               double lambda_target,
                                                               const sdp::FarkasOptions& options) {
  const SymmetryReduction red = symmetry_reduce(problem);
  const auto reduced = sdp::extract_farkas(red.reduced, lambda_target, options);
  if (!reduced) return std::nullopt;
  const Eigen::Index rows = static_cast<Eigen::Index>(red.constraint_classes.size());
  const Eigen::VectorXd tail = red.lift_dual(reduced->y.tail(rows));

  const sdp::SdpProblem pinned = sdp::pinned_problem(problem, lambda_target);
  sdp::FarkasCertificate cert;
  cert.lambda_target = lambda_target;
  cert.y.resize(tail.size() + 1);
  cert.y[0] = reduced->y[0];
  cert.y.tail(tail.size()) = tail;
  cert.margin = sdp::farkas_margin(pinned, cert.y);
  cert.psd_defect = sdp::weighted_sum_max_eigenvalue(pinned, cert.y);
  if (!(cert.margin > options.margin_threshold)) return std::nullopt;
  if (cert.psd_defect > options.defect_tolerance * sdp::farkas_scale(pinned, cert.y)) {
    if (options.solver.log) options.solver.log("lifted certificate rejected: PSD defect above tolerance");
    return std::nullopt;
  }
  return cert;
}

}  // namespace ncagm::sos
