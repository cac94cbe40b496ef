// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "ncagm/sdp/farkas.hpp"
#include "ncagm/sdp/problem.hpp"
#include "ncagm/sos/basis.hpp"

namespace ncagm::sos {

/// A Gram-matrix position: block in 1..n+1 and 0-based row <= col.
struct GramCoordinate {
  int block = 1;
  int row = 0;
  int col = 0;

  friend bool operator==(const GramCoordinate&, const GramCoordinate&) = default;
};

/// Partition of the Gram positions of blocks 1..n+1 into orbits of the
/// simultaneous S_n action (letters relabelled inside basis words, blocks
/// 1..n permuted, block n+1 fixed).
class SymmetryOrbits {
 public:
  SymmetryOrbits(int n, int d);

  int alphabet() const noexcept { return n_; }
  std::size_t basis_size() const noexcept { return q_; }
  std::size_t num_orbits() const noexcept { return representatives_.size(); }

  /// Orbit id of Y_block[row, col]; symmetric in (row, col).
  int orbit_of(int block, int row, int col) const;

  /// Smallest coordinate of each orbit, indexed by orbit id.
  const std::vector<GramCoordinate>& representatives() const noexcept { return representatives_; }

 private:
  std::size_t slot(int block, int row, int col) const;

  int n_;
  std::size_t q_;
  std::vector<int> orbit_;
  std::vector<GramCoordinate> representatives_;
};

/// Symmetry-reduced form of an assembled lambda-problem.
///
/// The reduced SDP keeps one Gram block for letters (standing for Y_1) and
/// one for l_{n+1}; the full Gram blocks are recovered by averaging over the
/// group (Reynolds operator), so every reduced feasible point lifts to a full
/// feasible point with the same lambda, and group-averaging a full optimum
/// gives a reduced one. Constraints are merged per orbit of words under
/// letter relabelling and reversal, since those rows coincide after
/// averaging.
struct SymmetryReduction {
  sdp::SdpProblem reduced;
  SymmetryOrbits orbits;
  MonomialBasis basis;
  /// Full-problem constraint indices merged into each reduced constraint.
  std::vector<std::vector<std::size_t>> constraint_classes;

  /// Number of free Gram variables after tying entries within orbits.
  std::size_t free_variables() const noexcept { return orbits.num_orbits(); }

  /// Full block list (lambda, Y_1..Y_{n+1}) from reduced blocks (lambda, Y_1, Y_{n+1}).
  std::vector<Eigen::MatrixXd> lift_primal(const std::vector<Eigen::MatrixXd>& reduced_blocks) const;

  /// Full constraint multipliers from reduced ones; each class shares its
  /// multiplier evenly so that sum_k y_k A_k keeps its group-averaged value.
  Eigen::VectorXd lift_dual(const Eigen::VectorXd& reduced_dual) const;
};

/// Checks the data of an assembled (unreduced) lambda-problem against one
/// transposition and one n-cycle. Throws InvarianceError on mismatch and
/// ParameterError if the layout is not that of assemble_sdp.
void check_invariance(const sdp::SdpProblem& problem);

/// Runs check_invariance, then builds the reduced problem.
SymmetryReduction symmetry_reduce(const sdp::SdpProblem& problem);

/// extract_farkas on the reduced problem, with the multipliers lifted back
/// to the full constraint set and checked there. The returned certificate
/// is indexed like pinned_problem(problem, lambda_target).
std::optional<sdp::FarkasCertificate> extract_farkas_symmetric(const sdp::SdpProblem& problem,
                                                               double lambda_target,
                                                               const sdp::FarkasOptions& options = {});

}  // namespace ncagm::sos
