//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "molplex/qubo.hpp"

namespace molplex {

inline constexpr int kDefaultSolverCap = 24;
inline constexpr int kMaxSolverCap = 30;

struct Assignment {
  std::vector<std::uint8_t> bits;
  double value = 0.0;
};

struct SolveReport {
  Assignment best;
  long long optima_count = 0;
  long long states_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Global optimum by Gray-code enumeration of all 2^n assignments with
/// incremental objective updates. The reported optimum is the
/// lexicographically smallest bit vector among all optima. Throws
/// SizeCapError when num_vars exceeds cap (cap itself is limited to 30).
SolveReport exhaustive_optimize(const PseudoBooleanPolynomial &p,
                                int cap = kDefaultSolverCap);

/// Stream every assignment whose objective equals target (same enumeration
/// and arithmetic as exhaustive_optimize, so values compare exactly).
/// The callback receives the assignment as a bit mask (bit i = variable i).
void for_each_assignment_attaining(const PseudoBooleanPolynomial &p, double target,
                                   const std::function<void(std::uint64_t)> &fn,
                                   int cap = kDefaultSolverCap);

struct OracleResult {
  double weight = 0.0;
  std::vector<int> subset;
};

inline constexpr int kOracleCap = 30;

/// Exact maximum-weight co-k-plex by branch and bound, independent of the
/// polynomial pipeline: largest-weight vertex subset whose induced degree is
/// at most k-1 (forbid_bijection additionally excludes subsets containing a
/// bijection edge; star degrees then count non-bijection edges only).
OracleResult cokplex_oracle(const ConflictGraph &cg, int k, BijectionMode mode,
                            int cap = kOracleCap);

/// Feasibility audit for a vertex subset under the same rules.
bool verify_cokplex(const ConflictGraph &cg, const std::vector<int> &subset, int k,
                    BijectionMode mode);

} // namespace molplex
