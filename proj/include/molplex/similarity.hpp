//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "molplex/conflict.hpp"
#include "molplex/qubo.hpp"
#include "molplex/solve.hpp"

namespace molplex {

struct SimilarityParams {
  Layout layout;
  int k = 1;
  double delta = 0.4;
  BijectionMode mode = BijectionMode::allow_bijection;
  PenaltyRule penalty{};
  StarRule star_rule = StarRule::spanning_star;
  WeightScheme weights = WeightScheme::vertex_weight;
  int solver_cap = kDefaultSolverCap;
  /// Use atom-weighted coverage ratios instead of vertex counts.
  bool weighted_coverage = false;
};

struct SimilarityResult {
  double score = 0.0;
  double delta = 0.0;
  int distinct_left = 0;
  int distinct_right = 0;
  int order_left = 0;
  int order_right = 0;
  std::vector<std::pair<int, int>> selected_pairs;
  bool skipped = false;

  double objective = 0.0;        // optimal co-k-plex weight
  long long optima_count = 0;
  int conflict_vertices = 0;
  EdgeCensus census;
};

/// One coverage point of the optimum set: ratios (hi >= lo) with the
/// lexicographically smallest attaining assignment.
struct CoveragePoint {
  double hi = 0.0;
  double lo = 0.0;
  int distinct_left = 0;
  int distinct_right = 0;
  std::uint64_t state = 0;
};

/// Delta-independent similarity computation for one pair: the optimum value
/// plus the Pareto frontier of (max-ratio, min-ratio) coverage over ALL
/// optimal assignments. A score for any delta is a maximum over the frontier.
struct PairProfile {
  bool skipped = false;
  int order_left = 0;
  int order_right = 0;
  int conflict_vertices = 0;
  EdgeCensus census;
  double objective = 0.0;
  long long optima_count = 0;
  std::vector<CoveragePoint> frontier;           // sorted by hi descending
  std::vector<std::pair<int, int>> pair_coords;  // conflict vertex -> (u, v)
};

PairProfile similarity_profile(const ReducedGraph &g, const ReducedGraph &g2,
                               const SimilarityParams &params);

double score_from_profile(const PairProfile &profile, double delta);

SimilarityResult similarity_from_profile(const PairProfile &profile, double delta);

/// Score of the relaxed common-subgraph matching:
///   delta * max(r1, r2) + (1 - delta) * min(r1, r2)
/// with r_i the fraction of distinct graph-i vertices covered by the best
/// selection. Instances whose conflict graph exceeds the solver cap come
/// back with skipped = true and no score.
SimilarityResult similarity(const ReducedGraph &g, const ReducedGraph &g2,
                            const SimilarityParams &params);

/// Fixed-length feature bit vector.
class Fingerprint {
public:
  Fingerprint() = default;
  explicit Fingerprint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  /// Parse a hex string, 4 bits per digit, most significant first.
  static Fingerprint from_hex(std::string_view hex);

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t> &bits() const { return bits_; }

private:
  std::vector<std::uint8_t> bits_;
};

/// 1 - (Euclidean distance) / sqrt(length); 1 for identical vectors, 0 for
/// complementary ones. Throws std::invalid_argument on length mismatch.
double fingerprint_similarity(const Fingerprint &a, const Fingerprint &b);

/// Append-only JSON-lines store of pair scores, keyed by
/// (left, right, layout, d_t, k, mode, delta) with left <= right.
/// Rows carry the chosen coverage counts so reports can be rebuilt.
class SimilarityCache {
public:
  struct Key {
    std::string left, right;
    int layout = 0;
    double dt = 0.0;
    int k = 1;
    std::string mode = "allow";
    double delta = 0.4;

    auto operator<=>(const Key &) const = default;
  };

  struct Row {
    std::optional<double> score;  // nullopt = skipped
    int distinct_left = 0;
    int distinct_right = 0;
    int order_left = 0;
    int order_right = 0;
  };

  SimilarityCache() = default;

  /// Load existing rows; missing file is an empty cache.
  static SimilarityCache load(const std::string &path);

  std::optional<Row> find(const Key &key) const;
  /// Insert and append one line to the backing file (no-op rewrite-wise when
  /// the key is already present).
  void put(const Key &key, const Row &row);

  std::size_t size() const { return rows_.size(); }
  long long hits() const { return hits_; }
  long long misses() const { return misses_; }

private:
  std::map<Key, Row> rows_;
  std::string path_;
  mutable long long hits_ = 0;
  mutable long long misses_ = 0;
};

nlohmann::ordered_json to_json(const SimilarityResult &r);

} // namespace molplex
