//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "molplex/molgraph.hpp"
#include "molplex/similarity.hpp"

namespace molplex {

struct CorpusEntry {
  std::string id;
  ClassLabel label = ClassLabel::non_mutagen;
  ReducedGraph graph;
  std::optional<Fingerprint> fingerprint;
};

struct LabeledCorpus {
  std::vector<CorpusEntry> entries;
};

/// Pair score provider. nullopt marks a pair that cannot vote (skipped
/// instance, missing fingerprint, excluded pair).
using PairScoreFn =
    std::function<std::optional<double>(const CorpusEntry &, const CorpusEntry &)>;

/// Raised when a query has fewer than kappa scoreable neighbors.
class AbstentionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inverse-distance weighted vote over the kappa nearest neighbors
/// (distance = 1 - score). Zero-distance neighbors short-circuit to their
/// majority label; exact weight ties go to mutagen. Neighbor order ties
/// break by id, so the result is independent of corpus order.
ClassLabel knn_predict(const CorpusEntry &query,
                       const std::vector<const CorpusEntry *> &pool, int kappa,
                       const PairScoreFn &score);

struct ConfusionCounts {
  long long tp = 0, fp = 0, tn = 0, fn = 0;

  long long total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts &) const = default;
};

/// Metrics for one fold (or one aggregate). Undefined ratios (zero
/// denominator) stay empty rather than propagating NaN.
struct FoldMetrics {
  ConfusionCounts counts;
  std::optional<double> accuracy, precision, sensitivity, specificity;
  long long abstained = 0;
};

/// Accuracy, precision, sensitivity, specificity from raw counts.
/// Throws std::invalid_argument when total() is zero.
FoldMetrics metrics(const ConfusionCounts &c);

struct MetricsReport {
  std::vector<FoldMetrics> folds;
  // Mean and standard error across folds where the metric is defined.
  std::optional<double> mean_accuracy, mean_precision, mean_sensitivity,
      mean_specificity;
  std::optional<double> se_accuracy, se_precision, se_sensitivity, se_specificity;
  long long abstained_total = 0;
};

/// Stratified seeded k-fold cross-validation with a kappa-NN classifier;
/// mutagen is the positive class. Throws when a class has fewer entries
/// than folds or is absent from some training split.
MetricsReport cross_validate(const LabeledCorpus &corpus, int folds, int kappa,
                             std::uint64_t seed, const PairScoreFn &score);

enum class Method { graph, fingerprint };

struct ClassifyParams {
  SimilarityParams similarity;
  Method method = Method::graph;
  int kappa = 3;
  int folds = 5;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Exclude pairs skipped in ANY swept layout from ALL rows.
  bool reduced_pairs = false;
};

struct SweepGrids {
  std::vector<int> layouts;    // layout indices 0..15
  std::vector<double> dts;
  std::vector<int> ks;
  std::vector<double> deltas;
};

struct SweepRow {
  int layout = 0;
  double dt = 0.0;
  int k = 1;
  double delta = 0.4;
  MetricsReport report;
  long long pairs_total = 0;
  long long pairs_scored = 0;
};

struct SweepStats {
  long long pairs_computed = 0;  // conflict-graph solves actually performed
  long long cache_hits = 0;
};

/// Parameter-grid evaluation over a corpus, one row per combination, reusing
/// pair scores through the optional cache. Throws on an empty grid.
std::vector<SweepRow> sweep(const LabeledCorpus &corpus, const SweepGrids &grids,
                            const ClassifyParams &params,
                            SimilarityCache *cache = nullptr,
                            SweepStats *stats = nullptr);

/// Single-cell convenience: cross-validation at one parameter combination,
/// going through the same pair-score machinery as sweep.
MetricsReport evaluate(const LabeledCorpus &corpus, const ClassifyParams &params,
                       SimilarityCache *cache = nullptr, SweepStats *stats = nullptr);

nlohmann::ordered_json to_json(const MetricsReport &r);
nlohmann::ordered_json to_json(const SweepRow &row);

/// Aligned-column text table, one row per sweep entry.
std::string render_table(const std::vector<SweepRow> &rows);

} // namespace molplex
