//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "molplex/molgraph.hpp"

namespace molplex {

/// Matching criteria for conflict-graph construction. Atomic number, weight
/// and (for atom vertices) implicit hydrogen count always match; the four
/// flags switch the optional criteria on. distance_threshold is the d_t of
/// the geometric rule; +infinity disables distance conflicts entirely.
struct Layout {
  bool rh = false;  // ring hydrogen sums
  bool rb = false;  // in-ring bond orders
  bool fc = false;  // formal charge
  bool dn = false;  // degree signature
  double distance_threshold = 1.5;

  int index() const { return 8 * rh + 4 * rb + 2 * fc + 1 * dn; }
  static Layout from_index(int index, double distance_threshold);
};

enum class WeightScheme { vertex_weight, unit };

struct ConflictVertex {
  std::vector<int> coords;  // one vertex index per source graph
  double weight = 1.0;
};

enum class ConflictKind { bijection, edge_label, distance, user };

std::string to_string(ConflictKind kind);

struct ConflictEdge {
  int u = 0;
  int v = 0;
  ConflictKind kind = ConflictKind::bijection;
};

struct ConflictGraph {
  std::vector<ConflictVertex> vertices;
  std::vector<ConflictEdge> edges;
  std::vector<std::string> sources;     // names of the compared graphs
  std::vector<int> source_orders;       // |V_i| per source graph

  std::size_t order() const { return vertices.size(); }
};

struct EdgeCensus {
  long long bijection = 0;
  long long edge_label = 0;
  long long distance = 0;
  long long user = 0;

  long long total() const { return bijection + edge_label + distance + user; }
  bool operator==(const EdgeCensus &) const = default;
};

/// Pairing graph of g and g2 under the layout. Vertices are label-matching
/// pairs weighted by the shared weight label (or 1 under WeightScheme::unit);
/// edges mark bijection, edge-label, and distance conflicts, recorded once
/// with priority bijection > edge_label > distance.
ConflictGraph build_conflict_graph(const ReducedGraph &g, const ReducedGraph &g2,
                                   const Layout &layout,
                                   WeightScheme weights = WeightScheme::vertex_weight);

EdgeCensus edge_census(const ConflictGraph &cg);

/// Extra tuple filter for the n-way builder; receives one vertex index per
/// source graph. Applied on top of pairwise label matching.
using TupleFilter = std::function<bool(const std::vector<int> &)>;

inline constexpr long long kDefaultTupleCap = 1'000'000;

/// n-way generalization: vertices are n-tuples passing pairwise matching,
/// edges join tuples that share any coordinate (bijection) or whose
/// coordinate projections violate the edge-label or distance rule.
/// Throws SizeCapError when the tuple count exceeds tuple_cap.
ConflictGraph build_nway_conflict_graph(const std::vector<const ReducedGraph *> &graphs,
                                        const Layout &layout,
                                        WeightScheme weights = WeightScheme::vertex_weight,
                                        const TupleFilter &filter = nullptr,
                                        long long tuple_cap = kDefaultTupleCap);

nlohmann::ordered_json to_json(const ConflictGraph &cg);

/// Graphviz export; edge colors black/green/blue/gray for
/// bijection/distance/edge-label/user conflicts.
std::string to_dot(const ConflictGraph &cg);

} // namespace molplex
