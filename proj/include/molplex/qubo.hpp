//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "molplex/conflict.hpp"

namespace molplex {

/// Multilinear polynomial over binary variables, stored as a map from the
/// sorted variable set of each monomial to its coefficient. The empty
/// monomial is the constant term; zero coefficients are never stored.
class PseudoBooleanPolynomial {
public:
  enum class Sense { maximize, minimize };

  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, double>;

  PseudoBooleanPolynomial() = default;
  PseudoBooleanPolynomial(int num_vars, Sense sense)
      : num_vars_(num_vars), sense_(sense) {}

  int num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }
  const TermMap &terms() const { return terms_; }

  /// Accumulate coefficient onto a monomial. The monomial is sorted; repeated
  /// variables are rejected (multilinearity). Terms that cancel to zero are
  /// dropped.
  void add_term(Monomial monomial, double coefficient);

  double coefficient(const Monomial &monomial) const;
  double constant() const { return coefficient({}); }
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }

  double evaluate(const std::vector<std::uint8_t> &bits) const;
  double evaluate(std::uint64_t bits) const;

  /// Grow the variable space (used when appending ancilla variables).
  void set_num_vars(int n) { num_vars_ = n; }

  bool operator==(const PseudoBooleanPolynomial &) const = default;

  /// Human-readable dump, e.g. "max  +3 x0 -2 x0 x1 +1".
  std::string to_string() const;

private:
  TermMap terms_;
  int num_vars_ = 0;
  Sense sense_ = Sense::maximize;
};

/// Penalty magnitude rule for constraint terms. min_plus_one produces
/// a = min(involved weights) + 1; explicit_value uses a fixed a (which must
/// still exceed the minimum involved weight).
struct PenaltyRule {
  enum class Scheme { min_plus_one, explicit_value };
  Scheme scheme = Scheme::min_plus_one;
  double value = 0.0;

  double penalty(double min_weight) const;
};

enum class BijectionMode { allow_bijection, forbid_bijection };

/// Star-penalty semantics for the co-k-plex builder. spanning_star penalizes
/// every (center, k neighbors) selection regardless of leaf-leaf edges and is
/// exactly the degree-bound constraint; induced_star penalizes only sets that
/// induce a star (no leaf-leaf edges), which under-constrains cliques.
enum class StarRule { spanning_star, induced_star };

/// Maximum-weight independent set objective: w_s x_s per vertex minus
/// a_{sl} x_s x_l per conflict edge. Throws on nonpositive vertex weights.
PseudoBooleanPolynomial build_mis_qubo(const ConflictGraph &cg,
                                       const PenaltyRule &rule = {});

inline constexpr long long kDefaultMonomialCap = 2'000'000;

struct CokplexBuild {
  PseudoBooleanPolynomial poly;
  /// Set when k >= |V_c| left no star to penalize.
  bool vacuous_k = false;
};

/// Degree-relaxed objective: linear weights plus a penalty monomial for each
/// star of size k (center + k-subset of its neighbors). In forbid_bijection
/// mode stars range over non-bijection edges only and every bijection edge
/// keeps a quadratic penalty. k = 1 is exactly build_mis_qubo. Coefficients
/// on identical monomials accumulate.
CokplexBuild build_cokplex_pbo(const ConflictGraph &cg, int k, BijectionMode mode,
                               const PenaltyRule &rule = {},
                               StarRule star_rule = StarRule::spanning_star,
                               long long monomial_cap = kDefaultMonomialCap);

struct QuadratizationResult {
  PseudoBooleanPolynomial poly;              // degree <= 2
  std::map<int, std::pair<int, int>> ancilla_map;  // ancilla -> replaced pair
  double penalty_weight = 0.0;               // shared exactness penalty M
  int original_num_vars = 0;

  /// Restrict an assignment of poly to the original variables.
  std::vector<std::uint8_t> project(const std::vector<std::uint8_t> &bits) const;
};

/// Rosenberg pair substitution: repeatedly replace the most frequent variable
/// pair among degree >= 3 monomials with an ancilla, adding the exactness
/// penalty M(uv - 2uy - 2vy + 3y) (minimization orientation) with
/// M = 1 + sum of |coefficients| of the input. Preserves the optimal value
/// and the optimality of projected assignments.
QuadratizationResult quadratize(const PseudoBooleanPolynomial &p);

/// JSON interchange record for degree <= 2 polynomials:
/// {num_vars, sense, constant, linear, quadratic:[[i,j,c] with i<j]}.
/// Throws std::invalid_argument on degree > 2.
nlohmann::ordered_json export_qubo(const PseudoBooleanPolynomial &p);
PseudoBooleanPolynomial import_qubo(const nlohmann::json &j);

} // namespace molplex
