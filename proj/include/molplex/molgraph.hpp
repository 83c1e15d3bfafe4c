//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace molplex {

using Vec3 = std::array<double, 3>;

double distance(const Vec3 &a, const Vec3 &b);

enum class BondOrder : int { single = 1, double_bond = 2, triple_bond = 3 };

enum class ClassLabel { mutagen, non_mutagen };

std::string to_string(ClassLabel label);
std::optional<ClassLabel> class_label_from_string(std::string_view text);

struct Atom {
  int element = 0;       // atomic number, >= 1
  int formal_charge = 0;
  Vec3 position{0.0, 0.0, 0.0};
  bool explicit_hydrogen = false;
  // Set by the JSON path when the file supplies per-atom counts; overrides
  // the valence-table rule.
  std::optional<int> implicit_h_override;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::single;
};

struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::string name;
  std::optional<ClassLabel> label;
  // Precomputed fingerprint bits as a hex string, if the source supplied one.
  std::optional<std::string> fingerprint_hex;
};

/// Parse a single MOL/SDF V2000 block. Throws ParseError on malformed
/// counts lines, counts/block mismatches, out-of-range bond indices,
/// unsupported bond codes (4 and up), and unknown element symbols.
Molecule parse_molfile(const std::string &text);

/// Parse a (possibly multi-record) SDF file; records are separated by "$$$$".
std::vector<Molecule> parse_sdf(const std::string &text);

/// Parse the molecule JSON document described in the README. Supplied
/// implicit_h values suppress valence inference for those atoms.
Molecule parse_molecule_json(const std::string &text);

/// Per-atom implicit hydrogen counts:
///   max(0, capacity - sum of incident bond orders)
/// where capacity is the standard valence adjusted by formal charge
/// (cations of N/P gain |charge|, anions lose |charge|). Explicit hydrogen
/// atoms get 0; per-atom overrides win. Throws std::invalid_argument when
/// an element is missing from the valence table and has no override.
std::vector<int> implicit_hydrogens(const Molecule &m);

/// Minimum cycle basis of the bond graph: exactly |E| - |V| + #components
/// cycles, each returned as its sorted vertex set. Ring order is
/// deterministic (smallest member, then size, then lexicographic).
std::vector<std::vector<int>> detect_rings(const Molecule &m);

enum class VertexKind { atom, ring };

enum class EdgeLabel : int { artificial = 0, single = 1, double_bond = 2, triple_bond = 3 };

std::string to_string(EdgeLabel label);

struct VertexLabels {
  VertexKind kind = VertexKind::atom;
  int atomic_number = 0;           // 0 for ring vertices
  int implicit_h = 0;              // atoms: own count; rings: sum over members (RH)
  int formal_charge = 0;           // rings: sum over members
  std::vector<int> degree_signature;  // sorted incident covalent bond orders (DN)
  std::vector<int> ring_bond_orders;  // sorted in-ring bond orders (RB); empty for atoms
  int weight = 1;                  // number of original atoms represented
  Vec3 position{0.0, 0.0, 0.0};    // atom position or ring centroid
};

struct ReducedEdge {
  int u = 0;
  int v = 0;
  EdgeLabel label = EdgeLabel::single;
};

/// Labeled graph after ring contraction. Immutable once built.
struct ReducedGraph {
  std::vector<VertexLabels> vertices;
  std::vector<ReducedEdge> edges;
  std::vector<std::vector<int>> member_atoms;
  std::string name;
  std::optional<ClassLabel> label;
  std::optional<std::string> fingerprint_hex;

  std::size_t order() const { return vertices.size(); }
  /// Edge label between u and v, or nullopt when there is no edge.
  std::optional<EdgeLabel> edge_label_between(int u, int v) const;
};

/// Contract each ring of the minimum cycle basis to a weighted vertex.
/// Atom vertices come first (ascending original index), ring vertices after
/// (detect_rings order). Rings sharing atoms are joined by 'artificial'
/// edges; bonds entirely inside one ring produce no edge.
ReducedGraph reduce(const Molecule &m);

nlohmann::ordered_json to_json(const ReducedGraph &g);
std::string to_dot(const ReducedGraph &g);

} // namespace molplex
