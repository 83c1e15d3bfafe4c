//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace molplex {

/// Atomic number for an element symbol ("C", "Cl", ...). Lookup is
/// case-insensitive; "D" and "T" map to hydrogen. Returns nullopt for
/// unknown symbols.
std::optional<int> atomic_number(std::string_view symbol);

/// Element symbol for an atomic number, or empty string if out of range.
std::string element_symbol(int atomic_number);

/// Standard valence used for implicit-hydrogen counting. Covers
/// H, C, N, O, P, S, F, Cl, Br, I; nullopt for everything else.
std::optional<int> standard_valence(int atomic_number);

/// True for elements whose cations gain bonding capacity (N, P).
bool nitrogen_family(int atomic_number);

} // namespace molplex
