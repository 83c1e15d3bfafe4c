//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molplex/elements.hpp"

#include <array>
#include <cctype>

namespace molplex {

namespace {

constexpr std::array<const char *, 119> kSymbols = {
    "",   "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
    "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
    "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

} // namespace

std::optional<int> atomic_number(std::string_view symbol) {
  const std::string key = lower(symbol);
  if (key.empty()) return std::nullopt;
  if (key == "d" || key == "t") return 1;  // deuterium / tritium
  for (int z = 1; z < static_cast<int>(kSymbols.size()); ++z) {
    if (key == lower(kSymbols[z])) return z;
  }
  return std::nullopt;
}

std::string element_symbol(int atomic_number) {
  if (atomic_number < 1 || atomic_number >= static_cast<int>(kSymbols.size())) return "";
  return kSymbols[static_cast<std::size_t>(atomic_number)];
}

std::optional<int> standard_valence(int atomic_number) {
  switch (atomic_number) {
    case 1: return 1;   // H
    case 6: return 4;   // C
    case 7: return 3;   // N
    case 8: return 2;   // O
    case 15: return 3;  // P
    case 16: return 2;  // S
    case 9: case 17: case 35: case 53: return 1;  // halogens
    default: return std::nullopt;
  }
}

bool nitrogen_family(int atomic_number) {
  return atomic_number == 7 || atomic_number == 15;
}

} // namespace molplex
