//
// Project molplex - Copyright 2026 the molplex authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace molplex {

/// Malformed input: MOL/SDF blocks, molecule JSON, manifests, QUBO files.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An instance exceeded a hard size cap (solver variables, n-way tuples,
/// penalty monomials). Carries the cap that was hit.
class SizeCapError : public std::runtime_error {
public:
  SizeCapError(const std::string &what, long long cap)
      : std::runtime_error(what), cap_(cap) {}

  long long cap() const noexcept { return cap_; }

private:
  long long cap_;
};

} // namespace molplex
