#pragma once

#include "pryvect/dfa.hpp"

namespace pryvect {

struct CompileOptions {
  // Upper bound on the product of the declared variable domains.
  std::size_t state_bound = 1'000'000;
  // When set, receives one line per (state, symbol) where several rules
  // matched and first-match dispatch had to pick.
  std::vector<std::string>* overlap_warnings = nullptr;
};

// Builds the DFA whose states are the variable assignments reachable from
// the initial one. delta follows the first matching rule; symbols with no
// matching rule lead to an absorbing non-accepting sink. States are
// numbered in discovery (BFS) order, so equal policies compile to
// byte-identical automata.
Dfa compile(const cpsl::TypedPolicy& policy, const CompileOptions& opts = {});

}  // namespace pryvect
