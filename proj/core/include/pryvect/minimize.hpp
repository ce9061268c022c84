#pragma once

#include "pryvect/dfa.hpp"

namespace pryvect {

// Hopcroft partition refinement. Returns the language-equivalent DFA with
// the minimal state count, states renumbered in BFS order from the initial
// block. Unreachable input states are dropped first.
Dfa minimize(const Dfa& dfa);

}  // namespace pryvect
