#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pryvect/cpsl/interp.hpp"
#include "pryvect/trace.hpp"

namespace pryvect {

// Deterministic finite automaton with a total transition table over an
// explicit symbol table. States are dense ids; compiled automata number
// them in BFS order from the initial state.
struct Dfa {
  uint32_t initial = 0;
  Alphabet alphabet;
  std::vector<uint32_t> delta;   // row-major: q * |alphabet| + symbol
  std::vector<bool> finals;      // indexed by state id
  std::vector<std::string> state_meta;  // originating env or "sink"; not serialized

  uint32_t q_count() const { return static_cast<uint32_t>(finals.size()); }
  uint32_t next(uint32_t q, uint32_t sym) const { return delta[q * alphabet.size() + sym]; }
  bool is_final(uint32_t q) const { return finals[q]; }

  // Structural equality; state_meta is debugging info and excluded.
  bool operator==(const Dfa& other) const {
    return initial == other.initial && alphabet == other.alphabet && delta == other.delta &&
           finals == other.finals;
  }
};

// Runs the automaton over the trace; accepts iff the reached state is
// final. Throws AlphabetMismatch for events outside the symbol table.
Verdict run(const Dfa& dfa, const Trace& trace);

// State reached after consuming the trace (exposed for the protocol roles).
uint32_t run_to_state(const Dfa& dfa, const Trace& trace);

// Binary .dfa format: magic "PYVD", version byte, |Q|, |Lambda|, symbol
// table, initial id, finals bitmap, row-major delta of 4-byte big-endian
// state ids.
Bytes serialize(const Dfa& dfa);
Dfa deserialize_dfa(const Bytes& bytes);

Dfa load_dfa(const std::string& path);
void save_dfa(const Dfa& dfa, const std::string& path);

}  // namespace pryvect
