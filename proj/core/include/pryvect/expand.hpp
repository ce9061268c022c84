#pragma once

#include "pryvect/cpsl/ast.hpp"
#include "pryvect/trace.hpp"

namespace pryvect {

// Oracle snapshot driving the rewrite of the abstract dangerous-contact
// event into concrete contact symbols.
struct OracleExpansion {
  std::string dangerous_label;            // abstract event, e.g. "d"
  std::string contact_label = "c";        // label of concrete contact events
  std::vector<std::string> positive_ids;  // ordered, pairwise distinct

  // Reserved value for contacts with ids outside the published alphabet.
  static constexpr const char* kOtherValue = "*";

  Event contact(const std::string& id) const { return Event{contact_label, id}; }
  Event other_contact() const { return Event{contact_label, std::string(kOtherValue)}; }
};

struct ExpandedPolicy {
  cpsl::PolicyAst ast;
  Alphabet alphabet;
};

// Replaces the dangerous event in every WHEN list with the contact events
// of the snapshot's positive ids, appends a lowest-priority no-op rule for
// the reserved other-contact symbol, and rewrites the alphabet accordingly
// (dangerous symbol removed; contact symbols plus the reserved one added).
// Rules whose WHEN list becomes empty are dropped. Throws
// DanglingDangerousEvent when the dangerous label is referenced by an
// expression instead of a WHEN list.
ExpandedPolicy expand_dangerous(const cpsl::PolicyAst& policy, const Alphabet& alphabet,
                                const OracleExpansion& expansion);

}  // namespace pryvect
