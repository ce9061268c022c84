#pragma once

#include "pryvect/cpsl/typecheck.hpp"

namespace pryvect {

enum class Verdict { Accept, Reject };

inline const char* verdict_str(Verdict v) { return v == Verdict::Accept ? "accept" : "reject"; }

}  // namespace pryvect

namespace pryvect::cpsl {

// Strict evaluation under an assignment. Integer arithmetic saturates into
// the hull of the operand bounds, so expressions over bounded variables
// never leave the declared domain.
Value eval_exp(const Exp& exp, const TypedPolicy& policy, const Env& env);

bool eval_bool(const Exp& exp, const TypedPolicy& policy, const Env& env);

// Index of the first rule (source order) whose guard holds and whose WHEN
// list contains the event. match_count, when given, receives the number of
// rules that matched (used for overlap warnings).
std::optional<std::size_t> match_rule(const TypedPolicy& policy, const Env& env, const Event& event,
                                      int* match_count = nullptr);

// Applies THEN updates left to right; assigned integers are clamped into
// the target variable's declared range.
Env apply_updates(const TypedPolicy& policy, const Env& env, const RuleAst& rule);

// Reference semantics, executed directly on the rules: dispatch the first
// matching rule per event, default-deny when none matches, accept iff the
// final env satisfies ACCEPT. Serves as the compilation oracle.
Verdict interpret(const TypedPolicy& policy, const Trace& trace);

}  // namespace pryvect::cpsl
