#pragma once

#include <cstdint>
#include <unordered_map>

#include "pryvect/cpsl/ast.hpp"
#include "pryvect/trace.hpp"

namespace pryvect::cpsl {

// Variable assignment, keyed by declaration order. Hashable and totally
// ordered so compiled automata can use envs as state identities.
struct Env {
  std::vector<Value> values;

  bool operator==(const Env&) const = default;
  std::string str(const std::vector<VarDecl>& decls) const;
};

struct EnvHash {
  std::size_t operator()(const Env& env) const;
};

// Checked policy: the AST plus the alphabet it was checked against and the
// initial variable assignment.
struct TypedPolicy {
  PolicyAst ast;
  Alphabet alphabet;
  Env initial_env;

  const VarDecl& decl(std::size_t idx) const { return ast.state_decls[idx]; }
  std::optional<std::size_t> var_index(const std::string& name) const;
};

// Verifies declarations, rule guards/updates/events and the accept
// expression. Throws TypecheckError (UndeclaredVariable, TypeMismatch,
// UnknownEvent, UnboundedInt, DuplicateVariable).
TypedPolicy typecheck(const PolicyAst& ast, const Alphabet& alphabet);

}  // namespace pryvect::cpsl
