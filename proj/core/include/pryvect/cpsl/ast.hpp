#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pryvect/errors.hpp"
#include "pryvect/trace.hpp"

namespace pryvect::cpsl {

// Runtime value: Bool, bounded Int, interned Id, or a set of base values.
struct Value {
  enum class Kind { Bool, Int, Id, Set };

  Kind kind = Kind::Bool;
  bool b = false;
  int64_t i = 0;
  std::string id;
  std::vector<Value> elems;  // sorted and distinct

  static Value boolean(bool v) { return {Kind::Bool, v, 0, {}, {}}; }
  static Value integer(int64_t v) { return {Kind::Int, false, v, {}, {}}; }
  static Value ident(std::string v) { return {Kind::Id, false, 0, std::move(v), {}}; }
  static Value set(std::vector<Value> elems);

  bool operator==(const Value&) const = default;
  // Total order over same-kind values; used to keep set elements canonical.
  bool operator<(const Value& other) const;
  std::string str() const;
};

struct TypeTag {
  enum class Base { Bool, Int, Id, Set };

  Base base = Base::Bool;
  bool bounded = false;  // Int only; plain `Int` is rejected at typecheck
  int64_t lo = 0;
  int64_t hi = 0;
  Base elem = Base::Bool;  // Set element base; elem Int reuses lo/hi

  static TypeTag boolean() { return {Base::Bool, false, 0, 0, Base::Bool}; }
  static TypeTag integer(int64_t lo, int64_t hi) { return {Base::Int, true, lo, hi, Base::Bool}; }
  static TypeTag unbounded_int() { return {Base::Int, false, 0, 0, Base::Bool}; }
  static TypeTag ident() { return {Base::Id, false, 0, 0, Base::Bool}; }
  static TypeTag set_of(Base elem, int64_t lo = 0, int64_t hi = 0) { return {Base::Set, false, lo, hi, elem}; }

  bool operator==(const TypeTag&) const = default;
  std::string str() const;
};

struct Exp;
using ExpPtr = std::shared_ptr<const Exp>;

// Expression node. One node type covers boolean, integer and set forms;
// the typechecker resolves the overloaded operators (+ is integer addition
// or set insertion depending on the left operand).
struct Exp {
  enum class Kind {
    BoolLit,
    IntLit,
    IdLit,
    SetLit,
    Var,
    Not,
    Neg,
    And,
    Or,
    Cmp,
    Add,
    Sub,
    Mul,
    In,    // elem in set
    Card,  // |set|
  };
  enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

  Kind kind;
  bool b = false;
  int64_t i = 0;
  std::string name;  // Var name or IdLit text
  std::vector<Value> set_elems;
  CmpOp cmp = CmpOp::Eq;
  ExpPtr lhs;
  ExpPtr rhs;
  int line = 0, col = 0;

  static ExpPtr make(Exp e) { return std::make_shared<const Exp>(std::move(e)); }
};

ExpPtr bool_lit(bool v);
ExpPtr int_lit(int64_t v);
ExpPtr id_lit(std::string v);
ExpPtr var_ref(std::string name);
ExpPtr unary(Exp::Kind k, ExpPtr e);
ExpPtr binary(Exp::Kind k, ExpPtr l, ExpPtr r);
ExpPtr cmp(Exp::CmpOp op, ExpPtr l, ExpPtr r);

struct VarDecl {
  std::string name;
  TypeTag type;
  Value init;
};

struct EventPattern {
  std::string label;
  std::optional<std::string> value;

  bool operator==(const EventPattern&) const = default;
  Event event() const { return Event{label, value}; }
  std::string str() const { return event().str(); }
};

struct Assign {
  std::string var;
  ExpPtr rhs;
};

struct RuleAst {
  ExpPtr guard;                       // never null; GIVEN defaults to true
  std::vector<EventPattern> events;   // nonempty, pairwise distinct
  std::vector<Assign> updates;        // empty encodes `skip`
};

struct PolicyAst {
  std::vector<VarDecl> state_decls;  // source order
  std::vector<RuleAst> rules;        // source order; first match wins
  ExpPtr accept;
};

// Structural equality (ignores source positions).
bool equal(const Exp& a, const Exp& b);
bool equal(const PolicyAst& a, const PolicyAst& b);

// Canonical source form; parse(pretty_print(p)) is structurally equal to p.
std::string pretty_print(const PolicyAst& policy);
std::string pretty_print(const Exp& exp);

}  // namespace pryvect::cpsl
