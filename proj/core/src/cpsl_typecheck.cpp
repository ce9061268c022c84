#include "pryvect/cpsl/typecheck.hpp"

#include <algorithm>
#include <limits>

namespace pryvect::cpsl {

std::size_t EnvHash::operator()(const Env& env) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  std::hash<std::string> hs;
  for (const auto& v : env.values) {
    mix(static_cast<std::size_t>(v.kind));
    switch (v.kind) {
      case Value::Kind::Bool: mix(v.b ? 1 : 2); break;
      case Value::Kind::Int: mix(static_cast<std::size_t>(v.i) ^ 0x9e3779b9); break;
      case Value::Kind::Id: mix(hs(v.id)); break;
      case Value::Kind::Set:
        for (const auto& e : v.elems) mix(EnvHash{}(Env{{e}}));
        mix(v.elems.size() + 17);
        break;
    }
  }
  return h;
}

std::string Env::str(const std::vector<VarDecl>& decls) const {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += (i < decls.size() ? decls[i].name : "v" + std::to_string(i)) + "=" + values[i].str();
  }
  return out + "}";
}

std::optional<std::size_t> TypedPolicy::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < ast.state_decls.size(); ++i)
    if (ast.state_decls[i].name == name) return i;
  return std::nullopt;
}

namespace {

using Kind = TypeTag::Base;

bool literal_matches(const Value& v, const TypeTag& t) {
  switch (t.base) {
    case Kind::Bool: return v.kind == Value::Kind::Bool;
    case Kind::Id: return v.kind == Value::Kind::Id;
    case Kind::Int: return v.kind == Value::Kind::Int && (!t.bounded || (v.i >= t.lo && v.i <= t.hi));
    case Kind::Set: {
      if (v.kind != Value::Kind::Set) return false;
      TypeTag elem{t.elem, true, t.lo, t.hi, Kind::Bool};
      for (const auto& e : v.elems)
        if (!literal_matches(e, elem)) return false;
      return true;
    }
  }
  return false;
}

// Expression types inferred bottom-up. Int carries its saturation bounds.
struct ExpType {
  Kind base;
  int64_t lo = 0, hi = 0;  // Int bounds, or Set element bounds for elem Int
  Kind elem = Kind::Bool;  // Set element base
};

class Checker {
public:
  Checker(const PolicyAst& ast, const Alphabet& alphabet) : ast_(ast), alphabet_(alphabet) {}

  TypedPolicy run() {
    check_decls();
    for (std::size_t r = 0; r < ast_.rules.size(); ++r) {
      const RuleAst& rule = ast_.rules[r];
      std::string where = "rule " + std::to_string(r + 1);
      require_bool(check(*rule.guard), where + " guard");
      for (const auto& ev : rule.events) {
        if (!alphabet_.contains(ev.event()))
          throw TypecheckError(TypecheckError::Kind::UnknownEvent,
                               where + ": event " + ev.str() + " not in the alphabet");
      }
      for (const auto& upd : rule.updates) check_assign(upd, where);
    }
    require_bool(check(*ast_.accept), "ACCEPT expression");

    TypedPolicy tp{ast_, alphabet_, {}};
    for (const auto& d : ast_.state_decls) tp.initial_env.values.push_back(d.init);
    return tp;
  }

private:
  void check_decls() {
    for (std::size_t i = 0; i < ast_.state_decls.size(); ++i) {
      const VarDecl& d = ast_.state_decls[i];
      for (std::size_t j = 0; j < i; ++j)
        if (ast_.state_decls[j].name == d.name)
          throw TypecheckError(TypecheckError::Kind::DuplicateVariable,
                               "variable '" + d.name + "' declared twice");
      if (d.type.base == Kind::Int && !d.type.bounded)
        throw TypecheckError(TypecheckError::Kind::UnboundedInt,
                             "variable '" + d.name + "': Int requires a [lo,hi] range");
      if (d.type.base == Kind::Set && d.type.elem == Kind::Int && d.type.lo > d.type.hi)
        throw TypecheckError(TypecheckError::Kind::TypeMismatch,
                             "variable '" + d.name + "': empty Int range");
      if (d.type.base == Kind::Int && d.type.lo > d.type.hi)
        throw TypecheckError(TypecheckError::Kind::TypeMismatch,
                             "variable '" + d.name + "': Int range has lo > hi");
      if (!literal_matches(d.init, d.type))
        throw TypecheckError(TypecheckError::Kind::TypeMismatch,
                             "variable '" + d.name + "': initial value " + d.init.str() +
                                 " does not fit type " + d.type.str());
    }
  }

  const VarDecl& lookup(const std::string& name) {
    for (const auto& d : ast_.state_decls)
      if (d.name == name) return d;
    throw TypecheckError(TypecheckError::Kind::UndeclaredVariable, "undeclared variable '" + name + "'");
  }

  void require_bool(const ExpType& t, const std::string& where) {
    if (t.base != Kind::Bool)
      throw TypecheckError(TypecheckError::Kind::TypeMismatch, where + " must be boolean");
  }

  [[noreturn]] void mismatch(const std::string& msg) {
    throw TypecheckError(TypecheckError::Kind::TypeMismatch, msg);
  }

  void check_assign(const Assign& a, const std::string& where) {
    const VarDecl& d = lookup(a.var);
    ExpType rhs = check(*a.rhs);
    switch (d.type.base) {
      case Kind::Bool:
        if (rhs.base != Kind::Bool) mismatch(where + ": cannot assign non-boolean to '" + a.var + "'");
        break;
      case Kind::Int:
        if (rhs.base != Kind::Int) mismatch(where + ": cannot assign non-integer to '" + a.var + "'");
        break;
      case Kind::Id:
        if (rhs.base != Kind::Id) mismatch(where + ": cannot assign non-id to '" + a.var + "'");
        break;
      case Kind::Set:
        if (rhs.base != Kind::Set) mismatch(where + ": cannot assign non-set to '" + a.var + "'");
        if (rhs.elem != d.type.elem && !empty_set_rhs(*a.rhs))
          mismatch(where + ": set element type does not match '" + a.var + "'");
        break;
    }
  }

  static bool empty_set_rhs(const Exp& e) { return e.kind == Exp::Kind::SetLit && e.set_elems.empty(); }

  static Kind value_kind(const Value& v) {
    switch (v.kind) {
      case Value::Kind::Bool: return Kind::Bool;
      case Value::Kind::Int: return Kind::Int;
      case Value::Kind::Id: return Kind::Id;
      case Value::Kind::Set: return Kind::Set;
    }
    return Kind::Bool;
  }

  ExpType check(const Exp& e) {
    switch (e.kind) {
      case Exp::Kind::BoolLit: return {Kind::Bool};
      case Exp::Kind::IntLit: return {Kind::Int, e.i, e.i};
      case Exp::Kind::IdLit: return {Kind::Id};
      case Exp::Kind::SetLit: {
        ExpType t{Kind::Set};
        if (!e.set_elems.empty()) {
          t.elem = value_kind(e.set_elems.front());
          for (const auto& v : e.set_elems) {
            if (value_kind(v) != t.elem) mismatch("set literal mixes element types");
            if (v.kind == Value::Kind::Set) mismatch("nested sets are not supported");
            if (v.kind == Value::Kind::Int) {
              t.lo = std::min(t.lo, v.i);
              t.hi = std::max(t.hi, v.i);
            }
          }
        }
        return t;
      }
      case Exp::Kind::Var: {
        const VarDecl& d = lookup(e.name);
        return {d.type.base, d.type.lo, d.type.hi, d.type.elem};
      }
      case Exp::Kind::Not: {
        require_bool(check(*e.lhs), "operand of 'not'");
        return {Kind::Bool};
      }
      case Exp::Kind::Neg: {
        ExpType t = check(*e.lhs);
        if (t.base != Kind::Int) mismatch("operand of unary '-' must be integer");
        return {Kind::Int, -t.hi, -t.lo};
      }
      case Exp::Kind::And:
      case Exp::Kind::Or: {
        require_bool(check(*e.lhs), "boolean operand");
        require_bool(check(*e.rhs), "boolean operand");
        return {Kind::Bool};
      }
      case Exp::Kind::Cmp: {
        ExpType l = check(*e.lhs);
        ExpType r = check(*e.rhs);
        if (l.base != r.base) mismatch("comparison operands have different types");
        if (l.base == Kind::Set) mismatch("sets cannot be compared");
        bool ordered = e.cmp != Exp::CmpOp::Eq && e.cmp != Exp::CmpOp::Ne;
        if (ordered && l.base != Kind::Int) mismatch("ordered comparison requires integers");
        return {Kind::Bool};
      }
      case Exp::Kind::Add:
      case Exp::Kind::Sub: {
        ExpType l = check(*e.lhs);
        ExpType r = check(*e.rhs);
        if (l.base == Kind::Set) {
          // Set insert / remove of one element.
          if (r.base == Kind::Set) mismatch("set union/difference is not supported");
          if (r.base != l.elem) mismatch("set element type mismatch");
          return l;
        }
        if (l.base != Kind::Int || r.base != Kind::Int) mismatch("arithmetic requires integers");
        return {Kind::Int, std::min(l.lo, r.lo), std::max(l.hi, r.hi)};
      }
      case Exp::Kind::Mul: {
        ExpType l = check(*e.lhs);
        ExpType r = check(*e.rhs);
        if (l.base != Kind::Int || r.base != Kind::Int) mismatch("arithmetic requires integers");
        return {Kind::Int, std::min(l.lo, r.lo), std::max(l.hi, r.hi)};
      }
      case Exp::Kind::In: {
        ExpType l = check(*e.lhs);
        ExpType r = check(*e.rhs);
        if (r.base != Kind::Set) mismatch("'in' requires a set on the right");
        if (l.base == Kind::Set) mismatch("'in' element cannot be a set");
        if (l.base != r.elem) mismatch("'in' element type does not match the set");
        return {Kind::Bool};
      }
      case Exp::Kind::Card: {
        ExpType t = check(*e.lhs);
        if (t.base != Kind::Set) mismatch("|...| requires a set");
        return {Kind::Int, 0, std::numeric_limits<int64_t>::max()};
      }
    }
    mismatch("unreachable expression kind");
  }

  const PolicyAst& ast_;
  const Alphabet& alphabet_;
};

}  // namespace

TypedPolicy typecheck(const PolicyAst& ast, const Alphabet& alphabet) {
  return Checker(ast, alphabet).run();
}

}  // namespace pryvect::cpsl
