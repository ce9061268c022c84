#include "pryvect/cpsl/ast.hpp"

#include <algorithm>
#include <sstream>

namespace pryvect::cpsl {

Value Value::set(std::vector<Value> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Value v;
  v.kind = Kind::Set;
  v.elems = std::move(elems);
  return v;
}

bool Value::operator<(const Value& other) const {
  if (kind != other.kind) return kind < other.kind;
  switch (kind) {
    case Kind::Bool: return b < other.b;
    case Kind::Int: return i < other.i;
    case Kind::Id: return id < other.id;
    case Kind::Set: return elems < other.elems;
  }
  return false;
}

std::string Value::str() const {
  switch (kind) {
    case Kind::Bool: return b ? "true" : "false";
    case Kind::Int: return std::to_string(i);
    case Kind::Id: return "'" + id + "'";
    case Kind::Set: {
      std::string out = "{";
      for (std::size_t i2 = 0; i2 < elems.size(); ++i2) {
        if (i2) out += ", ";
        out += elems[i2].str();
      }
      return out + "}";
    }
  }
  return "?";
}

std::string TypeTag::str() const {
  auto base_str = [](Base b, bool bounded, int64_t lo, int64_t hi) -> std::string {
    switch (b) {
      case Base::Bool: return "Bool";
      case Base::Id: return "Id";
      case Base::Int:
        return bounded ? "Int[" + std::to_string(lo) + "," + std::to_string(hi) + "]" : "Int";
      case Base::Set: return "Set";
    }
    return "?";
  };
  if (base == Base::Set) return "Set of " + base_str(elem, true, lo, hi);
  return base_str(base, bounded, lo, hi);
}

ExpPtr bool_lit(bool v) {
  Exp e;
  e.kind = Exp::Kind::BoolLit;
  e.b = v;
  return Exp::make(std::move(e));
}

ExpPtr int_lit(int64_t v) {
  Exp e;
  e.kind = Exp::Kind::IntLit;
  e.i = v;
  return Exp::make(std::move(e));
}

ExpPtr id_lit(std::string v) {
  Exp e;
  e.kind = Exp::Kind::IdLit;
  e.name = std::move(v);
  return Exp::make(std::move(e));
}

ExpPtr var_ref(std::string name) {
  Exp e;
  e.kind = Exp::Kind::Var;
  e.name = std::move(name);
  return Exp::make(std::move(e));
}

ExpPtr unary(Exp::Kind k, ExpPtr sub) {
  Exp e;
  e.kind = k;
  e.lhs = std::move(sub);
  return Exp::make(std::move(e));
}

ExpPtr binary(Exp::Kind k, ExpPtr l, ExpPtr r) {
  Exp e;
  e.kind = k;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return Exp::make(std::move(e));
}

ExpPtr cmp(Exp::CmpOp op, ExpPtr l, ExpPtr r) {
  Exp e;
  e.kind = Exp::Kind::Cmp;
  e.cmp = op;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return Exp::make(std::move(e));
}

bool equal(const Exp& a, const Exp& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Exp::Kind::BoolLit: return a.b == b.b;
    case Exp::Kind::IntLit: return a.i == b.i;
    case Exp::Kind::IdLit:
    case Exp::Kind::Var: return a.name == b.name;
    case Exp::Kind::SetLit: return a.set_elems == b.set_elems;
    case Exp::Kind::Not:
    case Exp::Kind::Neg:
    case Exp::Kind::Card: return equal(*a.lhs, *b.lhs);
    case Exp::Kind::Cmp:
      return a.cmp == b.cmp && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

bool equal(const PolicyAst& a, const PolicyAst& b) {
  if (a.state_decls.size() != b.state_decls.size() || a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.state_decls.size(); ++i) {
    const auto& x = a.state_decls[i];
    const auto& y = b.state_decls[i];
    if (x.name != y.name || x.type != y.type || !(x.init == y.init)) return false;
  }
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    const auto& x = a.rules[i];
    const auto& y = b.rules[i];
    if (!equal(*x.guard, *y.guard) || x.events != y.events) return false;
    if (x.updates.size() != y.updates.size()) return false;
    for (std::size_t j = 0; j < x.updates.size(); ++j)
      if (x.updates[j].var != y.updates[j].var || !equal(*x.updates[j].rhs, *y.updates[j].rhs)) return false;
  }
  return equal(*a.accept, *b.accept);
}

namespace {

const char* cmp_str(Exp::CmpOp op) {
  switch (op) {
    case Exp::CmpOp::Eq: return "=";
    case Exp::CmpOp::Ne: return "!=";
    case Exp::CmpOp::Lt: return "<";
    case Exp::CmpOp::Le: return "<=";
    case Exp::CmpOp::Gt: return ">";
    case Exp::CmpOp::Ge: return ">=";
  }
  return "?";
}

void print_exp(std::ostream& os, const Exp& e) {
  switch (e.kind) {
    case Exp::Kind::BoolLit: os << (e.b ? "true" : "false"); return;
    case Exp::Kind::IntLit: os << e.i; return;
    case Exp::Kind::IdLit: os << "'" << e.name << "'"; return;
    case Exp::Kind::Var: os << e.name; return;
    case Exp::Kind::SetLit: {
      os << "{";
      for (std::size_t i = 0; i < e.set_elems.size(); ++i) {
        if (i) os << ", ";
        os << e.set_elems[i].str();
      }
      os << "}";
      return;
    }
    case Exp::Kind::Card:
      os << "|";
      print_exp(os, *e.lhs);
      os << "|";
      return;
    case Exp::Kind::Not:
      os << "(not ";
      print_exp(os, *e.lhs);
      os << ")";
      return;
    case Exp::Kind::Neg:
      os << "(-";
      print_exp(os, *e.lhs);
      os << ")";
      return;
    default: {
      const char* op = nullptr;
      switch (e.kind) {
        case Exp::Kind::And: op = "and"; break;
        case Exp::Kind::Or: op = "or"; break;
        case Exp::Kind::Add: op = "+"; break;
        case Exp::Kind::Sub: op = "-"; break;
        case Exp::Kind::Mul: op = "*"; break;
        case Exp::Kind::In: op = "in"; break;
        case Exp::Kind::Cmp: op = cmp_str(e.cmp); break;
        default: op = "?"; break;
      }
      os << "(";
      print_exp(os, *e.lhs);
      os << " " << op << " ";
      print_exp(os, *e.rhs);
      os << ")";
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const Exp& exp) {
  std::ostringstream os;
  print_exp(os, exp);
  return os.str();
}

std::string pretty_print(const PolicyAst& policy) {
  std::ostringstream os;
  os << "STATE\n";
  for (const auto& d : policy.state_decls)
    os << "  " << d.name << " : " << d.type.str() << " := " << d.init.str() << "\n";
  for (const auto& r : policy.rules) {
    os << "\nGIVEN " << pretty_print(*r.guard) << "\nWHEN ";
    for (std::size_t i = 0; i < r.events.size(); ++i) {
      if (i) os << ", ";
      os << r.events[i].str();
    }
    os << "\nTHEN ";
    if (r.updates.empty()) {
      os << "skip";
    } else {
      for (std::size_t i = 0; i < r.updates.size(); ++i) {
        if (i) os << ", ";
        os << r.updates[i].var << " := " << pretty_print(*r.updates[i].rhs);
      }
    }
    os << "\n";
  }
  os << "\nACCEPT " << pretty_print(*policy.accept) << "\n";
  return os.str();
}

}  // namespace pryvect::cpsl
