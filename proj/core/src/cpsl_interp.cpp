#include "pryvect/cpsl/interp.hpp"

#include <algorithm>
#include <limits>

namespace pryvect::cpsl {

namespace {

struct IntResult {
  int64_t value;
  int64_t lo, hi;  // saturation hull
};

int64_t clamp128(__int128 v, int64_t lo, int64_t hi) {
  if (v < lo) return lo;
  if (v > hi) return hi;
  return static_cast<int64_t>(v);
}

class Evaluator {
public:
  Evaluator(const TypedPolicy& policy, const Env& env) : policy_(policy), env_(env) {}

  Value eval(const Exp& e) {
    switch (e.kind) {
      case Exp::Kind::BoolLit: return Value::boolean(e.b);
      case Exp::Kind::IntLit: return Value::integer(e.i);
      case Exp::Kind::IdLit: return Value::ident(e.name);
      case Exp::Kind::SetLit: return Value::set(e.set_elems);
      case Exp::Kind::Var: return env_.values[var_index(e.name)];
      case Exp::Kind::Not: return Value::boolean(!eval(*e.lhs).b);
      case Exp::Kind::And: return Value::boolean(eval(*e.lhs).b && eval(*e.rhs).b);
      case Exp::Kind::Or: return Value::boolean(eval(*e.lhs).b || eval(*e.rhs).b);
      case Exp::Kind::Neg:
      case Exp::Kind::Mul: return Value::integer(eval_int(e).value);
      case Exp::Kind::Card: return Value::integer(eval_int(e).value);
      case Exp::Kind::Add:
      case Exp::Kind::Sub: {
        Value l = eval(*e.lhs);
        if (l.kind == Value::Kind::Set) {
          Value elem = eval(*e.rhs);
          std::vector<Value> elems = l.elems;
          if (e.kind == Exp::Kind::Add) {
            elems.push_back(elem);
            return Value::set(std::move(elems));
          }
          elems.erase(std::remove(elems.begin(), elems.end(), elem), elems.end());
          Value out;
          out.kind = Value::Kind::Set;
          out.elems = std::move(elems);
          return out;
        }
        return Value::integer(eval_int(e).value);
      }
      case Exp::Kind::In: {
        Value elem = eval(*e.lhs);
        Value set = eval(*e.rhs);
        return Value::boolean(std::find(set.elems.begin(), set.elems.end(), elem) != set.elems.end());
      }
      case Exp::Kind::Cmp: {
        Value l = eval(*e.lhs);
        Value r = eval(*e.rhs);
        switch (e.cmp) {
          case Exp::CmpOp::Eq: return Value::boolean(l == r);
          case Exp::CmpOp::Ne: return Value::boolean(!(l == r));
          case Exp::CmpOp::Lt: return Value::boolean(l.i < r.i);
          case Exp::CmpOp::Le: return Value::boolean(l.i <= r.i);
          case Exp::CmpOp::Gt: return Value::boolean(l.i > r.i);
          case Exp::CmpOp::Ge: return Value::boolean(l.i >= r.i);
        }
        return Value::boolean(false);
      }
    }
    throw Error("unreachable expression kind in eval");
  }

private:
  std::size_t var_index(const std::string& name) {
    auto idx = policy_.var_index(name);
    if (!idx) throw Error("unknown variable at eval time: " + name);
    return *idx;
  }

  IntResult eval_int(const Exp& e) {
    switch (e.kind) {
      case Exp::Kind::IntLit: return {e.i, e.i, e.i};
      case Exp::Kind::Var: {
        std::size_t idx = var_index(e.name);
        const TypeTag& t = policy_.decl(idx).type;
        return {env_.values[idx].i, t.lo, t.hi};
      }
      case Exp::Kind::Neg: {
        IntResult v = eval_int(*e.lhs);
        return {clamp128(-static_cast<__int128>(v.value), -v.hi, -v.lo), -v.hi, -v.lo};
      }
      case Exp::Kind::Card: {
        Value set = eval(*e.lhs);
        return {static_cast<int64_t>(set.elems.size()), 0, std::numeric_limits<int64_t>::max()};
      }
      case Exp::Kind::Add:
      case Exp::Kind::Sub:
      case Exp::Kind::Mul: {
        IntResult l = eval_int(*e.lhs);
        IntResult r = eval_int(*e.rhs);
        int64_t lo = std::min(l.lo, r.lo);
        int64_t hi = std::max(l.hi, r.hi);
        __int128 raw;
        if (e.kind == Exp::Kind::Add)
          raw = static_cast<__int128>(l.value) + r.value;
        else if (e.kind == Exp::Kind::Sub)
          raw = static_cast<__int128>(l.value) - r.value;
        else
          raw = static_cast<__int128>(l.value) * r.value;
        return {clamp128(raw, lo, hi), lo, hi};
      }
      default: {
        // Typechecked as Int but not an arithmetic form (cannot happen).
        Value v = eval(e);
        return {v.i, v.i, v.i};
      }
    }
  }

  const TypedPolicy& policy_;
  const Env& env_;
};

}  // namespace

Value eval_exp(const Exp& exp, const TypedPolicy& policy, const Env& env) {
  return Evaluator(policy, env).eval(exp);
}

bool eval_bool(const Exp& exp, const TypedPolicy& policy, const Env& env) {
  return eval_exp(exp, policy, env).b;
}

std::optional<std::size_t> match_rule(const TypedPolicy& policy, const Env& env, const Event& event,
                                      int* match_count) {
  std::optional<std::size_t> first;
  int count = 0;
  for (std::size_t r = 0; r < policy.ast.rules.size(); ++r) {
    const RuleAst& rule = policy.ast.rules[r];
    bool event_matches = false;
    for (const auto& pat : rule.events)
      if (pat.event() == event) {
        event_matches = true;
        break;
      }
    if (!event_matches) continue;
    if (!eval_bool(*rule.guard, policy, env)) continue;
    if (!first) first = r;
    ++count;
    if (!match_count && first) break;
  }
  if (match_count) *match_count = count;
  return first;
}

Env apply_updates(const TypedPolicy& policy, const Env& env, const RuleAst& rule) {
  Env out = env;
  for (const auto& upd : rule.updates) {
    std::size_t idx = *policy.var_index(upd.var);
    Value v = eval_exp(*upd.rhs, policy, out);
    const TypeTag& t = policy.decl(idx).type;
    if (t.base == TypeTag::Base::Int) v.i = std::clamp(v.i, t.lo, t.hi);
    if (t.base == TypeTag::Base::Set && t.elem == TypeTag::Base::Int) {
      for (auto& e : v.elems) e.i = std::clamp(e.i, t.lo, t.hi);
      v = Value::set(std::move(v.elems));
    }
    out.values[idx] = std::move(v);
  }
  return out;
}

Verdict interpret(const TypedPolicy& policy, const Trace& trace) {
  Env env = policy.initial_env;
  for (const auto& event : trace.events) {
    if (!policy.alphabet.contains(event))
      throw AlphabetMismatch("event " + event.str() + " is not in the policy alphabet");
    auto rule = match_rule(policy, env, event);
    if (!rule) return Verdict::Reject;  // default-deny
    env = apply_updates(policy, env, policy.ast.rules[*rule]);
  }
  return eval_bool(*policy.ast.accept, policy, env) ? Verdict::Accept : Verdict::Reject;
}

}  // namespace pryvect::cpsl
