#include "pryvect/expand.hpp"

#include <algorithm>
#include <functional>

namespace pryvect {

namespace {

void reject_in_expressions(const cpsl::PolicyAst& policy, const std::string& label) {
  std::function<void(const cpsl::Exp&)> walk = [&](const cpsl::Exp& e) {
    if ((e.kind == cpsl::Exp::Kind::Var || e.kind == cpsl::Exp::Kind::IdLit) && e.name == label)
      throw DanglingDangerousEvent("dangerous event '" + label +
                                   "' referenced inside an expression; only WHEN lists may use it");
    if (e.lhs) walk(*e.lhs);
    if (e.rhs) walk(*e.rhs);
  };
  for (const auto& rule : policy.rules) {
    walk(*rule.guard);
    for (const auto& upd : rule.updates) walk(*upd.rhs);
  }
  walk(*policy.accept);
}

}  // namespace

ExpandedPolicy expand_dangerous(const cpsl::PolicyAst& policy, const Alphabet& alphabet,
                                const OracleExpansion& expansion) {
  for (std::size_t i = 0; i < expansion.positive_ids.size(); ++i)
    for (std::size_t j = i + 1; j < expansion.positive_ids.size(); ++j)
      if (expansion.positive_ids[i] == expansion.positive_ids[j])
        throw Error("duplicate positive id in expansion: " + expansion.positive_ids[i]);

  reject_in_expressions(policy, expansion.dangerous_label);

  ExpandedPolicy out;
  out.ast.state_decls = policy.state_decls;
  out.ast.accept = policy.accept;

  for (const auto& rule : policy.rules) {
    cpsl::RuleAst rewritten;
    rewritten.guard = rule.guard;
    rewritten.updates = rule.updates;
    for (const auto& pat : rule.events) {
      if (pat.label != expansion.dangerous_label) {
        rewritten.events.push_back(pat);
        continue;
      }
      for (const auto& id : expansion.positive_ids) {
        cpsl::EventPattern contact{expansion.contact_label, id};
        if (std::find(rewritten.events.begin(), rewritten.events.end(), contact) == rewritten.events.end())
          rewritten.events.push_back(contact);
      }
    }
    // A rule that only fired on the dangerous event becomes unfirable when
    // the snapshot is empty.
    if (!rewritten.events.empty()) out.ast.rules.push_back(std::move(rewritten));
  }

  cpsl::RuleAst catch_all;
  catch_all.guard = cpsl::bool_lit(true);
  catch_all.events.push_back(cpsl::EventPattern{expansion.contact_label, std::string(OracleExpansion::kOtherValue)});
  out.ast.rules.push_back(std::move(catch_all));

  std::vector<Event> symbols;
  for (const auto& sym : alphabet.symbols())
    if (sym.label != expansion.dangerous_label) symbols.push_back(sym);
  auto add_unique = [&symbols](const Event& e) {
    if (std::find(symbols.begin(), symbols.end(), e) == symbols.end()) symbols.push_back(e);
  };
  for (const auto& id : expansion.positive_ids) add_unique(expansion.contact(id));
  add_unique(expansion.other_contact());
  out.alphabet = Alphabet(std::move(symbols));
  return out;
}

}  // namespace pryvect
