#include "pryvect/compile.hpp"

#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

namespace pryvect {

namespace {

using cpsl::Env;
using cpsl::EnvHash;
using cpsl::TypeTag;
using cpsl::TypedPolicy;
using cpsl::Value;

// Size of one variable's value domain, saturated at `cap`.
std::size_t domain_size(const TypedPolicy& policy, std::size_t decl_idx, std::size_t cap) {
  const auto& decl = policy.decl(decl_idx);
  auto int_range = [&]() -> std::size_t {
    unsigned __int128 span = static_cast<unsigned __int128>(decl.type.hi) - decl.type.lo + 1;
    return span > cap ? cap : static_cast<std::size_t>(span);
  };
  // The Id universe is the set of id constants the policy can ever store:
  // initial values plus id literals in update right-hand sides.
  auto id_universe = [&]() -> std::size_t {
    std::set<std::string> ids;
    for (const auto& d : policy.ast.state_decls) {
      if (d.init.kind == Value::Kind::Id) ids.insert(d.init.id);
      for (const auto& e : d.init.elems)
        if (e.kind == Value::Kind::Id) ids.insert(e.id);
    }
    std::function<void(const cpsl::Exp&)> walk = [&](const cpsl::Exp& e) {
      if (e.kind == cpsl::Exp::Kind::IdLit) ids.insert(e.name);
      for (const auto& v : e.set_elems)
        if (v.kind == Value::Kind::Id) ids.insert(v.id);
      if (e.lhs) walk(*e.lhs);
      if (e.rhs) walk(*e.rhs);
    };
    for (const auto& rule : policy.ast.rules)
      for (const auto& upd : rule.updates) walk(*upd.rhs);
    return std::max<std::size_t>(ids.size(), 1);
  };

  switch (decl.type.base) {
    case TypeTag::Base::Bool: return 2;
    case TypeTag::Base::Int: return int_range();
    case TypeTag::Base::Id: return id_universe();
    case TypeTag::Base::Set: {
      std::size_t elems;
      if (decl.type.elem == TypeTag::Base::Bool)
        elems = 2;
      else if (decl.type.elem == TypeTag::Base::Int)
        elems = int_range();
      else
        elems = id_universe();
      if (elems >= 8 * sizeof(std::size_t)) return cap;
      std::size_t subsets = std::size_t{1} << elems;
      return subsets > cap ? cap : subsets;
    }
  }
  return cap;
}

}  // namespace

Dfa compile(const cpsl::TypedPolicy& policy, const CompileOptions& opts) {
  // Reject explosive variable domains up front, naming the worst offender.
  std::size_t product = 1;
  std::size_t worst_size = 0;
  std::string worst_var;
  for (std::size_t i = 0; i < policy.ast.state_decls.size(); ++i) {
    std::size_t d = domain_size(policy, i, opts.state_bound + 1);
    if (d > worst_size) {
      worst_size = d;
      worst_var = policy.decl(i).name;
    }
    if (product > (opts.state_bound + 1) / std::max<std::size_t>(d, 1))
      product = opts.state_bound + 1;
    else
      product *= d;
    if (product > opts.state_bound) throw StateSpaceExceeded(worst_var, opts.state_bound);
  }

  const Alphabet& alphabet = policy.alphabet;
  const std::size_t n_sym = alphabet.size();

  std::unordered_map<Env, uint32_t, EnvHash> ids;
  std::vector<Env> envs;           // by state id; sink has no env
  std::vector<std::string> meta;
  std::vector<std::vector<uint32_t>> rows;
  std::optional<uint32_t> sink;
  std::deque<uint32_t> work;

  auto intern = [&](const Env& env) -> uint32_t {
    auto it = ids.find(env);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(meta.size());
    ids.emplace(env, id);
    envs.push_back(env);
    meta.push_back(env.str(policy.ast.state_decls));
    rows.emplace_back();
    work.push_back(id);
    if (meta.size() > opts.state_bound + 1) throw StateSpaceExceeded(worst_var, opts.state_bound);
    return id;
  };
  auto get_sink = [&]() -> uint32_t {
    if (!sink) {
      sink = static_cast<uint32_t>(meta.size());
      envs.emplace_back();
      meta.emplace_back("sink");
      // Absorbing: filled in after BFS since the row is all-self.
      rows.emplace_back();
    }
    return *sink;
  };

  intern(policy.initial_env);
  while (!work.empty()) {
    uint32_t q = work.front();
    work.pop_front();
    Env env = envs[q];
    std::vector<uint32_t> row(n_sym);
    for (std::size_t s = 0; s < n_sym; ++s) {
      const Event& event = alphabet.at(static_cast<uint32_t>(s));
      int matches = 0;
      auto rule = cpsl::match_rule(policy, env, event,
                                   opts.overlap_warnings ? &matches : nullptr);
      if (opts.overlap_warnings && matches > 1)
        opts.overlap_warnings->push_back("rules overlap at state " + meta[q] + " on " + event.str() +
                                         " (" + std::to_string(matches) + " rules match; first wins)");
      if (!rule) {
        row[s] = get_sink();
        continue;
      }
      row[s] = intern(cpsl::apply_updates(policy, env, policy.ast.rules[*rule]));
    }
    rows[q] = std::move(row);
  }

  if (sink) rows[*sink].assign(n_sym, *sink);

  Dfa dfa;
  dfa.initial = 0;
  dfa.alphabet = alphabet;
  dfa.state_meta = std::move(meta);
  dfa.finals.resize(rows.size(), false);
  for (const auto& [env, id] : ids) dfa.finals[id] = cpsl::eval_bool(*policy.ast.accept, policy, env);
  dfa.delta.reserve(rows.size() * n_sym);
  for (const auto& row : rows) dfa.delta.insert(dfa.delta.end(), row.begin(), row.end());
  return dfa;
}

}  // namespace pryvect
