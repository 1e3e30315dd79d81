#include "inference/engine.hpp"

#include <map>

namespace ldstat::inference::detail {

Id Dictionary::intern(const rdf::Term& t) {
  const auto [it, inserted] = ids_.try_emplace(t.str(), static_cast<Id>(terms_.size()));
  if (inserted) {
    terms_.push_back(t);
    can_subject_.push_back(t.is_iri() || t.is_blank());
    can_predicate_.push_back(t.is_iri());
  }
  return it->second;
}

std::optional<Id> Dictionary::find(const rdf::Term& t) const {
  if (const auto it = ids_.find(t.str()); it != ids_.end()) return it->second;
  return std::nullopt;
}

rdf::Graph Dictionary::graph(const FactSet& facts) const {
  rdf::Graph g;
  for (const auto& f : facts) g.insert(triple(f));
  return g;
}

std::vector<CompiledRule> compile(const rules::RuleSet& rules, Dictionary& dict) {
  std::vector<CompiledRule> out;
  out.reserve(rules.size());
  for (const auto& rule : rules) {
    std::map<std::string, Id> slots;
    auto pattern = [&](const rules::TriplePattern& tp) {
      Pattern p;
      for (std::size_t i = 0; i < 3; ++i) {
        if (tp[i].is_variable()) {
          const auto [it, _] = slots.try_emplace(tp[i].value(), static_cast<Id>(slots.size()));
          p[i] = Slot{true, it->second};
        } else {
          p[i] = Slot{false, dict.intern(tp[i])};
        }
      }
      return p;
    };
    CompiledRule c;
    for (const auto& tp : rule.body) c.body.push_back(pattern(tp));
    for (const auto& tp : rule.head) c.head.push_back(pattern(tp));
    c.num_vars = slots.size();
    out.push_back(std::move(c));
  }
  return out;
}

bool FactStore::insert(const Fact& f) {
  if (!all_.insert(f).second) return false;
  for (std::size_t i = 0; i < 3; ++i) index_[i][f[i]].insert(f);
  return true;
}

bool FactStore::erase(const Fact& f) {
  if (all_.erase(f) == 0) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    auto it = index_[i].find(f[i]);
    it->second.erase(f);
    if (it->second.empty()) index_[i].erase(it);
  }
  return true;
}

bool unify(const Pattern& p, const Fact& f, Bindings& b, std::array<Id, 3>& fresh) {
  fresh = {kUnbound, kUnbound, kUnbound};
  for (std::size_t i = 0; i < 3; ++i) {
    const Slot& s = p[i];
    if (!s.variable) {
      if (s.id != f[i]) {
        unbind(fresh, b);
        return false;
      }
    } else if (b[s.id] == kUnbound) {
      b[s.id] = f[i];
      fresh[i] = s.id;
    } else if (b[s.id] != f[i]) {
      unbind(fresh, b);
      return false;
    }
  }
  return true;
}

void unbind(const std::array<Id, 3>& fresh, Bindings& b) {
  for (const Id v : fresh)
    if (v != kUnbound) b[v] = kUnbound;
}

Fact instantiate(const Pattern& p, const Bindings& b) {
  auto value = [&](const Slot& s) { return s.variable ? b[s.id] : s.id; };
  return {value(p[0]), value(p[1]), value(p[2])};
}

namespace {

std::array<Id, 3> query_of(const Pattern& p, const Bindings& b) {
  std::array<Id, 3> q;
  for (std::size_t i = 0; i < 3; ++i) q[i] = p[i].variable ? b[p[i].id] : p[i].id;
  return q;
}

// Enumerates the body of `rule` with position `delta_at` drawn from `delta`, earlier
// positions from `store` minus `delta` (when `exclude_delta_before`) and later ones from
// `store`; calls on_head(fact) for every head instance.
template <typename OnHead>
void join(const CompiledRule& rule, std::size_t j, std::size_t delta_at, const FactStore& store,
          const FactStore& delta, bool exclude_delta_before, Bindings& b, OnHead& on_head) {
  if (j == rule.body.size()) {
    for (const auto& h : rule.head) on_head(instantiate(h, b));
    return;
  }
  const Pattern& p = rule.body[j];
  const FactStore& source = j == delta_at ? delta : store;
  const bool skip_delta = exclude_delta_before && j < delta_at;
  source.for_each_match(query_of(p, b), [&](const Fact& f) {
    if (skip_delta && delta.contains(f)) return;
    std::array<Id, 3> fresh;
    if (!unify(p, f, b, fresh)) return;
    join(rule, j + 1, delta_at, store, delta, exclude_delta_before, b, on_head);
    unbind(fresh, b);
  });
}

}  // namespace

FixpointStats saturate(FactStore& store, const std::vector<CompiledRule>& rules, const Dictionary& dict) {
  FixpointStats stats;
  FactSet delta = store.facts();
  while (!delta.empty()) {
    const FactStore delta_store(delta);
    FactSet fresh;
    auto on_head = [&](const Fact& f) {
      if (dict.well_formed(f) && !store.contains(f)) fresh.insert(f);
    };
    for (const auto& rule : rules) {
      Bindings b(rule.num_vars, kUnbound);
      for (std::size_t i = 0; i < rule.body.size(); ++i) join(rule, 0, i, store, delta_store, true, b, on_head);
    }
    for (const auto& f : fresh) store.insert(f);
    if (!fresh.empty()) ++stats.rounds;
    delta = std::move(fresh);
  }
  return stats;
}

FactSet derivable_from(const FactStore& closed, const FactSet& seeds, const std::vector<CompiledRule>& rules,
                       const Dictionary& dict) {
  FactSet reached = seeds;
  FactSet delta = seeds;
  while (!delta.empty()) {
    const FactStore delta_store(delta);
    FactSet fresh;
    auto on_head = [&](const Fact& f) {
      if (dict.well_formed(f) && !reached.count(f)) fresh.insert(f);
    };
    for (const auto& rule : rules) {
      Bindings b(rule.num_vars, kUnbound);
      for (std::size_t i = 0; i < rule.body.size(); ++i) join(rule, 0, i, closed, delta_store, false, b, on_head);
    }
    reached.insert(fresh.begin(), fresh.end());
    delta = std::move(fresh);
  }
  return reached;
}

Prover::Key Prover::key_of(const Pattern& p, const Bindings& b) {
  Key key;
  std::array<Id, 3> seen_vars{kUnbound, kUnbound, kUnbound};
  Id next_marker = kVar0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Slot& s = p[i];
    if (!s.variable) {
      key[i] = s.id;
    } else if (b[s.id] != kUnbound) {
      key[i] = b[s.id];
    } else {
      key[i] = next_marker;
      for (std::size_t j = 0; j < i; ++j)
        if (seen_vars[j] == s.id) key[i] = key[j];
      if (key[i] == next_marker) ++next_marker;
      seen_vars[i] = s.id;
    }
  }
  return key;
}

bool Prover::matches(const Key& key, const Fact& f) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (key[i] < kVar0) {
      if (f[i] != key[i]) return false;
    } else {
      for (std::size_t j = 0; j < i; ++j)
        if (key[j] == key[i] && f[j] != f[i]) return false;
    }
  }
  return true;
}

Prover::Table& Prover::call(const Key& key) {
  auto& slot = tables_[key];
  if (!slot) slot = std::make_unique<Table>();
  Table& table = *slot;
  if (!table.active && table.pass != pass_) evaluate(key, table);
  return table;
}

void Prover::add_answer(Table& table, const Fact& f) {
  if (!table.seen.insert(f).second) return;
  table.answers.push_back(f);
  ++answers_added_;
  if (f == target_) found_ = true;
}

void Prover::evaluate(const Key& key, Table& table) {
  table.pass = pass_;
  table.active = true;
  std::array<Id, 3> query;
  for (std::size_t i = 0; i < 3; ++i) query[i] = key[i] < kVar0 ? key[i] : kUnbound;
  store_.for_each_match(query, [&](const Fact& f) {
    if (matches(key, f)) add_answer(table, f);
  });
  for (const auto& rule : rules_) {
    for (const auto& head : rule.head) {
      if (found_) break;
      Bindings b(rule.num_vars, kUnbound);
      bool compatible = true;
      for (std::size_t i = 0; i < 3 && compatible; ++i) {
        if (key[i] >= kVar0) continue;
        if (!head[i].variable) {
          compatible = head[i].id == key[i];
        } else if (b[head[i].id] == kUnbound) {
          b[head[i].id] = key[i];
        } else {
          compatible = b[head[i].id] == key[i];
        }
      }
      if (compatible) solve_body(rule, 0, b, head, key, table);
    }
  }
  table.active = false;
}

void Prover::solve_body(const CompiledRule& rule, std::size_t j, Bindings& b, const Pattern& head, const Key& key,
                        Table& table) {
  if (found_) return;
  if (j == rule.body.size()) {
    const Fact f = instantiate(head, b);
    if (dict_.well_formed(f) && matches(key, f)) add_answer(table, f);
    return;
  }
  const Pattern& p = rule.body[j];
  const Table& sub = call(key_of(p, b));
  for (std::size_t i = 0; i < sub.answers.size() && !found_; ++i) {
    const Fact a = sub.answers[i];
    std::array<Id, 3> fresh;
    if (!unify(p, a, b, fresh)) continue;
    solve_body(rule, j + 1, b, head, key, table);
    unbind(fresh, b);
  }
}

bool Prover::prove(const Fact& goal) {
  if (store_.contains(goal)) return true;
  target_ = goal;
  found_ = false;
  const Key top{goal.s, goal.p, goal.o};
  while (true) {
    ++pass_;
    const std::size_t before = answers_added_;
    call(top);
    if (found_) return true;
    if (answers_added_ == before) return false;
  }
}

}  // namespace ldstat::inference::detail
