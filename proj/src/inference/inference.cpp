#include "ldstat/inference/inference.hpp"

#include <algorithm>
#include <vector>

#include "inference/engine.hpp"

namespace ldstat::inference {

namespace {

using detail::Dictionary;
using detail::Fact;
using detail::FactSet;
using detail::FactStore;

FactSet intern_all(const rdf::Graph& g, Dictionary& dict) {
  FactSet out;
  for (const auto& t : g) out.insert(dict.intern(t));
  return out;
}

FactSet merged(FactSet a, const FactSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

// Greedy removal over `candidates` (visited in the given order). `store` holds the
// working graph plus aux and is updated in place; `kept` mirrors the working graph.
std::size_t prune(const std::vector<rdf::Triple>& candidates, FactStore& store, FactSet& kept, const FactSet& aux,
                  const std::vector<detail::CompiledRule>& rules, Dictionary& dict) {
  std::size_t removed = 0;
  for (const auto& t : candidates) {
    const Fact f = dict.intern(t);
    if (!kept.count(f)) continue;
    if (aux.count(f)) {
      kept.erase(f);
      ++removed;
      continue;
    }
    store.erase(f);
    if (detail::Prover(store, rules, dict).prove(f)) {
      kept.erase(f);
      ++removed;
    } else {
      store.insert(f);
    }
  }
  return removed;
}

}  // namespace

ClosureResult closure(const rdf::Graph& g, const rules::RuleSet& rules) {
  Dictionary dict;
  const auto compiled = detail::compile(rules, dict);
  FactStore store(intern_all(g, dict));
  const auto stats = detail::saturate(store, compiled, dict);
  ClosureResult result;
  result.graph = dict.graph(store.facts());
  result.derived_count = result.graph.size() - g.size();
  result.rounds = stats.rounds;
  return result;
}

bool backchain(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Triple& goal) {
  Dictionary dict;
  const auto compiled = detail::compile(rules, dict);
  const FactStore store(intern_all(g, dict));
  return detail::Prover(store, compiled, dict).prove(dict.intern(goal));
}

rdf::Graph reduce(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux) {
  if (rules.empty()) return rdf::subtract(g, aux);
  Dictionary dict;
  const auto compiled = detail::compile(rules, dict);
  FactSet kept = intern_all(g, dict);
  const FactSet aux_facts = intern_all(aux, dict);
  FactStore store(merged(kept, aux_facts));
  const std::vector<rdf::Triple> order(g.begin(), g.end());
  prune(order, store, kept, aux_facts, compiled, dict);
  return dict.graph(kept);
}

IncrementalResult incremental_reduce(const rdf::Graph& prev_min, const rdf::Diff& d, const rules::RuleSet& rules,
                                     const rdf::Graph& aux, const rdf::Graph& full) {
  const rdf::Diff diff = d.normalized();
  IncrementalResult result;
  const rdf::Graph intermediate = rdf::subtract(prev_min, diff.deletions);
  if (rules.empty()) {
    result.graph = rdf::subtract(rdf::unite(intermediate, diff.insertions), aux);
  } else {
    Dictionary dict;
    const auto compiled = detail::compile(rules, dict);
    const FactSet aux_facts = intern_all(aux, dict);
    FactSet kept = intern_all(intermediate, dict);
    FactSet inserted;
    for (const auto& t : diff.insertions) {
      const Fact f = dict.intern(t);
      if (kept.insert(f).second) inserted.insert(f);
    }

    // Triples already kept were irreducible before the change; only derivations
    // that use an inserted triple can make them redundant now.
    FactStore store(merged(kept, aux_facts));
    FactStore closed = store;
    detail::saturate(closed, compiled, dict);
    const FactSet touched = detail::derivable_from(closed, inserted, compiled, dict);

    std::vector<rdf::Triple> retest;
    for (const auto& f : kept)
      if (touched.count(f)) retest.push_back(dict.triple(f));
    std::sort(retest.begin(), retest.end());
    result.retested = retest.size();
    prune(retest, store, kept, aux_facts, compiled, dict);
    result.graph = dict.graph(kept);
  }

  if (closure(rdf::unite(result.graph, aux), rules).graph != closure(rdf::unite(full, aux), rules).graph) {
    result.graph = reduce(full, rules, aux);
    result.fallback_used = true;
  }
  return result;
}

}  // namespace ldstat::inference
