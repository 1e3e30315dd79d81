#pragma once

#include <cstddef>

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rules/rule.hpp"

namespace ldstat::inference {

struct ClosureResult {
  rdf::Graph graph;
  /// |graph| - |input|
  std::size_t derived_count = 0;
  /// Semi-naive rounds that derived at least one new triple.
  std::size_t rounds = 0;
};

/// Least fixpoint of `rules` over `g`, by semi-naive evaluation.
ClosureResult closure(const rdf::Graph& g, const rules::RuleSet& rules);

/// Whether `goal` is in the closure of `g`, decided by goal-directed search
/// without materialising the closure.
bool backchain(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Triple& goal);

/// Greedy redundancy elimination. Visits the triples of `g` in canonical order and
/// drops each one that can be proven from the remaining triples plus `aux`.
/// `aux` (schema or vocabulary triples) takes part in proofs but is never returned.
///
/// The result is a subset of `g`, irreducible under `rules`, and
/// closure(result ∪ aux) == closure(g ∪ aux).
rdf::Graph reduce(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux = {});

struct IncrementalResult {
  rdf::Graph graph;
  /// True when the shortcut failed its closure check and `graph` came from a full reduce.
  bool fallback_used = false;
  /// Number of triples re-examined by the shortcut.
  std::size_t retested = 0;
};

/// Updates a reduce() output for a new version of the graph without re-examining
/// every triple. Starts from `prev_min` minus the deletions, adds the insertions,
/// and re-tests only the inserted triples and the kept triples that the insertions
/// could make derivable. The outcome is checked against `full` (the new version in
/// its entirety); if the closures differ, reduce(full, rules, aux) is returned instead.
IncrementalResult incremental_reduce(const rdf::Graph& prev_min, const rdf::Diff& d, const rules::RuleSet& rules,
                                     const rdf::Graph& aux, const rdf::Graph& full);

}  // namespace ldstat::inference
