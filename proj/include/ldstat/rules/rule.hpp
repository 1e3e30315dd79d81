#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ldstat/rdf/term.hpp"

namespace ldstat::rules {

/// A triple whose positions may hold variables. Literals never appear as subject
/// and the predicate is an IRI or a variable.
class TriplePattern {
 public:
  TriplePattern(rdf::Term subject, rdf::Term predicate, rdf::Term object);

  const rdf::Term& subject() const noexcept { return subject_; }
  const rdf::Term& predicate() const noexcept { return predicate_; }
  const rdf::Term& object() const noexcept { return object_; }
  const rdf::Term& operator[](std::size_t i) const noexcept { return i == 0 ? subject_ : i == 1 ? predicate_ : object_; }

  std::string str() const;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
  friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;

 private:
  rdf::Term subject_;
  rdf::Term predicate_;
  rdf::Term object_;
};

/// A Horn rule `{ body } => { head }`. Equality ignores the label.
struct Rule {
  std::vector<TriplePattern> body;
  std::vector<TriplePattern> head;
  std::string label;

  friend bool operator==(const Rule& a, const Rule& b) { return a.body == b.body && a.head == b.head; }
};

/// Variable names occurring in the patterns, sorted.
std::set<std::string> variables_of(const std::vector<TriplePattern>& patterns);

struct SafetyReport {
  std::vector<std::string> unbound_head_variables;
  std::vector<std::string> head_blank_nodes;
  bool empty_body = false;
  bool empty_head = false;

  bool ok() const noexcept {
    return unbound_head_variables.empty() && head_blank_nodes.empty() && !empty_body && !empty_head;
  }
  /// Human-readable list of every violation; empty when ok().
  std::string describe() const;
};

/// Accepts iff every head variable occurs in the body and the head has no blank nodes.
SafetyReport check_safe(const Rule& r);

/// A set of safe rules, kept in insertion order.
class RuleSet {
 public:
  using const_iterator = std::vector<Rule>::const_iterator;

  /// Throws UnsafeRuleError for unsafe rules. Returns false for a structural duplicate.
  bool add(Rule r);
  void merge(const RuleSet& other);

  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }
  const_iterator begin() const noexcept { return rules_.begin(); }
  const_iterator end() const noexcept { return rules_.end(); }

 private:
  std::vector<Rule> rules_;
};

}  // namespace ldstat::rules
