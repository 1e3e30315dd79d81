#pragma once

// Interned fact storage, rule compilation and the two evaluation strategies
// (bottom-up semi-naive closure and top-down tabled proof search).

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rules/rule.hpp"

namespace ldstat::inference::detail {

using Id = std::uint32_t;
inline constexpr Id kUnbound = std::numeric_limits<Id>::max();

struct Fact {
  Id s = 0, p = 0, o = 0;
  Id operator[](std::size_t i) const noexcept { return i == 0 ? s : i == 1 ? p : o; }
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct FactHash {
  std::size_t operator()(const Fact& f) const noexcept {
    std::uint64_t h = (std::uint64_t{f.s} << 32) ^ (std::uint64_t{f.p} << 16) ^ f.o;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

using FactSet = std::unordered_set<Fact, FactHash>;

class Dictionary {
 public:
  Id intern(const rdf::Term& t);
  std::optional<Id> find(const rdf::Term& t) const;
  const rdf::Term& term(Id id) const { return terms_[id]; }

  Fact intern(const rdf::Triple& t) { return {intern(t.subject()), intern(t.predicate()), intern(t.object())}; }
  rdf::Triple triple(const Fact& f) const { return rdf::Triple(term(f.s), term(f.p), term(f.o)); }
  rdf::Graph graph(const FactSet& facts) const;

  /// False for rule instances that would put a literal in subject position or a
  /// non-IRI in predicate position; such instances are never derived.
  bool well_formed(const Fact& f) const { return can_subject_[f.s] && can_predicate_[f.p]; }

 private:
  std::vector<rdf::Term> terms_;
  std::vector<bool> can_subject_;
  std::vector<bool> can_predicate_;
  std::unordered_map<std::string, Id> ids_;
};

/// A pattern position: a constant term id, or a variable slot index.
struct Slot {
  bool variable = false;
  Id id = 0;
};
using Pattern = std::array<Slot, 3>;

struct CompiledRule {
  std::vector<Pattern> body;
  std::vector<Pattern> head;
  std::size_t num_vars = 0;
};

std::vector<CompiledRule> compile(const rules::RuleSet& rules, Dictionary& dict);

using Bindings = std::vector<Id>;

/// Fact set with per-position indexes; supports removal so reduce can toggle candidates.
class FactStore {
 public:
  FactStore() = default;
  explicit FactStore(const FactSet& facts) {
    for (const auto& f : facts) insert(f);
  }

  bool insert(const Fact& f);
  bool erase(const Fact& f);
  bool contains(const Fact& f) const { return all_.count(f) > 0; }
  std::size_t size() const noexcept { return all_.size(); }
  const FactSet& facts() const noexcept { return all_; }

  /// Calls fn(fact) for each fact agreeing with every non-kUnbound position of `query`.
  template <typename Fn>
  void for_each_match(const std::array<Id, 3>& query, Fn&& fn) const {
    if (query[0] != kUnbound && query[1] != kUnbound && query[2] != kUnbound) {
      const Fact f{query[0], query[1], query[2]};
      if (contains(f)) fn(f);
      return;
    }
    const FactSet* bucket = &all_;
    for (std::size_t i = 0; i < 3; ++i) {
      if (query[i] == kUnbound) continue;
      const auto it = index_[i].find(query[i]);
      if (it == index_[i].end()) return;
      if (it->second.size() < bucket->size()) bucket = &it->second;
    }
    for (const auto& f : *bucket)
      if ((query[0] == kUnbound || f.s == query[0]) && (query[1] == kUnbound || f.p == query[1]) &&
          (query[2] == kUnbound || f.o == query[2]))
        fn(f);
  }

 private:
  FactSet all_;
  std::array<std::unordered_map<Id, FactSet>, 3> index_;
};

/// Binds the unbound variables of `p` to the matching positions of `f`. Returns
/// false (leaving `b` untouched) on a clash; otherwise records fresh bindings in `fresh`.
bool unify(const Pattern& p, const Fact& f, Bindings& b, std::array<Id, 3>& fresh);
void unbind(const std::array<Id, 3>& fresh, Bindings& b);
/// The fact obtained by substituting `b` into a pattern whose variables are all bound.
Fact instantiate(const Pattern& p, const Bindings& b);

struct FixpointStats {
  std::size_t rounds = 0;
};

/// Extends `store` to the least fixpoint of `rules` by semi-naive iteration.
FixpointStats saturate(FactStore& store, const std::vector<CompiledRule>& rules, const Dictionary& dict);

/// Facts of `closed` that have at least one derivation using a fact of `seeds`
/// (seeds included). `closed` must already be a fixpoint of `rules`.
FactSet derivable_from(const FactStore& closed, const FactSet& seeds, const std::vector<CompiledRule>& rules,
                       const Dictionary& dict);

/// Goal-directed proof search over a fixed store.
///
/// Subgoals are triple patterns. Each distinct subgoal (up to variable renaming)
/// owns an answer table; a subgoal already being solved, or already solved in the
/// current pass, is answered from its table instead of being re-entered, which is
/// what terminates inverse/symmetric/transitive cycles. Passes repeat until the
/// goal is found or no table grows, at which point every table holds exactly the
/// closure facts matching its pattern.
class Prover {
 public:
  Prover(const FactStore& store, const std::vector<CompiledRule>& rules, const Dictionary& dict)
      : store_(store), rules_(rules), dict_(dict) {}

  bool prove(const Fact& goal);

 private:
  using Key = std::array<Id, 3>;  // constants, or kVar0 + k for the k-th distinct variable
  static constexpr Id kVar0 = kUnbound - 3;

  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return FactHash{}(Fact{k[0], k[1], k[2]}); }
  };
  struct Table {
    std::vector<Fact> answers;
    FactSet seen;
    std::size_t pass = 0;
    bool active = false;
  };

  static Key key_of(const Pattern& p, const Bindings& b);
  static bool matches(const Key& key, const Fact& f);
  Table& call(const Key& key);
  void evaluate(const Key& key, Table& table);
  void solve_body(const CompiledRule& rule, std::size_t j, Bindings& b, const Pattern& head, const Key& key,
                  Table& table);
  void add_answer(Table& table, const Fact& f);

  const FactStore& store_;
  const std::vector<CompiledRule>& rules_;
  const Dictionary& dict_;
  std::unordered_map<Key, std::unique_ptr<Table>, KeyHash> tables_;
  std::size_t pass_ = 0;
  std::size_t answers_added_ = 0;
  Fact target_;
  bool found_ = false;
};

}  // namespace ldstat::inference::detail
