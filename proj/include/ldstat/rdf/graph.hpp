#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string_view>

#include "ldstat/rdf/term.hpp"

namespace ldstat::rdf {

/// A duplicate-free set of ground triples, iterated in canonical order
/// (subject, predicate, object; each term compared by its N-Triples form).
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}
  template <typename It>
  Graph(It first, It last) : triples_(first, last) {}

  /// Returns false if the triple was already present.
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Triple> triples_;
};

/// |g|
inline std::size_t cardinality(const Graph& g) noexcept { return g.size(); }

Graph unite(const Graph& a, const Graph& b);
Graph subtract(const Graph& a, const Graph& b);
Graph intersect(const Graph& a, const Graph& b);
/// True when every triple of `sub` is in `super`.
bool includes(const Graph& super, const Graph& sub);

/// A change between two versions of a graph: triples to insert and to delete.
struct Diff {
  Graph insertions;
  Graph deletions;

  /// Drops triples that appear in both insertions and deletions.
  Diff normalized() const;
};

/// (g minus deletions) union insertions, after normalising the diff.
Graph apply_diff(const Graph& g, const Diff& d);

/// Replaces each blank node `_:x` with `<scope>/.well-known/genid/x`.
Graph skolemize(const Graph& g, std::string_view scope);

}  // namespace ldstat::rdf
