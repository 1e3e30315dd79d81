#include "ldstat/rdf/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace ldstat::rdf {

Graph unite(const Graph& a, const Graph& b) {
  Graph out = a;
  for (const auto& t : b) out.insert(t);
  return out;
}

Graph subtract(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& t : a)
    if (!b.contains(t)) out.insert(t);
  return out;
}

Graph intersect(const Graph& a, const Graph& b) {
  const Graph& small = a.size() <= b.size() ? a : b;
  const Graph& large = a.size() <= b.size() ? b : a;
  Graph out;
  for (const auto& t : small)
    if (large.contains(t)) out.insert(t);
  return out;
}

bool includes(const Graph& super, const Graph& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Diff Diff::normalized() const {
  const Graph both = intersect(insertions, deletions);
  if (both.empty()) return *this;
  return Diff{subtract(insertions, both), subtract(deletions, both)};
}

Graph apply_diff(const Graph& g, const Diff& d) {
  const Diff n = d.normalized();
  return unite(subtract(g, n.deletions), n.insertions);
}

Graph skolemize(const Graph& g, std::string_view scope) {
  std::string base(scope);
  while (!base.empty() && base.back() == '/') base.pop_back();
  base += "/.well-known/genid/";
  auto ground = [&](const Term& t) { return t.is_blank() ? Term::iri(base + t.value()) : t; };
  Graph out;
  for (const auto& t : g) out.insert(Triple(ground(t.subject()), t.predicate(), ground(t.object())));
  return out;
}

}  // namespace ldstat::rdf
