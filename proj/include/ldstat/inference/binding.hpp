#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rules/rule.hpp"

namespace ldstat::inference {

/// A partial map from variable names to ground terms.
class Binding {
 public:
  /// False if `name` is already bound to a different term.
  bool bind(const std::string& name, const rdf::Term& value);
  const rdf::Term* lookup(const std::string& name) const;
  std::size_t size() const noexcept { return values_.size(); }

  /// The ground triple for `p`, or nullopt if some variable of `p` is unbound.
  std::optional<rdf::Triple> apply(const rules::TriplePattern& p) const;

  friend bool operator==(const Binding&, const Binding&) = default;

 private:
  std::map<std::string, rdf::Term> values_;
};

/// Every binding of the variables of `p` under which `p` becomes a triple of `g`.
std::vector<Binding> match(const rules::TriplePattern& p, const rdf::Graph& g);

}  // namespace ldstat::inference
