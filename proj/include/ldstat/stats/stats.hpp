#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rules/rule.hpp"

namespace ldstat::stats {

using Ratio = boost::rational<std::int64_t>;

/// Decimal rendering with at most `max_digits` fractional digits, rounded half to
/// even, trailing zeros trimmed but at least one fractional digit kept ("0.5", "1.0").
std::string to_decimal(const Ratio& r, int max_digits = 6);
/// Parses "3", "0.25", "-1.5" or "1/3" exactly. Throws std::invalid_argument.
Ratio parse_ratio(std::string_view text);

/// IRI prefixes owned by a dataset. Non-empty, absolute, and no prefix nests inside another.
class NamespaceDecl {
 public:
  /// Throws StatsError on an invalid declaration.
  explicit NamespaceDecl(std::vector<std::string> prefixes);

  const std::vector<std::string>& prefixes() const noexcept { return prefixes_; }
  bool owns(const rdf::Term& t) const;

 private:
  std::vector<std::string> prefixes_;
};

struct StatsReport {
  std::size_t published_cardinality = 0;
  std::optional<std::size_t> closure_cardinality;
  std::optional<std::size_t> minimal_cardinality;
  std::optional<Ratio> redundancy;
  std::optional<Ratio> out_link_density_plus;
  std::optional<Ratio> out_link_density_minus;
  bool fallback_used = false;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

/// The dataset's own part of closure(g ∪ aux): every closure triple except the aux
/// triples that g does not itself publish.
rdf::Graph dataset_closure(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux);

/// 1 - |reduce(g, rules, aux)| / |g|. Throws StatsError for an empty graph.
Ratio redundancy(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux);

/// Triples whose subject is an IRI inside the dataset's namespaces and whose object
/// is an IRI outside all of them.
rdf::Graph out_links(const rdf::Graph& g, const NamespaceDecl& ns);

enum class DensityMode { Plus, Minus };

/// |out_links(N)| / |N| where N is the dataset closure (Plus) or the reduce output (Minus).
/// Throws StatsError when N is empty.
Ratio out_link_density(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux,
                       const NamespaceDecl& ns, DensityMode mode);

/// Published, closure and minimal cardinalities plus redundancy, all under the same
/// rules and aux graph; out-link densities too when `ns` is given. D- stays unset
/// when every published triple is an aux triple and the minimal graph is empty.
StatsReport compute_stats(const rdf::Graph& g, const rules::RuleSet& rules, const rdf::Graph& aux,
                          const std::optional<NamespaceDecl>& ns = std::nullopt);

}  // namespace ldstat::stats
