#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ldstat/rules/rule.hpp"
#include "ldstat/stats/stats.hpp"

namespace ldstat::provenance {

enum class NormalisationKind { None, Closure, MiniRdf };
enum class RuleFormat { N3, DLogic, Rif };

struct RuleSource {
  RuleFormat format = RuleFormat::N3;
  /// An absolute IRI (usually file:) or a file path.
  std::string locator;

  friend bool operator==(const RuleSource&, const RuleSource&) = default;
  friend auto operator<=>(const RuleSource&, const RuleSource&) = default;
};

/// Which regime produced a statistic. MINI-RDF constraints are always empty.
struct NormalisationSpec {
  NormalisationKind kind = NormalisationKind::None;
  std::vector<RuleSource> rule_sources;

  friend bool operator==(const NormalisationSpec&, const NormalisationSpec&) = default;
};

/// Base IRI under which the `gn` terms and statistic dimensions are minted.
struct Vocabulary {
  std::string gn_base = "http://purl.org/gn#";

  std::string term(std::string_view local) const { return gn_base + std::string(local); }
};

/// Local names of the statistic dimensions under the gn base.
namespace dimension {
inline constexpr std::string_view kPublishedTriples = "publishedTriples";
inline constexpr std::string_view kClosureTriples = "closureTriples";
inline constexpr std::string_view kMinimalTriples = "minimalTriples";
inline constexpr std::string_view kRedundancy = "redundancy";
inline constexpr std::string_view kOutLinkDensityPlus = "outLinkDensityPlus";
inline constexpr std::string_view kOutLinkDensityMinus = "outLinkDensityMinus";
}  // namespace dimension

struct StatDescription {
  std::string dimension;  // full IRI
  stats::Ratio value;
  NormalisationSpec normalisation;
};

struct DescribeOptions {
  Vocabulary vocabulary;
  /// Where the data can be fetched (void:dataDump). When empty the dataset IRI is used.
  std::string data_locator;
  /// Dataset namespaces (void:uriSpace); needed to recompute out-link densities.
  std::vector<std::string> namespaces;
};

/// Turtle description of `report`: one void:Dataset carrying one void:statItem per
/// populated statistic, each with scovo:dimension, rdf:value and (unless the kind is
/// None) a gn:normalisation node listing the rule sources. Deterministic.
std::string emit_description(std::string_view dataset, const stats::StatsReport& report,
                             const NormalisationSpec& spec, const DescribeOptions& options = {});

struct Description {
  std::string dataset;
  std::string data_locator;
  std::vector<std::string> namespaces;
  NormalisationSpec normalisation;
  std::vector<StatDescription> items;
};

/// Throws ParseError for bad Turtle and DescriptionError for a bad shape.
Description read_description(std::string_view text, const Vocabulary& vocabulary = {});

using Resolver = std::function<std::string(std::string_view locator)>;

/// Rules and auxiliary schema graph assembled from a list of rule sources.
struct Regime {
  rules::RuleSet rules;
  /// Union of the description-logic graphs, owl:imports followed.
  rdf::Graph schema;
};

/// Loads N3 rule files, loads description-logic graphs following owl:imports (each
/// locator once, so import cycles terminate), and compiles the graphs to rules.
/// Throws UnsupportedError if any source is RIF.
Regime load_regime(const std::vector<RuleSource>& sources, const Resolver& resolver);

/// Re-runs the computation a description records: fetch the data, the N3 rules and
/// the description-logic graphs (following owl:imports, each loaded once), compile
/// the latter to rules, reduce with the schema as auxiliary graph, and recompute
/// every statistic. Throws UnsupportedError for RIF sources and ResolveError for
/// locators the resolver cannot serve.
stats::StatsReport recompute(std::string_view description, const Resolver& resolver,
                             const Vocabulary& vocabulary = {});

/// Values are decimals, with the exact fraction appended when the decimal is rounded.
struct Mismatch {
  std::string dimension;
  std::string stated;
  std::string recomputed;  // "n/a" when the statistic could not be recomputed
};

/// Stated values that differ (exactly) from the recomputed report.
std::vector<Mismatch> compare(const Description& stated, const stats::StatsReport& recomputed,
                              const Vocabulary& vocabulary = {});

/// `file:` IRI for a path, made absolute.
std::string file_iri(const std::filesystem::path& path);

/// Serves file IRIs and paths from the local filesystem; relative ones resolve against `base_dir`.
Resolver file_resolver(std::filesystem::path base_dir);

}  // namespace ldstat::provenance
