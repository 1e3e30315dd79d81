#include <gtest/gtest.h>

#include <map>

#include "ldstat/error.hpp"
#include "ldstat/provenance/provenance.hpp"
#include "test_support.hpp"

namespace ldstat::provenance {
namespace {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
using stats::Ratio;
using stats::StatsReport;

const std::string kDataset = "http://example.org/dataset";

std::string fixture_iri(const std::string& name) { return file_iri(testing::fixture_path(name)); }

StatsReport foaf_report() {
  StatsReport r;
  r.published_cardinality = 4;
  r.closure_cardinality = 4;
  r.minimal_cardinality = 2;
  r.redundancy = Ratio(1, 2);
  return r;
}

NormalisationSpec foaf_spec() {
  return {NormalisationKind::MiniRdf,
          {{RuleFormat::N3, fixture_iri("rdfs_domain_range.n3")}, {RuleFormat::DLogic, fixture_iri("foaf_schema.ttl")}}};
}

DescribeOptions foaf_options() { return {.vocabulary = {}, .data_locator = fixture_iri("foaf_data.ttl"), .namespaces = {}}; }

std::size_t count(const Graph& g, const std::string& predicate) {
  std::size_t n = 0;
  for (const auto& t : g) n += t.predicate().value() == predicate;
  return n;
}

TEST(EmitTest, ShapeOfFoafDescription) {
  const std::string text = emit_description(kDataset, foaf_report(), foaf_spec(), foaf_options());
  const Graph g = rdf::parse_turtle(text, {.anonymous_nodes = true});
  EXPECT_TRUE(g.contains(Triple(Term::iri(kDataset), testing::type(), Term::iri("http://rdfs.org/ns/void#Dataset"))));
  EXPECT_EQ(count(g, "http://rdfs.org/ns/void#statItem"), 4u);
  EXPECT_EQ(count(g, "http://purl.org/NET/scovo#dimension"), 4u);
  EXPECT_EQ(count(g, std::string(vocab::kRdf) + "value"), 4u);
  EXPECT_EQ(count(g, "http://purl.org/gn#normalisation"), 4u);
  EXPECT_EQ(count(g, "http://purl.org/gn#constraints"), 4u);
  EXPECT_TRUE(g.contains(Triple(Term::iri(kDataset), Term::iri("http://rdfs.org/ns/void#dataDump"),
                                Term::iri(fixture_iri("foaf_data.ttl")))));
}

TEST(EmitTest, PublishedOnlyWithoutNormalisation) {
  StatsReport r;
  r.published_cardinality = 4;
  const std::string text = emit_description(kDataset, r, {});
  const Graph g = rdf::parse_turtle(text, {.anonymous_nodes = true});
  EXPECT_EQ(count(g, "http://rdfs.org/ns/void#statItem"), 1u);
  EXPECT_EQ(count(g, "http://purl.org/gn#normalisation"), 0u);
  const Description d = read_description(text);
  ASSERT_EQ(d.items.size(), 1u);
  EXPECT_EQ(d.items[0].dimension, "http://purl.org/gn#publishedTriples");
  EXPECT_EQ(d.items[0].value, Ratio(4));
  EXPECT_EQ(d.items[0].normalisation.kind, NormalisationKind::None);
}

TEST(EmitTest, NoneKindRejectsRuleSources) {
  EXPECT_THROW(emit_description(kDataset, foaf_report(), {NormalisationKind::None, {{RuleFormat::N3, "file:///r.n3"}}}),
               std::invalid_argument);
}

TEST(EmitTest, DeterministicAndOrderIndependent) {
  NormalisationSpec reversed = foaf_spec();
  std::reverse(reversed.rule_sources.begin(), reversed.rule_sources.end());
  const std::string a = emit_description(kDataset, foaf_report(), foaf_spec(), foaf_options());
  EXPECT_EQ(a, emit_description(kDataset, foaf_report(), foaf_spec(), foaf_options()));
  EXPECT_EQ(a, emit_description(kDataset, foaf_report(), reversed, foaf_options()));
}

TEST(EmitTest, InexactValuesCarryExactForm) {
  StatsReport r = foaf_report();
  r.redundancy = Ratio(1, 3);
  const std::string text = emit_description(kDataset, r, foaf_spec(), foaf_options());
  EXPECT_NE(text.find("0.333333"), std::string::npos);
  const Description d = read_description(text);
  for (const auto& item : d.items)
    if (item.dimension == "http://purl.org/gn#redundancy") EXPECT_EQ(item.value, Ratio(1, 3));
}

TEST(EmitTest, CustomVocabularyBase) {
  DescribeOptions opts = foaf_options();
  opts.vocabulary.gn_base = "http://example.org/gn/";
  const std::string text = emit_description(kDataset, foaf_report(), foaf_spec(), opts);
  EXPECT_NE(text.find("<http://example.org/gn/>"), std::string::npos);
  EXPECT_EQ(text.find("purl.org/gn"), std::string::npos);
  EXPECT_THROW(read_description(text), DescriptionError);
  EXPECT_EQ(read_description(text, opts.vocabulary).items.size(), 4u);
}

TEST(ReadDescriptionTest, RoundTrip) {
  DescribeOptions opts = foaf_options();
  opts.namespaces = {"http://example.org/"};
  StatsReport r = foaf_report();
  r.out_link_density_plus = Ratio(0);
  r.out_link_density_minus = Ratio(0);
  const Description d = read_description(emit_description(kDataset, r, foaf_spec(), opts));
  EXPECT_EQ(d.dataset, kDataset);
  EXPECT_EQ(d.data_locator, opts.data_locator);
  EXPECT_EQ(d.namespaces, opts.namespaces);
  EXPECT_EQ(d.normalisation.kind, NormalisationKind::MiniRdf);
  NormalisationSpec sorted = foaf_spec();
  std::sort(sorted.rule_sources.begin(), sorted.rule_sources.end());
  EXPECT_EQ(d.normalisation, sorted);
  std::map<std::string, Ratio> values;
  for (const auto& item : d.items) values[item.dimension] = item.value;
  EXPECT_EQ(values.size(), 6u);
  EXPECT_EQ(values["http://purl.org/gn#minimalTriples"], Ratio(2));
  EXPECT_EQ(values["http://purl.org/gn#redundancy"], Ratio(1, 2));
  EXPECT_TRUE(compare(d, r).empty());
}

TEST(ReadDescriptionTest, ClosureKindRoundTrips) {
  const NormalisationSpec spec{NormalisationKind::Closure, {{RuleFormat::N3, "file:///r.n3"}}};
  const Description d = read_description(emit_description(kDataset, foaf_report(), spec));
  EXPECT_EQ(d.normalisation, spec);
}

TEST(ReadDescriptionTest, BadShapes) {
  EXPECT_THROW(read_description("<http://e.org/a> <http://e.org/p> <http://e.org/b> ."), DescriptionError);
  EXPECT_THROW(read_description("this is not turtle"), ParseError);
  const std::string no_value = R"(@prefix void: <http://rdfs.org/ns/void#> .
@prefix scovo: <http://purl.org/NET/scovo#> .
<http://e.org/d> a void:Dataset ; void:statItem [ scovo:dimension <http://purl.org/gn#redundancy> ] .)";
  EXPECT_THROW(read_description(no_value), DescriptionError);
  const std::string unknown_dimension = R"(@prefix void: <http://rdfs.org/ns/void#> .
@prefix scovo: <http://purl.org/NET/scovo#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
<http://e.org/d> a void:Dataset ; void:statItem [ scovo:dimension <http://purl.org/gn#colour> ; rdf:value 1 ] .)";
  EXPECT_THROW(read_description(unknown_dimension), DescriptionError);
}

TEST(RegimeTest, ImportCyclesLoadEachOntologyOnce) {
  std::map<std::string, int> fetched;
  const Resolver base = file_resolver(LDSTAT_FIXTURES);
  const Resolver counting = [&](std::string_view locator) {
    ++fetched[std::string(locator)];
    return base(locator);
  };
  const Regime regime = load_regime({{RuleFormat::DLogic, fixture_iri("ontology_main.ttl")}}, counting);
  EXPECT_EQ(fetched.size(), 2u);
  for (const auto& [locator, n] : fetched) EXPECT_EQ(n, 1) << locator;
  const testing::FoafFixture f;
  EXPECT_TRUE(rdf::includes(regime.schema, f.schema()));
  EXPECT_EQ(regime.rules.size(), 2u);
}

TEST(RegimeTest, RifIsUnsupported) {
  EXPECT_THROW(load_regime({{RuleFormat::Rif, fixture_iri("rules.rif")}}, file_resolver(LDSTAT_FIXTURES)),
               UnsupportedError);
}

TEST(RegimeTest, RemoteLocatorsAreNotResolved) {
  EXPECT_THROW(file_resolver(".")("http://example.org/rules.n3"), ResolveError);
  EXPECT_THROW(file_resolver(".")("file:///definitely/not/here.n3"), ResolveError);
}

TEST(RegimeTest, RelativePathsUseBaseDirectory) {
  EXPECT_EQ(file_resolver(LDSTAT_FIXTURES)("links.ttl"), testing::read_fixture("links.ttl"));
}

TEST(RecomputeTest, FoafDescriptionReproduces) {
  const std::string text = emit_description(kDataset, foaf_report(), foaf_spec(), foaf_options());
  const StatsReport again = recompute(text, file_resolver(LDSTAT_FIXTURES));
  EXPECT_EQ(again.published_cardinality, 4u);
  EXPECT_EQ(again.closure_cardinality, 4u);
  EXPECT_EQ(again.minimal_cardinality, 2u);
  EXPECT_EQ(again.redundancy, Ratio(1, 2));
  EXPECT_TRUE(compare(read_description(text), again).empty());
}

TEST(RecomputeTest, RifSourceIsUnsupported) {
  const NormalisationSpec spec{NormalisationKind::MiniRdf, {{RuleFormat::Rif, fixture_iri("rules.rif")}}};
  const std::string text = emit_description(kDataset, foaf_report(), spec, foaf_options());
  EXPECT_THROW(recompute(text, file_resolver(LDSTAT_FIXTURES)), UnsupportedError);
}

TEST(CompareTest, ReportsDifferingDimensions) {
  StatsReport stated = foaf_report();
  stated.redundancy = Ratio(2, 5);
  const Description d = read_description(emit_description(kDataset, stated, foaf_spec(), foaf_options()));
  const auto mismatches = compare(d, foaf_report());
  ASSERT_EQ(mismatches.size(), 1u);
  EXPECT_EQ(mismatches[0].dimension, "http://purl.org/gn#redundancy");
  EXPECT_EQ(mismatches[0].stated, "0.4");
  EXPECT_EQ(mismatches[0].recomputed, "0.5");
}

TEST(CompareTest, MissingRecomputationIsReported) {
  StatsReport stated = foaf_report();
  stated.out_link_density_plus = Ratio(1, 4);
  const Description d = read_description(emit_description(kDataset, stated, foaf_spec(), foaf_options()));
  const auto mismatches = compare(d, foaf_report());
  ASSERT_EQ(mismatches.size(), 1u);
  EXPECT_EQ(mismatches[0].recomputed, "n/a");
}

TEST(ProvenancePropertyTest, EmitReadRoundTrip) {
  std::mt19937 rng(307);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(1, n)(rng); };
  for (int i = 0; i < 200; ++i) {
    StatsReport r;
    r.published_cardinality = static_cast<std::size_t>(pick(1000));
    if (pick(2) == 1) r.closure_cardinality = pick(1000);
    if (pick(2) == 1) r.minimal_cardinality = pick(1000);
    if (pick(2) == 1) r.redundancy = Ratio(pick(50) - 1, pick(50));
    if (pick(2) == 1) r.out_link_density_plus = Ratio(pick(7) - 1, pick(7));
    if (pick(2) == 1) r.out_link_density_minus = Ratio(pick(9) - 1, pick(9));
    NormalisationSpec spec;
    if (pick(3) > 1) {
      spec.kind = pick(2) == 1 ? NormalisationKind::Closure : NormalisationKind::MiniRdf;
      for (int k = pick(3); k > 0; --k)
        spec.rule_sources.push_back({pick(2) == 1 ? RuleFormat::N3 : RuleFormat::DLogic,
                                     "file:///rules/" + std::to_string(pick(5)) + ".n3"});
      std::sort(spec.rule_sources.begin(), spec.rule_sources.end());
      spec.rule_sources.erase(std::unique(spec.rule_sources.begin(), spec.rule_sources.end()), spec.rule_sources.end());
    }
    const std::string text = emit_description(kDataset, r, spec);
    const Description d = read_description(text);
    EXPECT_EQ(d.normalisation, spec);
    EXPECT_TRUE(compare(d, r).empty()) << text;
  }
}

}  // namespace
}  // namespace ldstat::provenance
