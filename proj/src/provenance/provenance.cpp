#include "ldstat/provenance/provenance.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ldstat/error.hpp"
#include "ldstat/rdf/turtle.hpp"
#include "ldstat/rdf/vocab.hpp"
#include "ldstat/rules/parse.hpp"
#include "ldstat/rules/schema.hpp"

namespace ldstat::provenance {

namespace {

using stats::Ratio;

struct Item {
  std::string_view local;
  Ratio value;
  bool integral;
};

std::vector<Item> items_of(const stats::StatsReport& r) {
  auto count = [](std::size_t n) { return Ratio(static_cast<std::int64_t>(n)); };
  std::vector<Item> items{{dimension::kPublishedTriples, count(r.published_cardinality), true}};
  if (r.closure_cardinality) items.push_back({dimension::kClosureTriples, count(*r.closure_cardinality), true});
  if (r.minimal_cardinality) items.push_back({dimension::kMinimalTriples, count(*r.minimal_cardinality), true});
  if (r.redundancy) items.push_back({dimension::kRedundancy, *r.redundancy, false});
  if (r.out_link_density_plus) items.push_back({dimension::kOutLinkDensityPlus, *r.out_link_density_plus, false});
  if (r.out_link_density_minus)
    items.push_back({dimension::kOutLinkDensityMinus, *r.out_link_density_minus, false});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.local < b.local; });
  return items;
}

std::string locator_term(const std::string& locator) {
  if (rdf::is_absolute_iri(locator)) return rdf::Term::iri(locator).str();
  return rdf::Term::literal(locator).str();
}

const char* format_local(RuleFormat f) {
  switch (f) {
    case RuleFormat::N3: return "n3";
    case RuleFormat::DLogic: return "dlogic";
    case RuleFormat::Rif: return "rif";
  }
  return "n3";
}

void emit_normalisation(std::ostringstream& out, const NormalisationSpec& spec, const std::string& indent) {
  out << indent << "gn:normalisation [\n";
  out << indent << "    a " << (spec.kind == NormalisationKind::Closure ? "gn:Closure" : "gn:MiniRDF") << " ;\n";
  if (spec.kind == NormalisationKind::MiniRdf) out << indent << "    gn:constraints rdf:nil ;\n";
  out << indent << "    gn:rules [\n";
  out << indent << "        a gn:RuleSet";
  auto sources = spec.rule_sources;
  std::sort(sources.begin(), sources.end());
  for (const auto& s : sources) out << " ;\n" << indent << "        gn:" << format_local(s.format) << " " << locator_term(s.locator);
  out << "\n" << indent << "    ]\n";
  out << indent << "]";
}

}  // namespace

std::string emit_description(std::string_view dataset, const stats::StatsReport& report,
                             const NormalisationSpec& spec, const DescribeOptions& options) {
  if (spec.kind == NormalisationKind::None && !spec.rule_sources.empty())
    throw std::invalid_argument("a description without normalisation cannot list rule sources");
  const rdf::Term subject = rdf::Term::iri(std::string(dataset));
  const rdf::Term gn_base = rdf::Term::iri(options.vocabulary.gn_base);

  std::ostringstream out;
  out << "@prefix gn: " << gn_base.str() << " .\n";
  out << "@prefix rdf: <" << vocab::kRdf << "> .\n";
  out << "@prefix scovo: <" << vocab::kScovo << "> .\n";
  out << "@prefix void: <" << vocab::kVoid << "> .\n\n";

  out << subject.str() << " a void:Dataset ;\n";
  out << "    void:dataDump " << locator_term(options.data_locator.empty() ? std::string(dataset) : options.data_locator)
      << " ;\n";
  out << "    void:triples " << report.published_cardinality;
  auto namespaces = options.namespaces;
  std::sort(namespaces.begin(), namespaces.end());
  for (const auto& ns : namespaces) out << " ;\n    void:uriSpace " << rdf::Term::literal(ns).str();

  const auto items = items_of(report);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& item = items[i];
    out << (i == 0 ? " ;\n    void:statItem [\n" : " , [\n");
    out << "        scovo:dimension gn:" << item.local << " ;\n";
    if (item.integral) {
      out << "        rdf:value " << item.value.numerator();
    } else {
      const std::string decimal = stats::to_decimal(item.value);
      out << "        rdf:value " << decimal;
      if (stats::parse_ratio(decimal) != item.value)
        out << " ;\n        gn:exactValue \"" << item.value.numerator() << "/" << item.value.denominator() << "\"";
    }
    if (spec.kind != NormalisationKind::None) {
      out << " ;\n";
      emit_normalisation(out, spec, "        ");
    }
    out << "\n    ]";
  }
  out << " .\n";
  return out.str();
}

namespace {

class DescriptionGraph {
 public:
  explicit DescriptionGraph(rdf::Graph g) : g_(std::move(g)) {}

  std::vector<rdf::Term> objects(const rdf::Term& s, std::string_view p) const {
    std::vector<rdf::Term> out;
    for (const auto& t : g_)
      if (t.subject() == s && t.predicate().value() == p) out.push_back(t.object());
    return out;
  }

  std::optional<rdf::Term> object(const rdf::Term& s, std::string_view p) const {
    auto all = objects(s, p);
    if (all.size() > 1) throw DescriptionError(s.str() + " has several <" + std::string(p) + "> values");
    if (all.empty()) return std::nullopt;
    return all.front();
  }

  rdf::Term required(const rdf::Term& s, std::string_view p) const {
    auto o = object(s, p);
    if (!o) throw DescriptionError(s.str() + " lacks <" + std::string(p) + ">");
    return *o;
  }

  std::vector<rdf::Term> subjects_of_type(std::string_view type) const {
    std::vector<rdf::Term> out;
    for (const auto& t : g_)
      if (t.predicate().value() == vocab::kRdfType && t.object().is_iri() && t.object().value() == type)
        out.push_back(t.subject());
    return out;
  }

 private:
  rdf::Graph g_;
};

std::string locator_of(const rdf::Term& t) {
  if (t.is_iri() || t.is_literal()) return t.value();
  throw DescriptionError("locator must be an IRI or a string: " + t.str());
}

NormalisationSpec read_normalisation(const DescriptionGraph& g, const rdf::Term& item, const Vocabulary& v) {
  NormalisationSpec spec;
  const auto node = g.object(item, v.term("normalisation"));
  if (!node) return spec;
  const auto kind = g.required(*node, vocab::kRdfType);
  if (kind.value() == v.term("MiniRDF")) {
    spec.kind = NormalisationKind::MiniRdf;
  } else if (kind.value() == v.term("Closure")) {
    spec.kind = NormalisationKind::Closure;
  } else {
    throw DescriptionError("unknown normalisation type " + kind.str());
  }
  if (const auto rules = g.object(*node, v.term("rules"))) {
    for (const auto& [format, local] :
         {std::pair{RuleFormat::N3, "n3"}, std::pair{RuleFormat::DLogic, "dlogic"}, std::pair{RuleFormat::Rif, "rif"}})
      for (const auto& o : g.objects(*rules, v.term(local))) spec.rule_sources.push_back({format, locator_of(o)});
  }
  std::sort(spec.rule_sources.begin(), spec.rule_sources.end());
  return spec;
}

Ratio read_value(const DescriptionGraph& g, const rdf::Term& item, const Vocabulary& v) {
  const auto value = g.required(item, vocab::kRdfValue);
  try {
    if (const auto exact = g.object(item, v.term("exactValue"))) return stats::parse_ratio(exact->value());
    if (!value.is_literal()) throw DescriptionError("rdf:value must be a literal: " + value.str());
    return stats::parse_ratio(value.value());
  } catch (const std::invalid_argument& e) {
    throw DescriptionError(std::string("bad statistic value: ") + e.what());
  }
}

bool is_cardinality(std::string_view local) {
  return local == dimension::kPublishedTriples || local == dimension::kClosureTriples ||
         local == dimension::kMinimalTriples;
}

const std::vector<std::string_view>& known_dimensions() {
  static const std::vector<std::string_view> all{dimension::kPublishedTriples,   dimension::kClosureTriples,
                                                  dimension::kMinimalTriples,     dimension::kRedundancy,
                                                  dimension::kOutLinkDensityPlus, dimension::kOutLinkDensityMinus};
  return all;
}

}  // namespace

Description read_description(std::string_view text, const Vocabulary& vocabulary) {
  const DescriptionGraph g(rdf::parse_turtle(text, {.anonymous_nodes = true}));
  const auto datasets = g.subjects_of_type(vocab::kVoidDataset);
  if (datasets.size() != 1)
    throw DescriptionError("expected exactly one void:Dataset, found " + std::to_string(datasets.size()));
  const rdf::Term& ds = datasets.front();

  Description d;
  d.dataset = ds.value();
  const auto dump = g.object(ds, vocab::kVoidDataDump);
  d.data_locator = dump ? locator_of(*dump) : ds.value();
  for (const auto& ns : g.objects(ds, vocab::kVoidUriSpace)) d.namespaces.push_back(ns.value());
  std::sort(d.namespaces.begin(), d.namespaces.end());

  bool first = true;
  for (const auto& item : g.objects(ds, vocab::kVoidStatItem)) {
    StatDescription s;
    const auto dim = g.required(item, vocab::kScovoDimension);
    s.dimension = dim.value();
    const auto& dims = known_dimensions();
    const auto local = std::find_if(dims.begin(), dims.end(),
                                    [&](std::string_view l) { return vocabulary.term(l) == s.dimension; });
    if (local == dims.end()) throw DescriptionError("unknown statistic dimension " + dim.str());
    s.value = read_value(g, item, vocabulary);
    if (is_cardinality(*local) && s.value.denominator() != 1)
      throw DescriptionError("cardinality " + dim.str() + " is not an integer");
    s.normalisation = read_normalisation(g, item, vocabulary);
    if (first) {
      d.normalisation = s.normalisation;
      first = false;
    } else if (!(s.normalisation == d.normalisation)) {
      throw DescriptionError("statistics of one description must share a normalisation");
    }
    d.items.push_back(std::move(s));
  }
  std::sort(d.items.begin(), d.items.end(),
            [](const StatDescription& a, const StatDescription& b) { return a.dimension < b.dimension; });
  return d;
}

namespace {

// Resolves a relative import (a path, or a `file:` IRI without authority) against
// the locator of the importing document.
std::string join_locator(std::string_view importer, std::string_view imported) {
  std::string_view rel;
  if (imported.starts_with("file:") && !imported.starts_with("file://")) {
    rel = imported.substr(5);
  } else if (!rdf::is_absolute_iri(imported)) {
    rel = imported;
  } else {
    return std::string(imported);
  }
  if (rel.starts_with("/")) return std::string(imported);
  std::string_view scheme;
  if (importer.starts_with("file://")) {
    const auto slash = importer.find('/', 7);
    scheme = importer.substr(0, slash == std::string_view::npos ? importer.size() : slash);
  } else if (importer.starts_with("file:")) {
    scheme = importer.substr(0, 5);
  }
  const std::filesystem::path base(std::string(importer.substr(scheme.size())));
  const auto joined = (base.parent_path() / std::string(rel)).lexically_normal().generic_string();
  return std::string(scheme) + joined;
}

}  // namespace

Regime load_regime(const std::vector<RuleSource>& sources, const Resolver& resolver) {
  for (const auto& s : sources)
    if (s.format == RuleFormat::Rif) throw UnsupportedError("unsupported: RIF rule source " + s.locator);

  Regime regime;
  std::deque<std::string> pending;
  for (const auto& s : sources) {
    if (s.format == RuleFormat::N3) regime.rules.merge(rules::parse_rules(resolver(s.locator)));
    if (s.format == RuleFormat::DLogic) pending.push_back(s.locator);
  }
  std::set<std::string> loaded;
  while (!pending.empty()) {
    const std::string locator = std::move(pending.front());
    pending.pop_front();
    if (!loaded.insert(locator).second) continue;
    for (const auto& t : rdf::parse_turtle(resolver(locator))) {
      regime.schema.insert(t);
      if (t.predicate().value() == vocab::kOwlImports && (t.object().is_iri() || t.object().is_literal()))
        pending.push_back(join_locator(locator, t.object().value()));
    }
  }
  regime.rules.merge(rules::compile_schema(regime.schema).rules);
  return regime;
}

stats::StatsReport recompute(std::string_view description, const Resolver& resolver, const Vocabulary& vocabulary) {
  const Description d = read_description(description, vocabulary);
  for (const auto& s : d.normalisation.rule_sources)
    if (s.format == RuleFormat::Rif) throw UnsupportedError("unsupported: RIF rule source " + s.locator);
  const rdf::Graph data = rdf::parse_turtle(resolver(d.data_locator));
  const Regime regime = load_regime(d.normalisation.rule_sources, resolver);
  std::optional<stats::NamespaceDecl> ns;
  if (!d.namespaces.empty()) ns.emplace(d.namespaces);
  return stats::compute_stats(data, regime.rules, regime.schema, ns);
}

std::vector<Mismatch> compare(const Description& stated, const stats::StatsReport& recomputed,
                              const Vocabulary& vocabulary) {
  auto count = [](const std::optional<std::size_t>& n) -> std::optional<Ratio> {
    if (!n) return std::nullopt;
    return Ratio(static_cast<std::int64_t>(*n));
  };
  const std::map<std::string, std::optional<Ratio>> actual{
      {vocabulary.term(dimension::kPublishedTriples), Ratio(static_cast<std::int64_t>(recomputed.published_cardinality))},
      {vocabulary.term(dimension::kClosureTriples), count(recomputed.closure_cardinality)},
      {vocabulary.term(dimension::kMinimalTriples), count(recomputed.minimal_cardinality)},
      {vocabulary.term(dimension::kRedundancy), recomputed.redundancy},
      {vocabulary.term(dimension::kOutLinkDensityPlus), recomputed.out_link_density_plus},
      {vocabulary.term(dimension::kOutLinkDensityMinus), recomputed.out_link_density_minus},
  };
  auto show = [](const Ratio& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    const std::string decimal = stats::to_decimal(r);
    if (stats::parse_ratio(decimal) == r) return decimal;
    return decimal + " (" + std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()) + ")";
  };
  std::vector<Mismatch> out;
  for (const auto& item : stated.items) {
    const auto it = actual.find(item.dimension);
    const std::optional<Ratio> value = it == actual.end() ? std::nullopt : it->second;
    if (!value) {
      out.push_back({item.dimension, show(item.value), "n/a"});
    } else if (*value != item.value) {
      out.push_back({item.dimension, show(item.value), show(*value)});
    }
  }
  return out;
}

std::string file_iri(const std::filesystem::path& path) {
  const std::string p = std::filesystem::absolute(path).lexically_normal().generic_string();
  std::string out = "file://";
  for (const unsigned char c : p) {
    if (std::isalnum(c) || c == '/' || c == '-' || c == '.' || c == '_' || c == '~') {
      out += static_cast<char>(c);
    } else {
      static const char* hex = "0123456789ABCDEF";
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

namespace {

std::string percent_decode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

Resolver file_resolver(std::filesystem::path base_dir) {
  return [base = std::move(base_dir)](std::string_view locator) -> std::string {
    std::filesystem::path path;
    if (locator.starts_with("file://")) {
      std::string_view rest = locator.substr(7);
      const auto slash = rest.find('/');
      const auto host = rest.substr(0, slash);
      if (!host.empty() && host != "localhost") throw ResolveError("cannot resolve remote file IRI " + std::string(locator));
      path = percent_decode(slash == std::string_view::npos ? std::string_view{} : rest.substr(slash));
    } else if (locator.starts_with("file:")) {
      path = percent_decode(locator.substr(5));
    } else if (rdf::is_absolute_iri(locator) && locator.find(":/") != std::string_view::npos) {
      throw ResolveError("only local files can be resolved: " + std::string(locator));
    } else {
      path = std::string(locator);
    }
    if (path.is_relative()) path = base / path;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResolveError("cannot read " + path.string() + " (locator " + std::string(locator) + ")");
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
  };
}

}  // namespace ldstat::provenance
