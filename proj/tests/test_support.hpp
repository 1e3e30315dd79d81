#pragma once

// Shared fixtures, random instance generators and the brute-force closure oracle.
// The oracle enumerates every assignment of rule variables over the active domain;
// it shares nothing with the library's evaluation code beyond the data types.

#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rdf/turtle.hpp"
#include "ldstat/rdf/vocab.hpp"
#include "ldstat/rules/parse.hpp"
#include "ldstat/rules/schema.hpp"

namespace ldstat::testing {

inline std::string fixture_path(const std::string& name) { return std::string(LDSTAT_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline rdf::Term ex(const std::string& local) { return rdf::Term::iri("http://example.org/" + local); }
inline rdf::Term foaf(const std::string& local) { return rdf::Term::iri("http://xmlns.com/foaf/0.1/" + local); }
inline rdf::Term rdfs(const std::string& local) {
  return rdf::Term::iri(std::string(vocab::kRdfs) + local);
}
inline rdf::Term type() { return rdf::Term::iri(std::string(vocab::kRdfType)); }

// FOAF fixture: s1..s4 are data, s5 and s6 the vocabulary they draw on.
struct FoafFixture {
  rdf::Triple s1{ex("bob"), type(), foaf("Person")};
  rdf::Triple s2{ex("bob"), foaf("knows"), ex("alice")};
  rdf::Triple s3{ex("alice"), type(), foaf("Person")};
  rdf::Triple s4{ex("alice"), foaf("knows"), ex("bob")};
  rdf::Triple s5{foaf("knows"), rdfs("domain"), foaf("Person")};
  rdf::Triple s6{foaf("knows"), rdfs("range"), foaf("Person")};

  rdf::Graph data() const { return {s1, s2, s3, s4}; }
  rdf::Graph schema() const { return {s5, s6}; }
  rules::RuleSet rules() const { return rules::parse_rules(read_fixture("rdfs_domain_range.n3")); }
};

struct LinksFixture {
  rdf::Triple forward{ex("a"), ex("links_to"), ex("b")};
  rdf::Triple backward{ex("b"), ex("linked_from"), ex("a")};

  rdf::Graph data() const { return {forward, backward}; }
  rules::RuleSet rules() const { return rules::parse_rules(read_fixture("links_inverse.n3")); }
};

/// Naive closure: apply every rule under every assignment of its variables over
/// the terms of the graph and the rules until nothing changes.
inline rdf::Graph brute_force_closure(const rdf::Graph& g, const rules::RuleSet& rules) {
  std::set<rdf::Term> domain;
  for (const auto& t : g) {
    domain.insert(t.subject());
    domain.insert(t.predicate());
    domain.insert(t.object());
  }
  for (const auto& r : rules)
    for (const auto* side : {&r.body, &r.head})
      for (const auto& p : *side)
        for (std::size_t i = 0; i < 3; ++i)
          if (p[i].is_ground()) domain.insert(p[i]);
  const std::vector<rdf::Term> terms(domain.begin(), domain.end());

  auto ground = [](const rules::TriplePattern& p, const std::vector<std::string>& vars,
                   const std::vector<rdf::Term>& values) -> std::optional<rdf::Triple> {
    auto sub = [&](const rdf::Term& t) {
      if (!t.is_variable()) return t;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t.value()) return values[i];
      return t;
    };
    try {
      return rdf::Triple(sub(p.subject()), sub(p.predicate()), sub(p.object()));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };

  rdf::Graph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      const auto var_set = rules::variables_of(r.body);
      const std::vector<std::string> vars(var_set.begin(), var_set.end());
      std::vector<std::size_t> idx(vars.size(), 0);
      while (true) {
        std::vector<rdf::Term> values;
        for (auto i : idx) values.push_back(terms[i]);
        bool body_holds = true;
        for (const auto& p : r.body) {
          const auto t = ground(p, vars, values);
          if (!t || !out.contains(*t)) {
            body_holds = false;
            break;
          }
        }
        if (body_holds)
          for (const auto& p : r.head)
            if (const auto t = ground(p, vars, values); t && out.insert(*t)) changed = true;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == terms.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  }
  return out;
}

/// Small random worlds: nodes n0..n{k-1} double as classes, properties p0 and p1, plus rdf:type.
struct World {
  std::mt19937 rng;
  int kNodes;
  static constexpr int kProps = 2;

  explicit World(unsigned seed, int nodes = 4) : rng(seed), kNodes(nodes) {}

  rdf::Term node(int i) const { return ex("n" + std::to_string(i)); }
  rdf::Term prop(int i) const { return ex("p" + std::to_string(i)); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  rdf::Term any_predicate() { return pick(kProps + 1) == kProps ? type() : prop(pick(kProps)); }
  rdf::Triple any_triple() { return rdf::Triple(node(pick(kNodes)), any_predicate(), node(pick(kNodes))); }

  rdf::Graph graph(int max_size) {
    rdf::Graph g;
    const int n = pick(max_size + 1);
    for (int i = 0; i < n; ++i) g.insert(any_triple());
    return g;
  }

  /// One schema construct: domain, range, inverse, symmetric, transitive or subClassOf.
  rdf::Triple schema_triple() {
    const std::string owl(vocab::kOwl);
    switch (pick(6)) {
      case 0: return rdf::Triple(prop(pick(kProps)), rdfs("domain"), node(pick(kNodes)));
      case 1: return rdf::Triple(prop(pick(kProps)), rdfs("range"), node(pick(kNodes)));
      case 2: return rdf::Triple(prop(0), rdf::Term::iri(owl + "inverseOf"), prop(1));
      case 3: return rdf::Triple(prop(pick(kProps)), type(), rdf::Term::iri(owl + "SymmetricProperty"));
      case 4: return rdf::Triple(prop(pick(kProps)), type(), rdf::Term::iri(owl + "TransitiveProperty"));
      default: return rdf::Triple(node(pick(kNodes)), rdfs("subClassOf"), node(pick(kNodes)));
    }
  }

  rdf::Graph schema(int max_constructs) {
    rdf::Graph s;
    const int n = pick(max_constructs + 1);
    for (int i = 0; i < n; ++i) s.insert(schema_triple());
    return s;
  }

  rules::RuleSet ruleset(int max_constructs) { return rules::compile_schema(schema(max_constructs)).rules; }

  /// Every constant of the world.
  std::vector<rdf::Term> constants() const {
    std::vector<rdf::Term> out{type()};
    for (int i = 0; i < kNodes; ++i) out.push_back(node(i));
    for (int p = 0; p < kProps; ++p) out.push_back(prop(p));
    return out;
  }

  /// Every triple expressible in the world with a node subject and object.
  std::vector<rdf::Triple> all_triples() const {
    std::vector<rdf::Triple> out;
    std::vector<rdf::Term> preds{type()};
    for (int p = 0; p < kProps; ++p) preds.push_back(prop(p));
    for (int s = 0; s < kNodes; ++s)
      for (const auto& p : preds)
        for (int o = 0; o < kNodes; ++o) out.emplace_back(node(s), p, node(o));
    return out;
  }
};

}  // namespace ldstat::testing
