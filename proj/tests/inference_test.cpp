#include <gtest/gtest.h>

#include "ldstat/inference/binding.hpp"
#include "ldstat/inference/inference.hpp"
#include "test_support.hpp"

namespace ldstat::inference {
namespace {

using rdf::Diff;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;
using rules::RuleSet;
using rules::TriplePattern;
using testing::ex;
using testing::foaf;
using testing::FoafFixture;
using testing::LinksFixture;
using testing::type;

TEST(MatchTest, BindsVariables) {
  const FoafFixture f;
  const auto ms = match(TriplePattern(Term::variable("x"), foaf("knows"), Term::variable("y")), f.data());
  ASSERT_EQ(ms.size(), 2u);
  for (const auto& b : ms) {
    ASSERT_NE(b.lookup("x"), nullptr);
    EXPECT_TRUE(f.data().contains(Triple(*b.lookup("x"), foaf("knows"), *b.lookup("y"))));
  }
  // Repeated variable must match the same term.
  const Graph g{Triple(ex("a"), ex("p"), ex("a")), Triple(ex("a"), ex("p"), ex("b"))};
  EXPECT_EQ(match(TriplePattern(Term::variable("x"), ex("p"), Term::variable("x")), g).size(), 1u);
}

TEST(BindingTest, ApplyNeedsEveryVariable) {
  Binding b;
  EXPECT_TRUE(b.bind("x", ex("a")));
  EXPECT_FALSE(b.bind("x", ex("b")));
  EXPECT_TRUE(b.bind("x", ex("a")));
  const TriplePattern p(Term::variable("x"), ex("p"), Term::variable("y"));
  EXPECT_FALSE(b.apply(p).has_value());
  b.bind("y", Term::literal("v"));
  EXPECT_EQ(b.apply(p), Triple(ex("a"), ex("p"), Term::literal("v")));
}

TEST(ClosureTest, FoafExample) {
  const FoafFixture f;
  const auto r = closure(Graph{f.s2, f.s5}, f.rules());
  EXPECT_EQ(r.graph, (Graph{f.s2, f.s5, f.s1}));
  EXPECT_EQ(r.derived_count, 1u);
  EXPECT_EQ(r.rounds, 1u);
}

TEST(ClosureTest, InverseExample) {
  const LinksFixture f;
  EXPECT_EQ(closure(Graph{f.forward}, f.rules()).graph, f.data());
}

TEST(ClosureTest, EmptyRuleSetIsIdentity) {
  const FoafFixture f;
  const auto r = closure(f.data(), RuleSet{});
  EXPECT_EQ(r.graph, f.data());
  EXPECT_EQ(r.derived_count, 0u);
  EXPECT_EQ(r.rounds, 0u);
}

TEST(ClosureTest, TransitiveChainNeedsSeveralRounds) {
  const auto rules = rules::parse_rules("{ ?x <http://example.org/t> ?y . ?y <http://example.org/t> ?z } => { ?x <http://example.org/t> ?z } .");
  Graph chain;
  for (int i = 0; i < 8; ++i) chain.insert(Triple(ex(std::to_string(i)), ex("t"), ex(std::to_string(i + 1))));
  const auto r = closure(chain, rules);
  EXPECT_EQ(r.graph.size(), 9u * 8u / 2u);
  EXPECT_GE(r.rounds, 3u);
}

TEST(ClosureTest, IllFormedHeadInstancesAreSkipped) {
  // Symmetry over a literal object would put a literal in subject position.
  const auto rules = rules::parse_rules("{ ?x <http://example.org/s> ?y } => { ?y <http://example.org/s> ?x } .");
  const Graph g{Triple(ex("a"), ex("s"), Term::literal("x")), Triple(ex("a"), ex("s"), ex("b"))};
  const auto r = closure(g, rules);
  EXPECT_EQ(r.graph.size(), 3u);
  EXPECT_TRUE(backchain(g, rules, Triple(ex("b"), ex("s"), ex("a"))));
}

TEST(BackchainTest, Examples) {
  const FoafFixture f;
  EXPECT_TRUE(backchain(Graph{f.s2, f.s5}, f.rules(), f.s1));
  EXPECT_FALSE(backchain(Graph{f.s2, f.s5}, f.rules(), f.s3));
  EXPECT_TRUE(backchain(Graph{f.s2, f.s6}, f.rules(), f.s3));
  EXPECT_TRUE(backchain(Graph{f.s1}, RuleSet{}, f.s1));
  EXPECT_FALSE(backchain(Graph{}, f.rules(), f.s1));
}

TEST(BackchainTest, CyclicRulesTerminate) {
  const LinksFixture f;
  EXPECT_FALSE(backchain(Graph{}, f.rules(), f.forward));
  EXPECT_TRUE(backchain(Graph{f.backward}, f.rules(), f.forward));
}

TEST(ReduceTest, FoafExample) {
  const FoafFixture f;
  EXPECT_EQ(reduce(f.data(), f.rules(), f.schema()), (Graph{f.s2, f.s4}));
  // With the schema inside g it is kept: nothing derives rdfs triples.
  EXPECT_EQ(reduce(rdf::unite(f.data(), f.schema()), f.rules()), (Graph{f.s2, f.s4, f.s5, f.s6}));
}

TEST(ReduceTest, InverseKeepsLaterTriple) {
  const LinksFixture f;
  EXPECT_EQ(reduce(f.data(), f.rules()), Graph{f.backward});
}

TEST(ReduceTest, NoRulesIsIdentity) {
  const FoafFixture f;
  EXPECT_EQ(reduce(f.data(), RuleSet{}), f.data());
  EXPECT_EQ(reduce(Graph{}, f.rules()), Graph{});
}

TEST(ReduceTest, AuxTriplesInGAreDropped) {
  const FoafFixture f;
  EXPECT_EQ(reduce(Graph{f.s2, f.s5}, f.rules(), f.schema()), Graph{f.s2});
}

TEST(IncrementalTest, FoafDeleteAndInsert) {
  const FoafFixture f;
  const Triple carol(ex("carol"), foaf("knows"), ex("dan"));
  const Graph prev_min{f.s2, f.s4};
  const Diff d{Graph{carol}, Graph{f.s4}};
  const Graph full = rdf::apply_diff(f.data(), d);
  const auto r = incremental_reduce(prev_min, d, f.rules(), f.schema(), full);
  EXPECT_FALSE(r.fallback_used);
  EXPECT_EQ(r.graph, (Graph{f.s2, carol}));
  EXPECT_EQ(r.graph, reduce(full, f.rules(), f.schema()));
}

TEST(IncrementalTest, EmptyDiffKeepsMinimum) {
  const FoafFixture f;
  const Graph prev_min{f.s2, f.s4};
  const auto r = incremental_reduce(prev_min, Diff{}, f.rules(), f.schema(), f.data());
  EXPECT_FALSE(r.fallback_used);
  EXPECT_EQ(r.graph, prev_min);
  EXPECT_EQ(r.retested, 0u);
}

TEST(IncrementalTest, InsertionCanMakeKeptTripleRedundant) {
  const LinksFixture f;
  // prev_min {forward}; inserting something that derives forward makes it redundant.
  const auto rules = rules::parse_rules(
      "{ ?x <http://example.org/links_to> ?y } => { ?y <http://example.org/linked_from> ?x } .\n"
      "{ ?x <http://example.org/strong> ?y } => { ?x <http://example.org/links_to> ?y } .");
  const Triple strong(ex("a"), ex("strong"), ex("b"));
  const Diff d{Graph{strong}, Graph{}};
  const Graph full{f.forward, f.backward, strong};
  const auto r = incremental_reduce(Graph{f.forward}, d, rules, {}, full);
  EXPECT_EQ(r.graph, Graph{strong});
  EXPECT_EQ(r.graph.size(), reduce(full, rules).size());
}

TEST(IncrementalTest, StalePreviousMinimumFallsBack) {
  const FoafFixture f;
  // A prev_min that does not describe the previous version: closure check fails.
  const Graph full = f.data();
  const auto r = incremental_reduce(Graph{f.s2}, Diff{}, f.rules(), f.schema(), full);
  EXPECT_TRUE(r.fallback_used);
  EXPECT_EQ(r.graph, reduce(full, f.rules(), f.schema()));
}

// Random instance: rules compiled from a random schema, data over the world.
struct Instance {
  RuleSet rules;
  Graph g;
};

Instance random_instance(testing::World& w, int max_data = 8) {
  return {w.ruleset(4), w.graph(max_data)};
}

TEST(InferencePropertyTest, ClosureMatchesBruteForce) {
  testing::World w(101);
  for (int i = 0; i < 300; ++i) {
    const auto [rules, g] = random_instance(w);
    EXPECT_EQ(closure(g, rules).graph, testing::brute_force_closure(g, rules));
  }
}

TEST(InferencePropertyTest, GenericRulesMatchBruteForce) {
  // Variables in predicate position and literal objects.
  const auto rules = rules::parse_rules(testing::read_fixture("rdfs_domain_range.n3"));
  testing::World w(103);
  for (int i = 0; i < 100; ++i) {
    Graph g = w.graph(5);
    g.insert(Triple(w.node(0), w.prop(1), Term::literal("lit")));
    for (int k = w.pick(3); k > 0; --k)
      g.insert(Triple(w.prop(w.pick(2)), testing::rdfs(w.pick(2) ? "domain" : "range"), w.node(w.pick(4))));
    EXPECT_EQ(closure(g, rules).graph, testing::brute_force_closure(g, rules));
  }
}

TEST(InferencePropertyTest, ClosureIsExtensiveIdempotentMonotone) {
  testing::World w(107);
  for (int i = 0; i < 200; ++i) {
    const auto [rules, g] = random_instance(w);
    const Graph h = rdf::unite(g, w.graph(4));
    const Graph cg = closure(g, rules).graph;
    EXPECT_TRUE(rdf::includes(cg, g));
    EXPECT_EQ(closure(cg, rules).graph, cg);
    EXPECT_TRUE(rdf::includes(closure(h, rules).graph, cg));
  }
}

TEST(InferencePropertyTest, BackchainAgreesWithClosure) {
  testing::World w(109);
  const auto candidates = w.all_triples();
  for (int i = 0; i < 60; ++i) {
    const auto [rules, g] = random_instance(w);
    const Graph cg = closure(g, rules).graph;
    for (const auto& t : candidates) EXPECT_EQ(backchain(g, rules, t), cg.contains(t)) << t.str();
  }
}

TEST(InferencePropertyTest, ReduceIsSoundAndIrreducible) {
  testing::World w(113);
  for (int i = 0; i < 200; ++i) {
    const auto [rules, g] = random_instance(w, 10);
    const Graph aux = w.graph(2);
    const Graph m = reduce(g, rules, aux);
    EXPECT_TRUE(rdf::includes(g, m));
    EXPECT_TRUE(rdf::intersect(m, aux).empty());
    EXPECT_EQ(closure(rdf::unite(m, aux), rules).graph, closure(rdf::unite(g, aux), rules).graph);
    for (const auto& t : m) {
      Graph rest = rdf::unite(m, aux);
      rest.erase(t);
      EXPECT_FALSE(closure(rest, rules).graph.contains(t)) << t.str();
    }
    EXPECT_EQ(reduce(g, rules, aux), m);
    EXPECT_EQ(reduce(m, rules, aux), m);
  }
}

TEST(InferencePropertyTest, IncrementalPreservesClosure) {
  testing::World w(127);
  int shortcut = 0;
  for (int i = 0; i < 300; ++i) {
    const auto [rules, g] = random_instance(w, 10);
    const Graph prev_min = reduce(g, rules);
    const Diff d{rdf::subtract(w.graph(3), g), rdf::intersect(w.graph(12), g)};
    const Graph full = rdf::apply_diff(g, d);
    const auto r = incremental_reduce(prev_min, d, rules, {}, full);
    const Graph expected = reduce(full, rules);
    EXPECT_EQ(closure(r.graph, rules).graph, closure(full, rules).graph);
    EXPECT_TRUE(rdf::includes(full, r.graph));
    if (!r.fallback_used) {
      ++shortcut;
      EXPECT_EQ(r.graph.size(), expected.size());
    }
  }
  EXPECT_GT(shortcut, 0);
}

}  // namespace
}  // namespace ldstat::inference
