#pragma once

#include <string>
#include <string_view>

#include "ldstat/rules/rule.hpp"

namespace ldstat::rules {

/// Parses N3-style rules:
///
///   @prefix ex: <http://example.org/> .
///   { ?s ?p ?o . ?p rdfs:domain ?A } => { ?s a ?A } .
///   { ?x ex:links_to ?y } <=> { ?y ex:linked_from ?x } .
///
/// `<=>` yields the rule and its reverse. Rules are labelled r1, r2, ... in file
/// order. Throws ParseError on syntax errors and UnsafeRuleError for unsafe rules.
RuleSet parse_rules(std::string_view text);

/// Prints a rule with full IRIs; parse_rules(to_n3(r)) reproduces r.
std::string to_n3(const Rule& r);
std::string to_n3(const RuleSet& rules);

}  // namespace ldstat::rules
