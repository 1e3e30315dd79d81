#include "ldstat/rules/rule.hpp"

#include <algorithm>
#include <stdexcept>

#include "ldstat/error.hpp"

namespace ldstat::rules {

TriplePattern::TriplePattern(rdf::Term subject, rdf::Term predicate, rdf::Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (subject_.is_literal()) throw std::invalid_argument("literal in pattern subject: " + subject_.str());
  if (!predicate_.is_iri() && !predicate_.is_variable())
    throw std::invalid_argument("pattern predicate must be an IRI or variable: " + predicate_.str());
}

std::string TriplePattern::str() const { return subject_.str() + " " + predicate_.str() + " " + object_.str(); }

std::set<std::string> variables_of(const std::vector<TriplePattern>& patterns) {
  std::set<std::string> vars;
  for (const auto& p : patterns)
    for (std::size_t i = 0; i < 3; ++i)
      if (p[i].is_variable()) vars.insert(p[i].value());
  return vars;
}

std::string SafetyReport::describe() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "; ";
    out += s;
  };
  for (const auto& v : unbound_head_variables) add("head variable ?" + v + " does not occur in the body");
  for (const auto& b : head_blank_nodes) add("blank node _:" + b + " in rule head");
  if (empty_body) add("empty rule body");
  if (empty_head) add("empty rule head");
  return out;
}

SafetyReport check_safe(const Rule& r) {
  SafetyReport report;
  report.empty_body = r.body.empty();
  report.empty_head = r.head.empty();
  const auto body_vars = variables_of(r.body);
  for (const auto& v : variables_of(r.head))
    if (!body_vars.count(v)) report.unbound_head_variables.push_back(v);
  for (const auto& p : r.head)
    for (std::size_t i = 0; i < 3; ++i)
      if (p[i].is_blank() &&
          std::find(report.head_blank_nodes.begin(), report.head_blank_nodes.end(), p[i].value()) ==
              report.head_blank_nodes.end())
        report.head_blank_nodes.push_back(p[i].value());
  return report;
}

bool RuleSet::add(Rule r) {
  if (const auto report = check_safe(r); !report.ok())
    throw UnsafeRuleError((r.label.empty() ? std::string("rule") : "rule " + r.label) + ": " + report.describe());
  if (std::find(rules_.begin(), rules_.end(), r) != rules_.end()) return false;
  rules_.push_back(std::move(r));
  return true;
}

void RuleSet::merge(const RuleSet& other) {
  for (const auto& r : other) add(r);
}

}  // namespace ldstat::rules
