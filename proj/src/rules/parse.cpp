#include "ldstat/rules/parse.hpp"

#include "detail/reader.hpp"
#include "ldstat/error.hpp"

namespace ldstat::rules {

namespace {

using detail::Tok;

std::vector<TriplePattern> parse_block(detail::Reader& reader, std::string_view what) {
  const detail::Token open = reader.expect(Tok::LBrace, "'{' to open rule " + std::string(what));
  std::vector<TriplePattern> patterns;
  const detail::TripleSink sink = [&](const rdf::Term& s, const rdf::Term& p, const rdf::Term& o,
                                      const detail::Token& at) {
    if (s.is_blank() && what == "body") reader.fail(at, "blank node _:" + s.value() + " in rule body; use a ?variable");
    if (o.is_blank() && what == "body") reader.fail(at, "blank node _:" + o.value() + " in rule body; use a ?variable");
    patterns.emplace_back(s, p, o);
  };
  while (reader.peek().kind != Tok::RBrace) {
    reader.parse_triples(sink);
    if (reader.peek().kind == Tok::Dot) reader.next();
    else if (reader.peek().kind != Tok::RBrace) reader.fail(reader.peek(), "expected '.' or '}' in rule " + std::string(what));
  }
  reader.next();
  if (patterns.empty()) reader.fail(open, "empty rule " + std::string(what));
  return patterns;
}

}  // namespace

RuleSet parse_rules(std::string_view text) {
  detail::Reader reader(text, {.variables = true, .anonymous_nodes = false, .blank_nodes = true});
  RuleSet rules;
  std::size_t index = 0;
  auto add = [&](Rule r, const detail::Token& at) {
    r.label = "r" + std::to_string(++index);
    if (const auto report = check_safe(r); !report.ok())
      throw UnsafeRuleError("rule " + r.label + " (line " + std::to_string(at.line) + "): " + report.describe());
    rules.add(std::move(r));
  };
  while (reader.peek().kind != Tok::End) {
    if (reader.peek().kind == Tok::Prefix) {
      reader.parse_prefix();
      continue;
    }
    const detail::Token start = reader.peek();
    auto body = parse_block(reader, "body");
    const detail::Token arrow = reader.next();
    if (arrow.kind != Tok::Implies && arrow.kind != Tok::Equiv) reader.fail(arrow, "expected '=>' or '<=>'");
    auto head = parse_block(reader, "head");
    if (reader.peek().kind == Tok::Dot) reader.next();
    if (arrow.kind == Tok::Equiv) {
      add(Rule{body, head, {}}, start);
      add(Rule{std::move(head), std::move(body), {}}, start);
    } else {
      add(Rule{std::move(body), std::move(head), {}}, start);
    }
  }
  return rules;
}

std::string to_n3(const Rule& r) {
  auto block = [](const std::vector<TriplePattern>& patterns) {
    std::string out = "{";
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      out += ' ';
      out += patterns[i].str();
      out += i + 1 < patterns.size() ? " ." : "";
    }
    return out + " }";
  };
  return block(r.body) + " => " + block(r.head) + " .";
}

std::string to_n3(const RuleSet& rules) {
  std::string out;
  for (const auto& r : rules) out += to_n3(r) + "\n";
  return out;
}

}  // namespace ldstat::rules
