#include "ldstat/rdf/turtle.hpp"

#include "detail/reader.hpp"

namespace ldstat::rdf {

Graph parse_turtle(std::string_view text, const ParseOptions& options) {
  detail::Reader reader(text, {.variables = false, .anonymous_nodes = options.anonymous_nodes});
  Graph g;
  const detail::TripleSink sink = [&](const Term& s, const Term& p, const Term& o, const detail::Token&) {
    g.insert(Triple(s, p, o));
  };
  while (reader.peek().kind != detail::Tok::End) {
    if (reader.peek().kind == detail::Tok::Prefix) {
      reader.parse_prefix();
      continue;
    }
    reader.parse_triples(sink);
    reader.expect(detail::Tok::Dot, "'.' at end of statement");
  }
  return g;
}

std::string serialize_turtle(const Graph& g) {
  std::string out;
  for (const auto& t : g) {
    out += t.str();
    out += '\n';
  }
  return out;
}

}  // namespace ldstat::rdf
