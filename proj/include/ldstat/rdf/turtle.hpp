#pragma once

#include <string>
#include <string_view>

#include "ldstat/rdf/graph.hpp"

namespace ldstat::rdf {

struct ParseOptions {
  /// Accept `[ ... ]` anonymous nodes. Off for plain data; statistics descriptions need it.
  bool anonymous_nodes = false;
};

/// Parses the supported Turtle subset: @prefix, <IRIs>, prefixed names, `a`,
/// `;` and `,` lists, string literals with ^^datatype or @lang, numerals and
/// `_:label` blank nodes. Throws ParseError with the offending line and column.
Graph parse_turtle(std::string_view text, const ParseOptions& options = {});

/// One N-Triples line per triple, in canonical order, LF-terminated.
std::string serialize_turtle(const Graph& g);

}  // namespace ldstat::rdf
