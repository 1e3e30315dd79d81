#pragma once

#include "ldstat/rdf/graph.hpp"
#include "ldstat/rules/rule.hpp"

namespace ldstat::rules {

struct SchemaCompilation {
  RuleSet rules;
  /// Schema triples that matched no supported construct.
  rdf::Graph ignored;
};

/// Turns a schema graph into specialised Horn rules, one per recognised triple:
///
///   P rdfs:domain C              {?s P ?o} => {?s a C}
///   P rdfs:range C               {?s P ?o} => {?o a C}
///   C1 rdfs:subClassOf C2        {?x a C1} => {?x a C2}
///   P1 rdfs:subPropertyOf P2     {?s P1 ?o} => {?s P2 ?o}
///   P owl:inverseOf Q            {?s P ?o} => {?o Q ?s}  and  {?s Q ?o} => {?o P ?s}
///   P a owl:SymmetricProperty    {?s P ?o} => {?o P ?s}
///   P a owl:TransitiveProperty   {?x P ?y . ?y P ?z} => {?x P ?z}
///
/// Only IRI-valued subjects and objects are recognised; anything else lands in `ignored`.
SchemaCompilation compile_schema(const rdf::Graph& schema);

}  // namespace ldstat::rules
