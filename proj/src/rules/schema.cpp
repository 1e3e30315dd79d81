#include "ldstat/rules/schema.hpp"

#include "ldstat/rdf/vocab.hpp"

namespace ldstat::rules {

namespace {

rdf::Term var(const char* name) { return rdf::Term::variable(name); }

rdf::Term type() { return rdf::Term::iri(std::string(vocab::kRdfType)); }

}  // namespace

SchemaCompilation compile_schema(const rdf::Graph& schema) {
  SchemaCompilation out;
  for (const auto& t : schema) {
    const auto& p = t.predicate().value();
    const rdf::Term& a = t.subject();
    const rdf::Term& b = t.object();
    auto add = [&](std::vector<TriplePattern> body, std::vector<TriplePattern> head, const char* suffix = "") {
      out.rules.add(Rule{std::move(body), std::move(head), t.str() + suffix});
    };
    if (!a.is_iri() || !b.is_iri()) {
      out.ignored.insert(t);
    } else if (p == vocab::kRdfsDomain) {
      add({{var("s"), a, var("o")}}, {{var("s"), type(), b}});
    } else if (p == vocab::kRdfsRange) {
      add({{var("s"), a, var("o")}}, {{var("o"), type(), b}});
    } else if (p == vocab::kRdfsSubClassOf) {
      add({{var("x"), type(), a}}, {{var("x"), type(), b}});
    } else if (p == vocab::kRdfsSubPropertyOf) {
      add({{var("s"), a, var("o")}}, {{var("s"), b, var("o")}});
    } else if (p == vocab::kOwlInverseOf) {
      add({{var("s"), a, var("o")}}, {{var("o"), b, var("s")}}, " (forward)");
      add({{var("s"), b, var("o")}}, {{var("o"), a, var("s")}}, " (backward)");
    } else if (p == vocab::kRdfType && b.value() == vocab::kOwlSymmetricProperty) {
      add({{var("s"), a, var("o")}}, {{var("o"), a, var("s")}});
    } else if (p == vocab::kRdfType && b.value() == vocab::kOwlTransitiveProperty) {
      add({{var("x"), a, var("y")}, {var("y"), a, var("z")}}, {{var("x"), a, var("z")}});
    } else {
      out.ignored.insert(t);
    }
  }
  return out;
}

}  // namespace ldstat::rules
