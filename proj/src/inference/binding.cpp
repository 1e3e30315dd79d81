#include "ldstat/inference/binding.hpp"

#include <stdexcept>

namespace ldstat::inference {

bool Binding::bind(const std::string& name, const rdf::Term& value) {
  if (!value.is_ground()) throw std::invalid_argument("binding to a variable: " + value.str());
  const auto [it, inserted] = values_.try_emplace(name, value);
  return inserted || it->second == value;
}

const rdf::Term* Binding::lookup(const std::string& name) const {
  const auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

std::optional<rdf::Triple> Binding::apply(const rules::TriplePattern& p) const {
  std::optional<rdf::Term> parts[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!p[i].is_variable()) {
      parts[i] = p[i];
    } else if (const auto* v = lookup(p[i].value())) {
      parts[i] = *v;
    } else {
      return std::nullopt;
    }
  }
  try {
    return rdf::Triple(*parts[0], *parts[1], *parts[2]);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // e.g. a literal substituted into subject position
  }
}

std::vector<Binding> match(const rules::TriplePattern& p, const rdf::Graph& g) {
  std::vector<Binding> out;
  const rdf::Term* parts[3];
  for (const auto& t : g) {
    parts[0] = &t.subject();
    parts[1] = &t.predicate();
    parts[2] = &t.object();
    Binding b;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i)
      ok = p[i].is_variable() ? b.bind(p[i].value(), *parts[i]) : p[i] == *parts[i];
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace ldstat::inference
