#include "ldstat/rdf/term.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ldstat::rdf {

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri.front()))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    const auto c = static_cast<unsigned char>(iri[i]);
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

namespace {

void append_escaped(std::string& out, std::string_view lexical) {
  for (const char ch : lexical) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(ch)));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
}

}  // namespace

Term::Term(Kind kind, std::string value, std::string datatype, std::string language)
    : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)), language_(std::move(language)) {
  switch (kind_) {
    case Kind::Iri: rendered_ = "<" + value_ + ">"; break;
    case Kind::Blank: rendered_ = "_:" + value_; break;
    case Kind::Variable: rendered_ = "?" + value_; break;
    case Kind::Literal:
      rendered_.reserve(value_.size() + 2);
      rendered_ += '"';
      append_escaped(rendered_, value_);
      rendered_ += '"';
      if (!datatype_.empty()) rendered_ += "^^<" + datatype_ + ">";
      if (!language_.empty()) rendered_ += "@" + language_;
      break;
  }
}

Term Term::iri(std::string value) {
  if (!is_absolute_iri(value)) throw std::invalid_argument("relative IRI: " + value);
  return Term(Kind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("empty blank node label");
  return Term(Kind::Blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
  if (!datatype.empty() && !language.empty())
    throw std::invalid_argument("literal cannot carry both a datatype and a language tag");
  if (!datatype.empty() && !is_absolute_iri(datatype)) throw std::invalid_argument("relative datatype IRI: " + datatype);
  return Term(Kind::Literal, std::move(lexical), std::move(datatype), std::move(language));
}

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(Kind::Variable, std::move(name), {}, {});
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.str(); }

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (!subject_.is_iri() && !subject_.is_blank())
    throw std::invalid_argument("triple subject must be an IRI or blank node: " + subject_.str());
  if (!predicate_.is_iri()) throw std::invalid_argument("triple predicate must be an IRI: " + predicate_.str());
  if (object_.is_variable()) throw std::invalid_argument("variable in ground triple: " + object_.str());
}

std::string Triple::str() const { return subject_.str() + " " + predicate_.str() + " " + object_.str() + " ."; }

std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << t.str(); }

}  // namespace ldstat::rdf
