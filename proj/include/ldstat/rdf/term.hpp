#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ldstat::rdf {

/// True when `iri` starts with a URI scheme followed by ':'.
bool is_absolute_iri(std::string_view iri);

/// An RDF term: IRI, blank node, literal, or (inside rule patterns only) a variable.
///
/// Terms are immutable. Each term caches its N-Triples rendering, which is both
/// its identity and its position in the canonical order: two terms are equal iff
/// their renderings are byte-identical, and they compare byte-lexicographically.
class Term {
 public:
  enum class Kind : std::uint8_t { Iri, Blank, Literal, Variable };

  /// Throws std::invalid_argument for relative IRIs.
  static Term iri(std::string value);
  static Term blank(std::string label);
  /// A plain literal has neither datatype nor language. Supplying both throws.
  static Term literal(std::string lexical, std::string datatype = {}, std::string language = {});
  static Term variable(std::string name);

  Kind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == Kind::Iri; }
  bool is_blank() const noexcept { return kind_ == Kind::Blank; }
  bool is_literal() const noexcept { return kind_ == Kind::Literal; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  bool is_ground() const noexcept { return kind_ != Kind::Variable; }

  /// IRI string, blank label, literal lexical form, or variable name.
  const std::string& value() const noexcept { return value_; }
  const std::string& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }

  /// N-Triples form: `<iri>`, `_:label`, `"lex"^^<dt>`, `"lex"@lang`, `?name`.
  const std::string& str() const noexcept { return rendered_; }

  friend bool operator==(const Term& a, const Term& b) noexcept { return a.rendered_ == b.rendered_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    return a.rendered_.compare(b.rendered_) <=> 0;
  }

 private:
  Term(Kind kind, std::string value, std::string datatype, std::string language);

  Kind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string rendered_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// A ground RDF statement. Subjects are IRIs or blank nodes, predicates are IRIs,
/// objects are anything but variables; the constructor enforces this.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const noexcept { return subject_; }
  const Term& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  /// `<s> <p> <o> .`
  std::string str() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

}  // namespace ldstat::rdf

template <>
struct std::hash<ldstat::rdf::Term> {
  std::size_t operator()(const ldstat::rdf::Term& t) const noexcept { return std::hash<std::string>{}(t.str()); }
};
