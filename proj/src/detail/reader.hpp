#pragma once

// Tokenizer and term reader shared by the Turtle, rule and description parsers.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ldstat/rdf/term.hpp"

namespace ldstat::detail {

enum class Tok {
  IriRef,     // <...>
  PName,      // prefix:local
  Blank,      // _:label
  String,     // "..."
  LangTag,    // @en
  DataType,   // ^^
  Integer,
  Decimal,
  Variable,   // ?name
  A,          // the keyword `a`
  Prefix,     // @prefix
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Implies,    // =>
  Equiv,      // <=>
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // unescaped payload: IRI, label, lexical form, prefix:local, ...
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}
  Token next();

 private:
  [[noreturn]] void fail(const std::string& msg) const;
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  char get();
  void skip_space_and_comments();
  std::string read_iri();
  std::string read_string();
  std::string read_name(bool allow_colon);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct ReaderOptions {
  bool variables = false;        // ?x tokens allowed (rule patterns)
  bool anonymous_nodes = false;  // [ ... ] allowed
  bool blank_nodes = true;
};

using TripleSink = std::function<void(const rdf::Term&, const rdf::Term&, const rdf::Term&, const Token&)>;

/// Recursive-descent reader over a token stream with one token of lookahead.
class Reader {
 public:
  Reader(std::string_view text, ReaderOptions options);

  const Token& peek() const { return look_; }
  Token next();
  Token expect(Tok kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

  /// Consumes `@prefix name: <iri> .` (the `@prefix` token is next). Last declaration wins.
  void parse_prefix();
  /// Subject followed by a predicate-object list; does not consume the terminator.
  void parse_triples(const TripleSink& sink);

  rdf::Term parse_subject(const TripleSink& sink);
  rdf::Term parse_predicate();
  rdf::Term parse_object(const TripleSink& sink);
  void parse_predicate_objects(const rdf::Term& subject, const TripleSink& sink);

 private:
  rdf::Term resolve_pname(const Token& tok) const;
  rdf::Term make_iri(const Token& tok, std::string iri) const;
  rdf::Term blank_for_label(const std::string& label);
  rdf::Term fresh_blank();
  rdf::Term fresh_blank_for(const std::string& label);
  rdf::Term parse_anonymous(const TripleSink& sink);

  Lexer lexer_;
  ReaderOptions options_;
  Token look_;
  std::map<std::string, std::string, std::less<>> prefixes_;
  std::map<std::string, std::string, std::less<>> labels_;
  std::set<std::string, std::less<>> used_labels_;
  std::size_t next_generated_ = 0;
};

}  // namespace ldstat::detail
