#include "detail/reader.hpp"

#include <cctype>

#include "ldstat/error.hpp"
#include "ldstat/rdf/vocab.hpp"

namespace ldstat::detail {

namespace {

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == '%' || u >= 0x80;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

void Lexer::fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

char Lexer::get() {
  const char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void Lexer::skip_space_and_comments() {
  while (pos_ < text_.size()) {
    const char c = peek();
    if (c == '#') {
      while (pos_ < text_.size() && peek() != '\n') get();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      get();
    } else {
      break;
    }
  }
}

std::string Lexer::read_iri() {
  get();  // '<'
  std::string iri;
  while (true) {
    if (pos_ >= text_.size()) fail("unterminated IRI");
    const char c = peek();
    if (c == '>') {
      get();
      return iri;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\')
      fail(std::string("invalid character '") + c + "' in IRI");
    iri += get();
  }
}

std::string Lexer::read_string() {
  get();  // '"'
  std::string out;
  while (true) {
    if (pos_ >= text_.size()) fail("unterminated string literal");
    const char c = peek();
    if (c == '"') {
      get();
      return out;
    }
    if (c == '\n' || c == '\r') fail("newline in string literal");
    get();
    if (c != '\\') {
      out += c;
      continue;
    }
    if (pos_ >= text_.size()) fail("unterminated escape");
    const char e = get();
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U': {
        const int digits = e == 'u' ? 4 : 8;
        unsigned long cp = 0;
        for (int i = 0; i < digits; ++i) {
          if (pos_ >= text_.size() || !std::isxdigit(static_cast<unsigned char>(peek())))
            fail("malformed unicode escape");
          cp = cp * 16 + std::stoul(std::string(1, get()), nullptr, 16);
        }
        if (cp > 0x10FFFF) fail("unicode escape out of range");
        append_utf8(out, cp);
        break;
      }
      default: fail(std::string("unknown escape '\\") + e + "'");
    }
  }
}

std::string Lexer::read_name(bool allow_colon) {
  std::size_t end = pos_;
  while (end < text_.size() && (is_name_char(text_[end]) || (allow_colon && text_[end] == ':'))) ++end;
  while (end > pos_ && text_[end - 1] == '.') --end;
  std::string name(text_.substr(pos_, end - pos_));
  while (pos_ < end) get();
  return name;
}

Token Lexer::next() {
  skip_space_and_comments();
  Token tok;
  tok.line = line_;
  tok.column = column_;
  if (pos_ >= text_.size()) return tok;

  const char c = peek();
  auto punct = [&](Tok kind, std::size_t width) {
    for (std::size_t i = 0; i < width; ++i) tok.text += get();
    tok.kind = kind;
    return tok;
  };

  switch (c) {
    case '<':
      if (peek(1) == '=' && peek(2) == '>') return punct(Tok::Equiv, 3);
      tok.kind = Tok::IriRef;
      tok.text = read_iri();
      return tok;
    case '=':
      if (peek(1) == '>') return punct(Tok::Implies, 2);
      fail("unexpected '='");
    case '"':
      tok.kind = Tok::String;
      tok.text = read_string();
      return tok;
    case '^':
      if (peek(1) == '^') return punct(Tok::DataType, 2);
      fail("unexpected '^'");
    case '@': {
      get();
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') word += get();
      if (word.empty()) fail("empty directive or language tag");
      tok.kind = word == "prefix" ? Tok::Prefix : Tok::LangTag;
      if (word == "base") fail("@base is not supported");
      tok.text = word;
      return tok;
    }
    case '?': {
      get();
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') tok.text += get();
      if (tok.text.empty()) fail("empty variable name");
      tok.kind = Tok::Variable;
      return tok;
    }
    case ';': return punct(Tok::Semicolon, 1);
    case ',': return punct(Tok::Comma, 1);
    case '[': return punct(Tok::LBracket, 1);
    case ']': return punct(Tok::RBracket, 1);
    case '{': return punct(Tok::LBrace, 1);
    case '}': return punct(Tok::RBrace, 1);
    default: break;
  }

  const bool signed_number = (c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(peek(1)));
  const bool leading_dot = c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)));
  if (std::isdigit(static_cast<unsigned char>(c)) || signed_number || leading_dot) {
    tok.kind = Tok::Integer;
    if (signed_number) tok.text += get();
    while (std::isdigit(static_cast<unsigned char>(peek()))) tok.text += get();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      tok.kind = Tok::Decimal;
      tok.text += get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) tok.text += get();
    }
    return tok;
  }
  if (c == '.') return punct(Tok::Dot, 1);

  if (c == '_' && peek(1) == ':') {
    get();
    get();
    tok.kind = Tok::Blank;
    tok.text = read_name(false);
    if (tok.text.empty()) fail("empty blank node label");
    return tok;
  }

  if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || static_cast<unsigned char>(c) >= 0x80) {
    tok.text = read_name(true);
    if (tok.text == "a") {
      tok.kind = Tok::A;
      return tok;
    }
    if (tok.text.find(':') == std::string::npos) fail("unexpected bare word '" + tok.text + "'");
    tok.kind = Tok::PName;
    return tok;
  }
  fail(std::string("unexpected character '") + c + "'");
}

Reader::Reader(std::string_view text, ReaderOptions options) : lexer_(text), options_(options) {
  look_ = lexer_.next();
}

Token Reader::next() {
  Token t = std::move(look_);
  look_ = lexer_.next();
  return t;
}

void Reader::fail(const Token& at, const std::string& msg) const { throw ParseError(msg, at.line, at.column); }

Token Reader::expect(Tok kind, std::string_view what) {
  if (look_.kind != kind) fail(look_, "expected " + std::string(what));
  return next();
}

void Reader::parse_prefix() {
  expect(Tok::Prefix, "@prefix");
  const Token name = expect(Tok::PName, "prefix name");
  if (name.text.back() != ':' || name.text.find(':') != name.text.size() - 1)
    fail(name, "malformed prefix name '" + name.text + "'");
  const Token iri = expect(Tok::IriRef, "prefix IRI");
  if (!rdf::is_absolute_iri(iri.text)) fail(iri, "relative IRI <" + iri.text + ">");
  expect(Tok::Dot, "'.' after @prefix");
  prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
}

rdf::Term Reader::make_iri(const Token& tok, std::string iri) const {
  if (!rdf::is_absolute_iri(iri)) fail(tok, "relative IRI <" + iri + ">");
  return rdf::Term::iri(std::move(iri));
}

rdf::Term Reader::resolve_pname(const Token& tok) const {
  const auto colon = tok.text.find(':');
  const auto prefix = std::string_view(tok.text).substr(0, colon);
  const auto it = prefixes_.find(prefix);
  if (it == prefixes_.end()) fail(tok, "undeclared prefix '" + std::string(prefix) + ":'");
  return make_iri(tok, it->second + tok.text.substr(colon + 1));
}

rdf::Term Reader::blank_for_label(const std::string& label) {
  if (auto it = labels_.find(label); it != labels_.end()) return rdf::Term::blank(it->second);
  std::string internal = label;
  if (used_labels_.count(internal)) return fresh_blank_for(label);
  used_labels_.insert(internal);
  labels_[label] = internal;
  return rdf::Term::blank(internal);
}

rdf::Term Reader::fresh_blank() {
  std::string label;
  do {
    label = "genid" + std::to_string(++next_generated_);
  } while (used_labels_.count(label));
  used_labels_.insert(label);
  return rdf::Term::blank(label);
}

rdf::Term Reader::fresh_blank_for(const std::string& label) {
  rdf::Term b = fresh_blank();
  labels_[label] = b.value();
  return b;
}

rdf::Term Reader::parse_anonymous(const TripleSink& sink) {
  const Token open = expect(Tok::LBracket, "'['");
  if (!options_.anonymous_nodes) fail(open, "anonymous blank nodes '[ ]' are not supported here");
  rdf::Term node = fresh_blank();
  if (look_.kind != Tok::RBracket) parse_predicate_objects(node, sink);
  expect(Tok::RBracket, "']'");
  return node;
}

rdf::Term Reader::parse_subject(const TripleSink& sink) {
  switch (look_.kind) {
    case Tok::IriRef: {
      Token t = next();
      return make_iri(t, t.text);
    }
    case Tok::PName: return resolve_pname(next());
    case Tok::Blank: {
      Token t = next();
      if (!options_.blank_nodes) fail(t, "blank node not allowed here");
      return blank_for_label(t.text);
    }
    case Tok::LBracket: return parse_anonymous(sink);
    case Tok::Variable: {
      Token t = next();
      if (!options_.variables) fail(t, "variable ?" + t.text + " in data");
      return rdf::Term::variable(t.text);
    }
    case Tok::String:
    case Tok::Integer:
    case Tok::Decimal: fail(look_, "literal in subject position");
    default: fail(look_, "expected subject");
  }
}

rdf::Term Reader::parse_predicate() {
  switch (look_.kind) {
    case Tok::IriRef: {
      Token t = next();
      return make_iri(t, t.text);
    }
    case Tok::PName: return resolve_pname(next());
    case Tok::A: next(); return rdf::Term::iri(std::string(vocab::kRdfType));
    case Tok::Variable: {
      Token t = next();
      if (!options_.variables) fail(t, "variable ?" + t.text + " in data");
      return rdf::Term::variable(t.text);
    }
    case Tok::Blank: fail(look_, "blank node in predicate position");
    case Tok::String:
    case Tok::Integer:
    case Tok::Decimal: fail(look_, "literal in predicate position");
    default: fail(look_, "expected predicate");
  }
}

rdf::Term Reader::parse_object(const TripleSink& sink) {
  switch (look_.kind) {
    case Tok::String: {
      Token lex = next();
      if (look_.kind == Tok::LangTag) return rdf::Term::literal(lex.text, {}, next().text);
      if (look_.kind == Tok::DataType) {
        next();
        if (look_.kind == Tok::PName) return rdf::Term::literal(lex.text, resolve_pname(next()).value());
        Token dt = expect(Tok::IriRef, "datatype IRI");
        return rdf::Term::literal(lex.text, make_iri(dt, dt.text).value());
      }
      return rdf::Term::literal(lex.text);
    }
    case Tok::Integer: return rdf::Term::literal(next().text, std::string(vocab::kXsdInteger));
    case Tok::Decimal: return rdf::Term::literal(next().text, std::string(vocab::kXsdDecimal));
    case Tok::A: fail(look_, "keyword 'a' in object position");
    default: return parse_subject(sink);
  }
}

void Reader::parse_predicate_objects(const rdf::Term& subject, const TripleSink& sink) {
  while (true) {
    const Token at = look_;
    const rdf::Term predicate = parse_predicate();
    while (true) {
      const rdf::Term object = parse_object(sink);
      sink(subject, predicate, object, at);
      if (look_.kind != Tok::Comma) break;
      next();
    }
    if (look_.kind != Tok::Semicolon) return;
    while (look_.kind == Tok::Semicolon) next();
    if (look_.kind == Tok::Dot || look_.kind == Tok::RBracket || look_.kind == Tok::RBrace || look_.kind == Tok::End)
      return;
  }
}

void Reader::parse_triples(const TripleSink& sink) {
  const bool bracketed = look_.kind == Tok::LBracket;
  const rdf::Term subject = parse_subject(sink);
  if (bracketed && (look_.kind == Tok::Dot || look_.kind == Tok::RBrace)) return;
  parse_predicate_objects(subject, sink);
}

}  // namespace ldstat::detail
