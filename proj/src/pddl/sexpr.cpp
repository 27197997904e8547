#include "plan2bt/pddl/sexpr.hpp"

#include <cctype>

#include "plan2bt/error.hpp"

namespace plan2bt::pddl {

namespace {

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    if (pos_ >= text_.size()) return {Token::End, "", line_, column_};
    int line = line_, column = column_;
    char c = text_[pos_];
    if (c == '(') { advance(); return {Token::Open, "(", line, column}; }
    if (c == ')') { advance(); return {Token::Close, ")", line, column}; }
    std::string atom;
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      advance();
    }
    return {Token::Atom, atom, line, column};
  }

private:
  void advance() {
    if (text_[pos_] == '\n') { ++line_; column_ = 1; } else { ++column_; }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

Sexp read_one(Lexer& lexer, const Token& first) {
  if (first.kind == Token::Atom) {
    Sexp s;
    s.is_atom = true;
    s.atom = first.text;
    s.line = first.line;
    s.column = first.column;
    return s;
  }
  if (first.kind != Token::Open)
    throw Error(ErrorKind::Syntax, "unexpected ')'", first.line, first.column);
  Sexp list;
  list.line = first.line;
  list.column = first.column;
  for (;;) {
    Token t = lexer.next();
    if (t.kind == Token::Close) return list;
    if (t.kind == Token::End)
      throw Error(ErrorKind::Syntax, "unterminated list", first.line, first.column);
    list.items.push_back(read_one(lexer, t));
  }
}

}  // namespace

const std::string& Sexp::head() const {
  static const std::string empty;
  if (is_atom) return atom;
  if (!items.empty() && items[0].is_atom) return items[0].atom;
  return empty;
}

std::vector<Sexp> read_sexprs(const std::string& text) {
  Lexer lexer(text);
  std::vector<Sexp> result;
  for (;;) {
    Token t = lexer.next();
    if (t.kind == Token::End) return result;
    result.push_back(read_one(lexer, t));
  }
}

}  // namespace plan2bt::pddl
