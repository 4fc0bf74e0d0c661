#include <cctype>

#include "topohl/formula.hpp"

namespace topohl {

namespace {

enum class Tok { Ident, Nominal, Not, And, Or, Arrow, Box, Dia, At, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto two = [&](const char* t) { return s.compare(i, 2, t) == 0; };
    if (two("->")) {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
    } else if (two("[]")) {
      out.push_back({Tok::Box, "[]", start});
      i += 2;
    } else if (two("<>")) {
      out.push_back({Tok::Dia, "<>", start});
      i += 2;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", start});
      ++i;
    } else if (c == '@') {
      out.push_back({Tok::At, "@", start});
      ++i;
    } else if (c == '\'') {
      ++i;
      if (i >= s.size() || !identStart(s[i])) throw ParseError("expected nominal name after '", i);
      std::size_t b = i;
      while (i < s.size() && identChar(s[i])) ++i;
      out.push_back({Tok::Nominal, s.substr(b, i - b), start});
    } else if (identStart(c)) {
      while (i < s.size() && identChar(s[i])) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parseAll() {
    Formula f = parseImpl();
    if (peek().kind == Tok::RParen) throw ParseError("unbalanced parentheses: unexpected ')'", peek().pos);
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Formula parseImpl() {
    Formula lhs = parseOr();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::impl(lhs, parseImpl());
    }
    return lhs;
  }

  Formula parseOr() {
    Formula lhs = parseAnd();
    while (peek().kind == Tok::Or) {
      next();
      lhs = Formula::disj(lhs, parseAnd());
    }
    return lhs;
  }

  Formula parseAnd() {
    Formula lhs = parseUnary();
    while (peek().kind == Tok::And) {
      next();
      lhs = Formula::conj(lhs, parseUnary());
    }
    return lhs;
  }

  Formula parseUnary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Not: return Formula::neg(parseUnary());
      case Tok::Box: return Formula::box(parseUnary());
      case Tok::Dia: return Formula::dia(parseUnary());
      case Tok::At: {
        const Token& n = next();
        if (n.kind != Tok::Nominal) throw ParseError("expected nominal after '@'", n.pos);
        return Formula::at(n.text, parseUnary());
      }
      case Tok::Ident:
        if (t.text == "E") return Formula::exists(parseUnary());
        if (t.text == "A") return Formula::forall(parseUnary());
        return Formula::prop(t.text);
      case Tok::Nominal: return Formula::nom(t.text);
      case Tok::LParen: {
        Formula f = parseImpl();
        if (peek().kind != Tok::RParen) throw ParseError("unbalanced parentheses: expected ')'", peek().pos);
        next();
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty formula", 0);
  return Parser(lex(text)).parseAll();
}

}  // namespace topohl
