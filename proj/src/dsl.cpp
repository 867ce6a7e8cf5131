#include "unbias/dsl.hpp"

#include <cctype>

namespace unbias {

std::string render(const ObjTerm& t) {
  switch (t.kind()) {
    case ObjTerm::Kind::Unit: return "I";
    case ObjTerm::Kind::Gen: return t.label();
    case ObjTerm::Kind::Tensor: return "(" + render(t.left()) + " * " + render(t.right()) + ")";
  }
  return "?";
}

std::string render(const MorTerm& t) {
  using K = MorTerm::Kind;
  const auto& o = t.objs();
  const auto& a = t.args();
  switch (t.kind()) {
    case K::Id: return "id " + render(o[0]);
    case K::Comp: {
      std::string rhs = render(a[1]);
      if (a[1].kind() == K::Comp) rhs = "(" + rhs + ")";
      return render(a[0]) + " ; " + rhs;
    }
    case K::Tensor: return "(" + render(a[0]) + " * " + render(a[1]) + ")";
    case K::Assoc: return "a " + render(o[0]) + " " + render(o[1]) + " " + render(o[2]);
    case K::LeftUnitor: return "l " + render(o[0]);
    case K::RightUnitor: return "r " + render(o[0]);
    case K::Braid: return "b " + render(o[0]) + " " + render(o[1]);
    case K::Inv: return "inv(" + render(a[0]) + ")";
  }
  return "?";
}

namespace {

struct Token {
  enum class Type { Ident, LParen, RParen, Star, Semi, End } type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(const std::string& text) { lex(text); }

  ObjTerm whole_obj() {
    ObjTerm t = obj();
    expect(Token::Type::End, "end of input");
    return t;
  }

  MorTerm whole_mor() {
    MorTerm t = mor_seq();
    expect(Token::Type::End, "end of input");
    return t;
  }

 private:
  void lex(const std::string& s) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < s.size();) {
      const char c = s[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
        continue;
      }
      Token::Type ty;
      switch (c) {
        case '(': ty = Token::Type::LParen; break;
        case ')': ty = Token::Type::RParen; break;
        case '*': ty = Token::Type::Star; break;
        case ';': ty = Token::Type::Semi; break;
        default: ty = Token::Type::Ident;
      }
      if (ty != Token::Type::Ident) {
        toks_.push_back({ty, std::string(1, c), line, col});
        ++col;
        ++i;
        continue;
      }
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        error(line, col, std::string("unexpected character '") + c + "'");
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      toks_.push_back({Token::Type::Ident, s.substr(i, j - i), line, col});
      col += j - i;
      i = j;
    }
    toks_.push_back({Token::Type::End, "", line, col});
  }

  [[noreturn]] static void error(std::size_t line, std::size_t col, const std::string& msg) {
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  [[noreturn]] void error_here(const std::string& expected) {
    const Token& t = toks_[pos_];
    error(t.line, t.column,
          "expected " + expected + ", found " + (t.type == Token::Type::End ? "end of input" : "'" + t.text + "'"));
  }

  const Token& peek() const { return toks_[pos_]; }

  void expect(Token::Type ty, const std::string& what) {
    if (peek().type != ty) error_here(what);
    ++pos_;
  }

  ObjTerm obj() {
    const Token& t = peek();
    if (t.type == Token::Type::Ident) {
      ++pos_;
      return t.text == "I" ? ObjTerm::unit() : ObjTerm::gen(t.text);
    }
    if (t.type != Token::Type::LParen) error_here("object");
    ++pos_;
    ObjTerm x = obj();
    expect(Token::Type::Star, "'*'");
    ObjTerm y = obj();
    expect(Token::Type::RParen, "')'");
    return ObjTerm::tensor(std::move(x), std::move(y));
  }

  MorTerm mor_seq() {
    MorTerm acc = mor_atom();
    while (peek().type == Token::Type::Semi) {
      ++pos_;
      acc = MorTerm::comp(std::move(acc), mor_atom());
    }
    return acc;
  }

  MorTerm mor_atom() {
    const Token t = peek();
    if (t.type == Token::Type::LParen) {
      ++pos_;
      MorTerm f = mor_seq();
      if (peek().type == Token::Type::RParen) {
        ++pos_;
        return f;
      }
      expect(Token::Type::Star, "'*' or ')'");
      MorTerm g = mor_seq();
      expect(Token::Type::RParen, "')'");
      return MorTerm::tensor(std::move(f), std::move(g));
    }
    if (t.type != Token::Type::Ident) error_here("morphism");
    ++pos_;
    if (t.text == "id") return MorTerm::id(obj());
    if (t.text == "l") return MorTerm::left_unitor(obj());
    if (t.text == "r") return MorTerm::right_unitor(obj());
    if (t.text == "b") {
      ObjTerm x = obj();
      return MorTerm::braid(std::move(x), obj());
    }
    if (t.text == "a") {
      ObjTerm x = obj();
      ObjTerm y = obj();
      return MorTerm::assoc(std::move(x), std::move(y), obj());
    }
    if (t.text == "inv") {
      expect(Token::Type::LParen, "'('");
      MorTerm f = mor_seq();
      expect(Token::Type::RParen, "')'");
      return MorTerm::inv(std::move(f));
    }
    --pos_;
    error_here("morphism");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjTerm parse_obj(const std::string& text) { return Parser(text).whole_obj(); }
MorTerm parse_mor(const std::string& text) { return Parser(text).whole_mor(); }

}  // namespace unbias
