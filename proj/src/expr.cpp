#include "scvertex/expr.hpp"

#include <cctype>

namespace scv {

namespace {

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

struct Lexer {
  std::string src;
  std::size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Token> tokens;

  void bump(char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') bump(src[pos]);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        bump(c);
        continue;
      }
      int l = line, co = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
          id += src[pos];
          bump(src[pos]);
        }
        // command verbs like verify-sconf
        while (pos < src.size() && src[pos] == '-' && pos + 1 < src.size() &&
               std::isalpha(static_cast<unsigned char>(src[pos + 1]))) {
          id += src[pos];
          bump(src[pos]);
          while (pos < src.size() &&
                 (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            id += src[pos];
            bump(src[pos]);
          }
        }
        tokens.push_back({Token::Kind::Ident, id, l, co});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string n;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
          n += src[pos];
          bump(src[pos]);
        }
        tokens.push_back({Token::Kind::Number, n, l, co});
        continue;
      }
      if (c == '"') {
        bump(c);
        std::string s;
        while (pos < src.size() && src[pos] != '"') {
          s += src[pos];
          bump(src[pos]);
        }
        if (pos == src.size()) fail("unterminated string");
        bump('"');
        tokens.push_back({Token::Kind::String, s, l, co});
        continue;
      }
      static const std::string puncts = ":;,=*+-/(){}[]";
      if (puncts.find(c) != std::string::npos) {
        tokens.push_back({Token::Kind::Punct, std::string(1, c), l, co});
        bump(c);
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({Token::Kind::End, "", line, col});
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek(int k = 0) const { return toks[std::min(at + k, toks.size() - 1)]; }
  const Token& next() { return toks[at == toks.size() - 1 ? at : at++]; }
  bool is_punct(const std::string& p, int k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool is_ident(const std::string& s, int k = 0) const {
    return peek(k).kind == Token::Kind::Ident && peek(k).text == s;
  }
  void expect_punct(const std::string& p) {
    if (!is_punct(p)) fail("expected '" + p + "'");
    next();
  }
  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected identifier");
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + (peek().kind == Token::Kind::End ? " (at end of input)"
                                                            : ", got '" + peek().text + "'"),
                     peek().line, peek().col);
  }
  Span span() const { return Span{peek().line, peek().col}; }

  ExprPtr mk(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->span = span();
    return e;
  }

  // atom := number | i | ident | ident(...) | :juxta: | [e, e] | (expr)
  ExprPtr parse_atom() {
    if (peek().kind == Token::Kind::Number) {
      auto e = mk(Expr::Kind::Number);
      e->num = std::stol(next().text);
      if (is_punct("/") && peek(1).kind == Token::Kind::Number) {
        next();
        e->den = std::stol(next().text);
        if (e->den == 0) fail("zero denominator");
      }
      return e;
    }
    if (peek().kind == Token::Kind::Ident) {
      std::string id = next().text;
      if (id == "i") {
        auto e = mk(Expr::Kind::Imaginary);
        return e;
      }
      if (is_punct("(")) {
        next();
        auto e = mk(Expr::Kind::Call);
        e->name = id;
        if (id == "subst") {
          e->args.push_back(parse_expr());
          while (is_punct(",")) {
            next();
            std::string pname = expect_ident();
            expect_punct("=");
            e->kwargs.emplace_back(pname, parse_expr());
          }
        } else if (!is_punct(")")) {
          e->args.push_back(parse_expr());
          while (is_punct(",")) {
            next();
            e->args.push_back(parse_expr());
          }
        }
        expect_punct(")");
        return e;
      }
      auto e = mk(Expr::Kind::Ident);
      e->name = id;
      return e;
    }
    if (is_punct(":")) {
      next();
      auto e = mk(Expr::Kind::NormalOrder);
      while (!is_punct(":")) {
        if (peek().kind == Token::Kind::End) fail("unterminated normal product");
        e->args.push_back(parse_atom());
      }
      next();
      if (e->args.empty()) fail("empty normal product");
      return e;
    }
    if (is_punct("[")) {
      next();
      auto e = mk(Expr::Kind::BracketOp);
      e->args.push_back(parse_expr());
      expect_punct(",");
      e->args.push_back(parse_expr());
      expect_punct("]");
      return e;
    }
    if (is_punct("(")) {
      next();
      ExprPtr e = parse_expr();
      expect_punct(")");
      return e;
    }
    fail("expected an expression");
  }

  ExprPtr parse_factor() {
    if (is_punct("-")) {
      next();
      auto e = mk(Expr::Kind::Neg);
      e->args.push_back(parse_factor());
      return e;
    }
    return parse_atom();
  }

  ExprPtr parse_term() {
    ExprPtr first = parse_factor();
    if (!is_punct("*")) return first;
    auto e = mk(Expr::Kind::Product);
    e->args.push_back(first);
    while (is_punct("*")) {
      next();
      e->args.push_back(parse_factor());
    }
    return e;
  }

  ExprPtr parse_expr() {
    auto e = mk(Expr::Kind::Sum);
    e->args.push_back(parse_term());
    e->signs.push_back(+1);
    while (is_punct("+") || is_punct("-")) {
      int sg = peek().text == "+" ? +1 : -1;
      next();
      e->args.push_back(parse_term());
      e->signs.push_back(sg);
    }
    if (e->args.size() == 1 && e->signs[0] == 1) return e->args[0];
    return e;
  }

  std::vector<std::pair<std::string, bool>> parse_basis() {
    std::vector<std::pair<std::string, bool>> basis;
    expect_punct("{");
    while (!is_punct("}")) {
      std::string n = expect_ident();
      expect_punct(":");
      std::string p = expect_ident();
      if (p != "even" && p != "odd") fail("parity must be even or odd");
      basis.emplace_back(n, p == "odd");
      if (is_punct(",")) next();
    }
    next();
    if (basis.empty()) fail("empty basis");
    return basis;
  }

  Statement parse_statement() {
    Statement st;
    st.span = span();
    if (is_ident("algebra")) {
      next();
      st.kind = Statement::Kind::Algebra;
      st.name = expect_ident();
      expect_punct("=");
      st.ctor = expect_ident();
      if (st.ctor == "susy_cff" || st.ctor == "cff" || st.ctor == "n2_bc_beta_gamma") {
        st.basis = parse_basis();
      } else if (st.ctor == "bc_beta_gamma") {
        if (is_punct("{")) {
          next();
          while (!is_punct("}")) {
            st.copies.push_back(expect_ident());
            if (is_punct(",")) next();
          }
          next();
        }
      } else if (st.ctor == "load") {
        expect_punct("(");
        if (peek().kind != Token::Kind::String) fail("load expects a file path string");
        st.path = next().text;
        expect_punct(")");
      } else {
        fail("unknown algebra constructor '" + st.ctor + "'");
      }
      expect_punct(";");
      return st;
    }
    if (is_ident("param")) {
      next();
      st.kind = Statement::Kind::Param;
      st.params.push_back(expect_ident());
      while (is_punct(",")) {
        next();
        st.params.push_back(expect_ident());
      }
      expect_punct(";");
      return st;
    }
    if (is_ident("let")) {
      next();
      st.kind = Statement::Kind::Let;
      st.name = expect_ident();
      expect_punct("=");
      st.value = parse_expr();
      expect_punct(";");
      return st;
    }
    // command
    st.kind = Statement::Kind::Command;
    st.name = expect_ident();
    static const std::map<std::string, int> arities = {
        {"bracket", 2},        {"normalize", 1}, {"weight", 2},     {"charge", 1},
        {"brst", 1},           {"homotopy", 1},  {"components", 1}, {"verify-virasoro", 1},
        {"verify-n1", 2},      {"verify-n2", 4}, {"verify-sconf", 1}, {"verify-nk2", 1},
        {"constraints", 1},    {"suite", 0},     {"render", 1}};
    auto it = arities.find(st.name);
    if (it == arities.end()) fail("unknown command '" + st.name + "'");
    if (st.name == "suite") {
      st.suite = expect_ident();
    } else if (it->second == 1) {
      // single-argument commands accept a full expression up to ';'/'with'
      st.args.push_back(parse_expr());
    } else {
      for (int k = 0; k < it->second; ++k) st.args.push_back(parse_factor());
      if (st.name == "constraints") {
        if (!is_ident("with")) fail("constraints needs a 'with' clause");
        next();
        st.with_names.push_back(expect_ident());
        while (is_punct(",")) {
          next();
          st.with_names.push_back(expect_ident());
        }
      }
    }
    expect_punct(";");
    return st;
  }
};

}  // namespace

Script parse_script(const std::string& text) {
  Lexer lex;
  lex.src = text;
  lex.run();
  Parser p{std::move(lex.tokens)};
  Script s;
  while (p.peek().kind != Token::Kind::End) s.statements.push_back(p.parse_statement());
  return s;
}

ExprPtr parse_expression(const std::string& text) {
  Lexer lex;
  lex.src = text;
  lex.run();
  Parser p{std::move(lex.tokens)};
  ExprPtr e = p.parse_expr();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input after expression");
  return e;
}

}  // namespace scv
