#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace scv {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at " + std::to_string(l) + ":" + std::to_string(c)),
        line(l),
        col(c) {}
};

struct Span {
  int line = 0, col = 0;
};

// Expression AST.
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  enum class Kind {
    Number,     // rational literal
    Imaginary,  // i
    Ident,      // generator / let / parameter name
    Call,       // name(args...): d, D, D1, D2, subst, or catalog builder
    Neg,
    Sum,        // chain with signs
    Product,    // scalar * chain
    NormalOrder,  // :f1 f2 ...:
    BracketOp,  // [x, y]
  };
  Kind kind;
  Span span;
  long num = 0, den = 1;
  std::string name;
  std::vector<ExprPtr> args;
  std::vector<int> signs;                                // for Sum
  std::vector<std::pair<std::string, ExprPtr>> kwargs;   // for subst
};

struct Statement {
  enum class Kind { Algebra, Param, Let, Command };
  Kind kind;
  Span span;
  std::string name;  // algebra/let/param name, or command verb
  // algebra declaration
  std::string ctor;
  std::vector<std::pair<std::string, bool>> basis;  // name -> odd
  std::vector<std::string> copies;
  std::string path;  // load(...)
  // param declaration
  std::vector<std::string> params;
  // let / command payload
  ExprPtr value;
  std::vector<ExprPtr> args;
  std::vector<std::string> with_names;  // constraints ... with m1, m2
  std::string suite;                    // suite <name>
};

struct Script {
  std::vector<Statement> statements;
};

Script parse_script(const std::string& text);
// Single expression (used by tests and the JSON round trip).
ExprPtr parse_expression(const std::string& text);

}  // namespace scv
