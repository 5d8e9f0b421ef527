#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "motive/errors.hpp"
#include "motive/exact_math.hpp"
#include "motive/surface_calculus.hpp"
#include "motive/threefold_calculus.hpp"

namespace motive::dsl {

enum class Mode { Surface, Threefold };

// Arity, range and type errors raised while resolving an expression.
class EvalError : public Error {
 public:
  using Error::Error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Atom arguments are integer indices or, for the tensor constructor, expressions.
using Arg = std::variant<long, ExprPtr>;

struct Sum {
  std::vector<ExprPtr> terms;
};
struct Scale {
  Rational factor;
  ExprPtr body;
};
struct Compose {
  ExprPtr left;
  ExprPtr right;
};
struct Transpose {
  ExprPtr body;
};
struct NamedAtom {
  std::string name;
  std::vector<Arg> args;
  bool has_parens = false;
};

struct Expr {
  std::variant<Sum, Scale, Compose, Transpose, NamedAtom> node;
};

bool operator==(const Expr& a, const Expr& b);

// expr := term (('+' | '-') term)*
// term := '-' term | (rational '*')? factor ('.' factor)*
// factor := 't' '(' expr ')' | name ('(' args ')')? | '(' expr ')'
ExprPtr parse_expr(const std::string& source);

// Fully parenthesized source text that parses back to an equal tree.
std::string print_expr(const Expr& e);

using Value = std::variant<SurfCorr, SurfTensorSum>;

// Resolves names against the level's symbol table and evaluates.
Value eval_expr(const Expr& e, int level, Mode mode);

// Canonical normal form of a value; threefold values are expanded.
std::string render_value(const Value& v);
bool is_zero(const Value& v);

// Names accepted in each mode, for help text.
std::vector<std::string> symbol_names(Mode mode);

}  // namespace motive::dsl
