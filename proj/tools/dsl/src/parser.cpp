#include <cctype>

#include "motive/dsl.hpp"
#include "motive/errors.hpp"

namespace motive::dsl {

namespace {

template <class T>
ExprPtr make(T node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

ExprPtr negate(const ExprPtr& e) {
  if (const auto* s = std::get_if<Scale>(&e->node)) return make(Scale{-s->factor, s->body});
  return make(Scale{Rational(-1), e});
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(negate(term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    return make(Sum{std::move(terms)});
  }

  ExprPtr term() {
    if (accept('-')) return negate(term());
    if (peek_digit()) {
      std::size_t at = pos_;
      std::string num = digits();
      if (accept('/')) {
        skip();
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      expect('*');
      Rational q;
      try {
        q = Rational::parse(num);
      } catch (const std::exception&) {
        throw ParseError("bad rational '" + num + "'", at);
      }
      return make(Scale{q, chain()});
    }
    return chain();
  }

  ExprPtr chain() {
    ExprPtr e = factor();
    while (accept('.')) e = make(Compose{e, factor()});
    return e;
  }

  ExprPtr factor() {
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) {
      pos_ = start;
      fail("expected a name, '(' or 't('");
    }
    if (name == "t") {
      expect('(');
      ExprPtr e = expr();
      expect(')');
      return make(Transpose{e});
    }
    NamedAtom a{name, {}, false};
    if (accept('(')) {
      a.has_parens = true;
      if (!accept(')')) {
        do a.args.push_back(arg());
        while (accept(','));
        expect(')');
      }
    }
    return make(std::move(a));
  }

  Arg arg() {
    // A bare, possibly signed, integer followed by ',' or ')' is an index.
    skip();
    std::size_t save = pos_;
    bool neg = accept('-');
    if (peek_digit()) {
      std::string d = digits();
      if (peek(',') || peek(')')) {
        long v = std::stol(d);
        return neg ? -v : v;
      }
    }
    pos_ = save;
    return expr();
  }
};

bool args_equal(const std::vector<Arg>& a, const std::vector<Arg>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) return false;
    if (const long* x = std::get_if<long>(&a[i])) {
      if (*x != std::get<long>(b[i])) return false;
    } else if (!(*std::get<ExprPtr>(a[i]) == *std::get<ExprPtr>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Sum>) {
          if (x.terms.size() != y.terms.size()) return false;
          for (std::size_t i = 0; i < x.terms.size(); ++i)
            if (!(*x.terms[i] == *y.terms[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Scale>) {
          return x.factor == y.factor && *x.body == *y.body;
        } else if constexpr (std::is_same_v<T, Compose>) {
          return *x.left == *y.left && *x.right == *y.right;
        } else if constexpr (std::is_same_v<T, Transpose>) {
          return *x.body == *y.body;
        } else {
          return x.name == y.name && x.has_parens == y.has_parens && args_equal(x.args, y.args);
        }
      },
      a.node);
}

ExprPtr parse_expr(const std::string& source) { return Parser(source).parse(); }

std::string print_expr(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sum>) {
          std::string s;
          for (std::size_t i = 0; i < x.terms.size(); ++i) s += (i ? " + (" : "(") + print_expr(*x.terms[i]) + ")";
          return s;
        } else if constexpr (std::is_same_v<T, Scale>) {
          return x.factor.to_string() + " * (" + print_expr(*x.body) + ")";
        } else if constexpr (std::is_same_v<T, Compose>) {
          return "(" + print_expr(*x.left) + ") . (" + print_expr(*x.right) + ")";
        } else if constexpr (std::is_same_v<T, Transpose>) {
          return "t(" + print_expr(*x.body) + ")";
        } else {
          std::string s = x.name;
          if (!x.has_parens) return s;
          s += "(";
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (i) s += ",";
            if (const long* v = std::get_if<long>(&x.args[i]))
              s += std::to_string(*v);
            else
              s += print_expr(*std::get<ExprPtr>(x.args[i]));
          }
          return s + ")";
        }
      },
      e.node);
}

}  // namespace motive::dsl
