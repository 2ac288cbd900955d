#pragma once

// Surface syntax for scalars and algebra elements.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] integer | '^' '(' ['-'] integer ')')?
//   atom  := integer | identifier | '(' expr ')'
//
// Multiplication is explicit and order preserving; whitespace is ignored.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsa/scalar.hpp"

namespace qsa {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, Domain };
  ParseError(Kind kind, std::size_t column, const std::string& what);
  Kind kind() const { return kind_; }
  /// 1-based column of the offending token.
  std::size_t column() const { return column_; }
  /// The message without the column suffix.
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  std::size_t column_;
  std::string message_;
};

/// A literal of the form name(arg;arg;...), e.g. aut(q;1;2;0).
struct CallLiteral {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::size_t> columns;  // 1-based column of each argument

  /// Argument k as a Scalar / integer; errors carry columns of the whole text.
  Scalar scalar(std::size_t k) const;
  Scalar nonzero_scalar(std::size_t k) const;
  long integer(std::size_t k) const;
};

/// Throws ParseError unless the text is name(...) with `arity` arguments
/// (any arity when arity < 0).
CallLiteral parse_call(const std::string& text, int arity = -1);

struct Expr {
  enum class Op { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Number;
  std::size_t column = 1;
  std::string text;  // digits for Number, name for Symbol
  long exponent = 0;  // Pow only
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);

/// Evaluate an expression in a ring R. R must be constructible from Scalar and
/// support +, -, *, unary -, and `static std::optional<R> invert(const R&)`.
/// The resolver maps identifiers to ring values; `q` is always the scalar q.
template <class R>
R evaluate(const Expr& e, const std::function<std::optional<R>(const std::string&)>& resolve) {
  auto sub = [&](std::size_t i) { return evaluate<R>(*e.args[i], resolve); };
  switch (e.op) {
    case Expr::Op::Number:
      return R(Scalar(mpq_class(e.text)));
    case Expr::Op::Symbol: {
      if (e.text == "q") return R(Scalar::q());
      if (auto v = resolve(e.text)) return *v;
      throw ParseError(ParseError::Kind::UnknownSymbol, e.column, "unknown symbol '" + e.text + "'");
    }
    case Expr::Op::Add:
      return sub(0) + sub(1);
    case Expr::Op::Sub:
      return sub(0) - sub(1);
    case Expr::Op::Mul:
      return sub(0) * sub(1);
    case Expr::Op::Neg:
      return -sub(0);
    case Expr::Op::Div: {
      R d = sub(1);
      auto inv = R::invert(d);
      if (!inv) throw ParseError(ParseError::Kind::Domain, e.args[1]->column, "divisor is not invertible");
      return sub(0) * *inv;
    }
    case Expr::Op::Pow: {
      R base = sub(0);
      long n = e.exponent;
      if (n < 0) {
        auto inv = R::invert(base);
        if (!inv) throw ParseError(ParseError::Kind::Domain, e.column, "negative power of a non-invertible element");
        base = *inv;
        n = -n;
      }
      R result(Scalar(1));
      for (long i = 0; i < n; ++i) result = result * base;
      return result;
    }
  }
  throw ParseError(ParseError::Kind::Syntax, e.column, "malformed expression");
}

}  // namespace qsa
