#include "qsa/expr.hpp"

#include <cctype>

namespace qsa {

ParseError::ParseError(Kind kind, std::size_t column, const std::string& what)
    : std::runtime_error(what + " at column " + std::to_string(column)), kind_(kind), column_(column), message_(what) {}

CallLiteral parse_call(const std::string& text, int arity) {
  const std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw ParseError(ParseError::Kind::Syntax, 1, "empty literal");
  const std::size_t open = text.find('(', first);
  const std::size_t last = text.find_last_not_of(" \t");
  if (open == std::string::npos) throw ParseError(ParseError::Kind::Syntax, text.size() + 1, "expected '('");
  if (text[last] != ')') throw ParseError(ParseError::Kind::Syntax, last + 1, "expected ')'");
  CallLiteral c;
  c.name = text.substr(first, open - first);
  while (!c.name.empty() && std::isspace(static_cast<unsigned char>(c.name.back()))) c.name.pop_back();
  if (c.name.empty()) throw ParseError(ParseError::Kind::Syntax, first + 1, "missing literal name");
  std::size_t start = open + 1;
  int depth = 0;
  for (std::size_t k = open + 1; k <= last; ++k) {
    if (k < last && text[k] == '(') ++depth;
    if (k < last && text[k] == ')') --depth;
    if (k == last || (text[k] == ';' && depth == 0)) {
      c.args.push_back(text.substr(start, k - start));
      c.columns.push_back(start + 1);
      start = k + 1;
    }
  }
  if (c.args.size() == 1 && c.args[0].find_first_not_of(" \t") == std::string::npos) {
    c.args.clear();
    c.columns.clear();
  }
  if (arity >= 0 && c.args.size() != static_cast<std::size_t>(arity))
    throw ParseError(ParseError::Kind::Syntax, open + 1,
                     c.name + "(...) takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
  return c;
}

Scalar CallLiteral::scalar(std::size_t k) const {
  try {
    return Scalar::parse(args.at(k));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), columns[k] + e.column() - 1, e.message());
  }
}

Scalar CallLiteral::nonzero_scalar(std::size_t k) const {
  Scalar s = scalar(k);
  const std::size_t lead = args[k].find_first_not_of(" \t");
  if (s.is_zero())
    throw ParseError(ParseError::Kind::Domain, columns[k] + (lead == std::string::npos ? 0 : lead),
                     "parameter must be nonzero");
  return s;
}

long CallLiteral::integer(std::size_t k) const {
  const std::string& a = args.at(k);
  const std::size_t lead = a.find_first_not_of(" \t");
  std::size_t used = 0;
  long v = 0;
  bool ok = lead != std::string::npos;
  if (ok) {
    try {
      v = std::stol(a.substr(lead), &used);
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || a.find_first_not_of(" \t", lead + used) != std::string::npos)
    throw ParseError(ParseError::Kind::Syntax, columns[k] + (lead == std::string::npos ? 0 : lead),
                     "expected an integer");
  return v;
}

namespace {

struct Token {
  enum class Type { Number, Ident, Op, End };
  Type type;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Number, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Type::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Type::Op, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(ParseError::Kind::Syntax, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  bool at_op(const char* op) const { return peek().type == Token::Type::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, peek().column, msg);
  }

  static ExprPtr node(Expr::Op op, std::size_t col, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->column = col;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    auto lhs = term();
    while (at_op("+") || at_op("-")) {
      const auto op = peek().text == "+" ? Expr::Op::Add : Expr::Op::Sub;
      const auto col = peek().column;
      ++pos_;
      lhs = node(op, col, {lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    while (at_op("*") || at_op("/")) {
      const auto op = peek().text == "*" ? Expr::Op::Mul : Expr::Op::Div;
      const auto col = peek().column;
      ++pos_;
      lhs = node(op, col, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_op("-")) {
      const auto col = peek().column;
      ++pos_;
      return node(Expr::Op::Neg, col, {unary()});
    }
    return power();
  }

  long exponent() {
    bool paren = false;
    if (at_op("(")) {
      paren = true;
      ++pos_;
    }
    bool neg = false;
    if (at_op("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().type != Token::Type::Number) fail("exponent must be an integer");
    const long v = std::stol(peek().text);
    ++pos_;
    if (paren) {
      if (!at_op(")")) fail("expected ')'");
      ++pos_;
    }
    return neg ? -v : v;
  }

  ExprPtr power() {
    auto base = atom();
    if (at_op("^")) {
      const auto col = peek().column;
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Pow;
      e->column = col;
      e->exponent = exponent();
      e->args = {base};
      if (at_op("^")) fail("chained '^' is ambiguous; use parentheses");
      return e;
    }
    return base;
  }

  ExprPtr atom() {
    const Token& tok = peek();
    if (tok.type == Token::Type::Number) {
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Number;
      e->column = tok.column;
      e->text = tok.text;
      ++pos_;
      return e;
    }
    if (tok.type == Token::Type::Ident) {
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Symbol;
      e->column = tok.column;
      e->text = tok.text;
      ++pos_;
      return e;
    }
    if (at_op("(")) {
      ++pos_;
      auto e = expr();
      if (!at_op(")")) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (tok.type == Token::Type::End) fail("unexpected end of input");
    fail("unexpected '" + tok.text + "'");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// Scalar wrapper satisfying the evaluate() ring contract.
struct ScalarRing {
  Scalar v;
  explicit ScalarRing(Scalar s) : v(std::move(s)) {}
  friend ScalarRing operator+(const ScalarRing& a, const ScalarRing& b) { return ScalarRing(a.v + b.v); }
  friend ScalarRing operator-(const ScalarRing& a, const ScalarRing& b) { return ScalarRing(a.v - b.v); }
  friend ScalarRing operator*(const ScalarRing& a, const ScalarRing& b) { return ScalarRing(a.v * b.v); }
  ScalarRing operator-() const { return ScalarRing(-v); }
  static std::optional<ScalarRing> invert(const ScalarRing& a) {
    if (a.v.is_zero()) return std::nullopt;
    return ScalarRing(a.v.inverse());
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(tokenize(text)).parse(); }

Scalar Scalar::parse(const std::string& text) {
  auto e = parse_expr(text);
  std::function<std::optional<ScalarRing>(const std::string&)> none = [](const std::string&) {
    return std::optional<ScalarRing>();
  };
  return evaluate<ScalarRing>(*e, none).v;
}

}  // namespace qsa
