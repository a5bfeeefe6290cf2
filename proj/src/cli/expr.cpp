#include "fischerlab/cli/expr.hpp"

#include <cctype>
#include <limits>

#include "fischerlab/error.hpp"

namespace fischerlab::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, Field field)
      : text_(text), vars_(vars), field_(field) {}

  std::unique_ptr<Expr> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, unexpected());
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string unexpected() const {
    if (pos_ >= text_.size()) return "unexpected end of input";
    return std::string("unexpected '") + text_[pos_] + "'";
  }

  static std::unique_ptr<Expr> binary(Expr::Kind kind, std::size_t at, std::unique_ptr<Expr> l,
                                      std::unique_ptr<Expr> r) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->position = at;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) lhs = binary(Expr::Kind::Add, at, std::move(lhs), term());
      else if (accept('-')) lhs = binary(Expr::Kind::Sub, at, std::move(lhs), term());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) lhs = binary(Expr::Kind::Mul, at, std::move(lhs), unary());
      else if (accept('/')) lhs = binary(Expr::Kind::Div, at, std::move(lhs), unary());
      else return lhs;
    }
  }

  std::unique_ptr<Expr> unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Neg;
      e->position = at;
      e->lhs = unary();
      return e;
    }
    return factor();
  }

  std::unique_ptr<Expr> factor() {
    auto base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "exponent must be a non-negative integer literal");
    const mpz_class value = digits();
    if (value > std::numeric_limits<unsigned>::max() / 2) throw ParseError(at, "exponent too large");
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Pow;
    e->position = at;
    e->exponent = static_cast<unsigned>(value.get_ui());
    e->lhs = std::move(base);
    return e;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::unique_ptr<Expr> atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    auto e = std::make_unique<Expr>();
    e->position = at;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e->kind = Expr::Kind::Constant;
      e->constant = Scalar(field_, mpq_class(digits()));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      if (name == "i") {
        if (field_ != Field::Qi)
          throw ParseError(at, "'i' is not allowed over field Q (use --field Qi)");
        e->kind = Expr::Kind::Constant;
        e->constant = Scalar::imaginary_unit();
        return e;
      }
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) {
          e->kind = Expr::Kind::Variable;
          e->variable = k;
          return e;
        }
      throw UnknownVariable(at, name);
    }
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    throw ParseError(pos_, unexpected());
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text,
                                       const std::vector<std::string>& vars, Field field) {
  return Parser(text, vars, field).parse();
}

Poly lower(const Expr& e, std::size_t arity, Field field) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return Poly::constant(arity, e.constant);
    case Expr::Kind::Variable:
      return Poly::variable(arity, field, e.variable);
    case Expr::Kind::Add:
      return lower(*e.lhs, arity, field) + lower(*e.rhs, arity, field);
    case Expr::Kind::Sub:
      return lower(*e.lhs, arity, field) - lower(*e.rhs, arity, field);
    case Expr::Kind::Mul:
      return lower(*e.lhs, arity, field) * lower(*e.rhs, arity, field);
    case Expr::Kind::Neg:
      return -lower(*e.lhs, arity, field);
    case Expr::Kind::Pow:
      return pow(lower(*e.lhs, arity, field), e.exponent);
    case Expr::Kind::Div: {
      const Poly divisor = lower(*e.rhs, arity, field);
      if (divisor.is_zero()) throw ParseError(e.position, "division by zero");
      if (divisor.degree() != 0) throw ParseError(e.position, "divisor must be a constant");
      return lower(*e.lhs, arity, field) * divisor.constant_term().inverse();
    }
  }
  throw ParseError(e.position, "malformed expression");
}

Poly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                      Field field) {
  if (vars.empty()) throw InvalidArgument("at least one variable name is required");
  return lower(*parse_expression(text, vars, field), vars.size(), field);
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  if (arity <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return {names, names + arity};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= arity; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace fischerlab::cli
