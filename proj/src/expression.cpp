#include "casorati/expression.hpp"

#include <cctype>
#include <functional>
#include <random>

#include "casorati/errors.hpp"

namespace casorati {

Expr Expr::num(long v) {
  Expr e;
  e.kind = Kind::Number;
  e.number = v;
  return e;
}

Expr Expr::sym(char s) {
  Expr e;
  e.kind = Kind::Symbol;
  e.symbol = s;
  return e;
}

Expr Expr::binary(Kind k, Expr a, Expr b) {
  Expr e;
  e.kind = k;
  e.offset = a.offset;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::power(Expr base, unsigned n) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = n;
  e.offset = base.offset;
  e.args = {std::move(base)};
  return e;
}

Expr Expr::negate(Expr a) {
  Expr e;
  e.kind = Kind::Neg;
  e.args = {std::move(a)};
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Symbol: return a.symbol == b.symbol;
    case Expr::Kind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    default: break;
  }
  return a.args == b.args;
}

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) error("+, -, *, /, ^, )");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& expected) const {
    fail(ErrorCode::SyntaxError, "at offset " + std::to_string(last_end_) + ": expected one of " + expected);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      last_end_ = pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+'))
        e = Expr::binary(Expr::Kind::Add, std::move(e), term());
      else if (accept('-'))
        e = Expr::binary(Expr::Kind::Sub, std::move(e), term());
      else
        return e;
    }
  }
  Expr term() {
    Expr e = factor();
    for (;;) {
      if (accept('*'))
        e = Expr::binary(Expr::Kind::Mul, std::move(e), factor());
      else if (accept('/'))
        e = Expr::binary(Expr::Kind::Div, std::move(e), factor());
      else
        return e;
    }
  }
  Expr factor() {
    skip();
    const size_t at = pos_;
    if (accept('-')) {
      Expr e = Expr::negate(factor());
      e.offset = at;
      return e;
    }
    Expr base = atom();
    if (accept('^')) {
      skip();
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) error("unsigned integer exponent");
      if (pos_ - start > 4 || std::stoul(std::string(s_.substr(start, pos_ - start))) > kMaxExponent)
        fail(ErrorCode::InvalidArgument, "exponent too large");
      const unsigned n = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      last_end_ = pos_;
      return Expr::power(std::move(base), n);
    }
    return base;
  }
  Expr atom() {
    const char c = peek();
    const size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr e;
      e.number = BigInteger(std::string(s_.substr(at, pos_ - at)));
      e.offset = at;
      last_end_ = pos_;
      return e;
    }
    if (c == 'x' || c == 'y' || c == 't' || c == 'T') {
      // a lone letter; "theta" and friends are not atoms here
      if (pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))
        error("number, x, y, t, T, (, -");
      ++pos_;
      last_end_ = pos_;
      Expr e = Expr::sym(c);
      e.offset = at;
      return e;
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) error("+, -, *, /, ^, )");
      return e;
    }
    error("number, x, y, t, T, (, -");
  }

  std::string_view s_;
  size_t pos_ = 0;
  size_t last_end_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + to_string(e) + ")" : to_string(e); }

// ---- Ore evaluation ----

using Ore = std::vector<RationalFunction>;

void trim(Ore& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Ore ore_add(Ore a, const Ore& b, const RationalFunction& sign) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t k = 0; k < b.size(); ++k) a[k] += sign * b[k];
  trim(a);
  return a;
}

Ore ore_mul(const Ore& a, const Ore& b, OreRule rule) {
  if (a.empty() || b.empty()) return {};
  Ore out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      if (rule == OreRule::Shift) {
        out[i + j] += a[i] * b[j].shift(BigRational(static_cast<long>(i)));
      } else {
        // T^i b = sum_k C(i, k) b^(k) T^(i-k)
        RationalFunction d = b[j];
        BigInteger binom = 1;
        for (size_t k = 0; k <= i && !d.is_zero(); ++k) {
          out[i - k + j] += a[i] * d * RationalFunction(BigRational(binom));
          d = d.derivative();
          binom = binom * BigInteger(static_cast<long>(i - k)) / BigInteger(static_cast<long>(k + 1));
        }
      }
    }
  }
  trim(out);
  return out;
}

[[noreturn]] void symbol_error(const Expr& e) {
  fail(ErrorCode::SyntaxError,
       "at offset " + std::to_string(e.offset) + ": symbol '" + std::string(1, e.symbol) + "' not allowed here");
}

Ore ore_eval(const Expr& e, char var, OreRule rule, bool allow_T) {
  auto rec = [&](const Expr& s) { return ore_eval(s, var, rule, allow_T); };
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number == 0 ? Ore{} : Ore{RationalFunction(BigRational(e.number))};
    case Expr::Kind::Symbol:
      if (e.symbol == var) return Ore{RationalFunction::x()};
      if (e.symbol == 'T' && allow_T) return Ore{RationalFunction(0), RationalFunction(1)};
      symbol_error(e);
    case Expr::Kind::Add: return ore_add(rec(e.args[0]), rec(e.args[1]), 1);
    case Expr::Kind::Sub: return ore_add(rec(e.args[0]), rec(e.args[1]), -1);
    case Expr::Kind::Neg: return ore_add({}, rec(e.args[0]), -1);
    case Expr::Kind::Mul: return ore_mul(rec(e.args[0]), rec(e.args[1]), rule);
    case Expr::Kind::Div: {
      const Ore d = rec(e.args[1]);
      if (d.empty()) fail(ErrorCode::DivisionByZero, "division by zero at offset " + std::to_string(e.args[1].offset));
      if (d.size() > 1) fail(ErrorCode::InvalidArgument, "division by an operator containing T");
      return ore_mul(rec(e.args[0]), Ore{RationalFunction(1) / d[0]}, rule);
    }
    case Expr::Kind::Pow: {
      const Ore base = rec(e.args[0]);
      Ore out{RationalFunction(1)};
      for (unsigned k = 0; k < e.exponent; ++k) out = ore_mul(out, base, rule);
      return out;
    }
  }
  return {};
}

BivariatePolynomial bivariate_eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return BivariatePolynomial(RationalFunction(BigRational(e.number)));
    case Expr::Kind::Symbol:
      if (e.symbol == 'x') return BivariatePolynomial(RationalFunction::x());
      if (e.symbol == 'y') return BivariatePolynomial::y();
      symbol_error(e);
    case Expr::Kind::Add: return bivariate_eval(e.args[0]) + bivariate_eval(e.args[1]);
    case Expr::Kind::Sub: return bivariate_eval(e.args[0]) - bivariate_eval(e.args[1]);
    case Expr::Kind::Neg: return -bivariate_eval(e.args[0]);
    case Expr::Kind::Mul: return bivariate_eval(e.args[0]) * bivariate_eval(e.args[1]);
    case Expr::Kind::Div: {
      const BivariatePolynomial d = bivariate_eval(e.args[1]);
      if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
      if (d.degree_y() > 0) fail(ErrorCode::InvalidArgument, "division by a polynomial in y");
      return bivariate_eval(e.args[0]) * BivariatePolynomial(RationalFunction(1) / d.coeff(0));
    }
    case Expr::Kind::Pow: return bivariate_eval(e.args[0]).pow(e.exponent);
  }
  return {};
}

Polynomial as_polynomial(const RationalFunction& r, const char* what) {
  if (!r.is_polynomial()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be a polynomial");
  return r.num() * (BigRational(1) / r.den().leading());
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

namespace {

Expr random_tree(std::mt19937_64& gen, int depth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  if (depth <= 0 || pick(0, 3) == 0) {
    switch (pick(0, 3)) {
      case 0: return Expr::num(pick(0, 12));
      case 1: return Expr::sym('T');
      default: return Expr::sym('x');
    }
  }
  switch (pick(0, 6)) {
    case 0: return Expr::binary(Expr::Kind::Add, random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 1: return Expr::binary(Expr::Kind::Sub, random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 2:
    case 3: return Expr::binary(Expr::Kind::Mul, random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 4: {
      // divisor kept T-free and nonzero so the tree also evaluates
      Expr d = pick(0, 1) ? Expr::binary(Expr::Kind::Add, Expr::sym('x'), Expr::num(pick(1, 5))) : Expr::num(pick(1, 7));
      return Expr::binary(Expr::Kind::Div, random_tree(gen, depth - 1), std::move(d));
    }
    case 5: return Expr::power(random_tree(gen, depth - 1), static_cast<unsigned>(pick(0, 3)));
    default: return Expr::negate(random_tree(gen, depth - 1));
  }
}

}  // namespace

Expr random_expression(std::uint64_t seed, int max_depth) {
  std::mt19937_64 gen(seed);
  return random_tree(gen, max_depth);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.get_str();
    case Expr::Kind::Symbol: return std::string(1, e.symbol);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      const int p = precedence(e);
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - "
                     : e.kind == Expr::Kind::Mul ? "*" : "/";
      // left-associative: the right operand needs parens at equal precedence
      return wrap(e.args[0], precedence(e.args[0]) < p) + op + wrap(e.args[1], precedence(e.args[1]) <= p);
    }
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
    case Expr::Kind::Pow: return wrap(e.args[0], precedence(e.args[0]) < 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

std::vector<RationalFunction> evaluate_ore(const Expr& e, char var, OreRule rule, bool allow_T) {
  return ore_eval(e, var, rule, allow_T);
}

DifferenceForm parse_form(std::string_view text) {
  return DifferenceForm(evaluate_ore(parse_expression(text), 'x', OreRule::Shift));
}

RationalFunction parse_rational_function(std::string_view text, char var) {
  const auto c = evaluate_ore(parse_expression(text), var, OreRule::Shift, false);
  return c.empty() ? RationalFunction(0) : c[0];
}

Polynomial parse_polynomial(std::string_view text, char var) {
  return as_polynomial(parse_rational_function(text, var), "expression");
}

BigRational parse_constant(std::string_view text) {
  const RationalFunction r = parse_rational_function(text, 'x');
  if (!r.is_constant()) fail(ErrorCode::InvalidArgument, "expected a constant, got " + to_string(r));
  return r.constant_value();
}

BivariatePolynomial parse_bivariate(std::string_view text) { return bivariate_eval(parse_expression(text)); }

DifferentialOperator parse_differential_operator(std::string_view text) {
  const auto c = evaluate_ore(parse_expression(text), 'y', OreRule::Derivation);
  DifferentialOperator op;
  for (size_t r = 0; r < c.size(); ++r) {
    const Polynomial p = as_polynomial(c[r], "operator coefficient");
    for (int lambda = 0; lambda <= p.degree(); ++lambda)
      if (!is_zero(p.coeff(lambda))) op.add(lambda, static_cast<int>(r), p.coeff(lambda));
  }
  return op;
}

ShiftedDifferenceRelation parse_relation(std::string_view text, long offset) {
  const DifferenceForm form = parse_form(text);
  ShiftedDifferenceRelation rel;
  for (int k = 0; k <= form.order(); ++k) {
    const Polynomial a = as_polynomial(form.coeff(k), "relation coefficient");
    if (!a.is_zero()) rel.add(k - offset, a.shift(BigRational(-offset)));
  }
  return rel;
}

namespace {

class OperatorParser {
 public:
  OperatorParser(std::string_view text, int N) : s_(text), n_(N) {}

  TruncatedOperator parse() {
    TruncatedOperator op = sum();
    skip();
    if (pos_ < s_.size()) error("+, -, ., )");
    return op;
  }

 private:
  [[noreturn]] void error(const std::string& expected) const {
    fail(ErrorCode::SyntaxError, "at offset " + std::to_string(pos_) + ": expected one of " + expected);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::string bracketed() {
    if (!accept("[")) error("[");
    const size_t close = s_.find(']', pos_);
    if (close == std::string_view::npos) error("]");
    std::string inner(s_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return inner;
  }

  TruncatedOperator sum() {
    TruncatedOperator op = product();
    for (;;) {
      if (accept("+"))
        op = op + product();
      else if (accept("-"))
        op = op - product();
      else
        return op;
    }
  }
  TruncatedOperator product() {
    TruncatedOperator op = factor();
    while (accept(".")) op = compose(op, factor());
    return op;
  }
  TruncatedOperator factor() {
    if (accept("theta")) return theta_operator(n_);
    if (accept("form")) return difference_form_operator(parse_form(bracketed()), n_);
    if (accept("D")) return derivative_operator(n_);
    if (accept("I")) return identity_operator(n_);
    if (accept("S")) return substitution_operator(parse_polynomial(bracketed()), n_);
    if (accept("M")) return multiplication_operator(parse_polynomial(bracketed()), n_);
    if (accept("(")) {
      TruncatedOperator op = sum();
      if (!accept(")")) error(")");
      return op;
    }
    error("theta, D, I, S[..], M[..], form[..], (");
  }

  std::string_view s_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

TruncatedOperator parse_operator(std::string_view text, int N) { return OperatorParser(text, N).parse(); }

}  // namespace casorati
