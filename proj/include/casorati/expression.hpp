#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "casorati/bivariate.hpp"
#include "casorati/difference_form.hpp"
#include "casorati/operator_calculus.hpp"
#include "casorati/polynomial.hpp"
#include "casorati/rational_function.hpp"
#include "casorati/transforms.hpp"

namespace casorati {

/// Syntax tree of the expression grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" uint)? | "-" factor
///   atom   := number | "x" | "y" | "t" | "T" | "(" expr ")"
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind = Kind::Number;
  BigInteger number;      // Number
  char symbol = 0;        // Symbol
  unsigned exponent = 0;  // Pow
  std::vector<Expr> args;
  size_t offset = 0;  // byte offset in the source, not part of the structure

  static Expr num(long v);
  static Expr sym(char s);
  static Expr binary(Kind k, Expr a, Expr b);
  static Expr power(Expr base, unsigned e);
  static Expr negate(Expr a);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// SyntaxError carries the offset just past the last accepted token and the expected token set.
Expr parse_expression(std::string_view text);
/// Minimal parenthesization; parse_expression(to_string(e)) == e.
std::string to_string(const Expr& e);

/// Random tree over the symbols x and T with small integers; deterministic in seed.
Expr random_expression(std::uint64_t seed, int max_depth = 4);

/// T a = a(v+1) T, or T a = a T + a' when T stands for d/dv.
enum class OreRule { Shift, Derivation };

/// Coefficients of sum a_k(v) T^k, T to the right. Symbols other than var and T are SyntaxError.
std::vector<RationalFunction> evaluate_ore(const Expr& e, char var, OreRule rule, bool allow_T = true);

DifferenceForm parse_form(std::string_view text);
RationalFunction parse_rational_function(std::string_view text, char var = 'x');
Polynomial parse_polynomial(std::string_view text, char var = 'x');
BigRational parse_constant(std::string_view text);
/// Polynomial in y over Q(x).
BivariatePolynomial parse_bivariate(std::string_view text);
/// Polynomial coefficients in y with T read as d/dy, e.g. "(1-y)*T + 2".
DifferentialOperator parse_differential_operator(std::string_view text);
/// sum p_s(x) f(x+s) from a T-form, shifting by -offset: p_(k-offset)(x) = a_k(x - offset).
ShiftedDifferenceRelation parse_relation(std::string_view text, long offset = 0);

/// Operator specs:
///   op     := oterm (("+"|"-") oterm)*
///   oterm  := ofac ("." ofac)*
///   ofac   := "theta" | "D" | "I" | "S[" poly "]" | "M[" poly "]" | "form[" expr "]" | "(" op ")"
TruncatedOperator parse_operator(std::string_view text, int N);

}  // namespace casorati
