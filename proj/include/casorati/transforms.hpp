#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "casorati/difference_form.hpp"
#include "casorati/polynomial.hpp"

namespace casorati {

/// sum a[lambda, r] * y^lambda * phi^(r)(y).
struct DifferentialOperator {
  std::map<std::pair<int, int>, BigRational> coeffs;  // (lambda, r) -> a, no zero entries

  void add(int lambda, int r, const BigRational& a);
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;
};

/// sum c_s(x) f(x + s) = 0.
struct ShiftedDifferenceRelation {
  std::map<long, Polynomial> terms;  // shift -> coefficient, no zero entries

  void add(long shift, const Polynomial& c);
  friend bool operator==(const ShiftedDifferenceRelation&, const ShiftedDifferenceRelation&) = default;
};

DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b);
DifferentialOperator operator*(const BigRational& s, const DifferentialOperator& a);
ShiftedDifferenceRelation operator+(const ShiftedDifferenceRelation& a, const ShiftedDifferenceRelation& b);
ShiftedDifferenceRelation operator*(const BigRational& s, const ShiftedDifferenceRelation& a);

/// (-1)^r (x + lambda - 1)(x + lambda - 2)...(x + lambda - r); 1 for r = 0.
Polynomial transform_factor(int lambda, int r);

/// Integration by parts against y^(x-1), boundary terms dropped.
ShiftedDifferenceRelation diff_to_difference(const DifferentialOperator& op);
/// The unique preimage when c_s lies in the span of the factors for lambda - r = s, else nothing.
std::optional<DifferentialOperator> difference_to_diff(const ShiftedDifferenceRelation& rel);

struct ThetaEmbedding {
  DifferenceForm form;
  long offset = 0;  // form applied at t equals the relation evaluated at x = t + offset
};
ThetaEmbedding as_theta_form(const ShiftedDifferenceRelation& rel);

/// sum c_s(x) f(x + s) at the integer x.
BigRational relation_apply(const ShiftedDifferenceRelation& rel, const GridFunction& f, long x);

std::string to_string(const DifferentialOperator& op);
std::string to_string(const ShiftedDifferenceRelation& rel);

}  // namespace casorati
