#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "casorati/polynomial.hpp"
#include "casorati/rational_function.hpp"
#include "casorati/roots.hpp"

namespace casorati {

/// Samples f(base), f(base + 1), ... of a function on the integer grid.
class GridFunction {
 public:
  GridFunction(long base, std::vector<BigRational> values);

  long base() const { return base_; }
  long last() const { return base_ + static_cast<long>(values_.size()) - 1; }
  const std::vector<BigRational>& values() const { return values_; }
  bool covers(long t) const { return t >= base_ && t <= last(); }
  /// Throws OutOfWindow outside the sampled range.
  const BigRational& at(long t) const;

  /// Samples g on [first, last].
  template <class Fn>
  static GridFunction tabulate(long first, long last, Fn&& g) {
    std::vector<BigRational> v;
    for (long t = first; t <= last; ++t) v.push_back(g(t));
    return GridFunction(first, std::move(v));
  }

 private:
  long base_;
  std::vector<BigRational> values_;
};

/// Linear difference form a_0(x) + a_1(x) T + ... + a_m(x) T^m over Q(x), where T f(x) = f(x+1)
/// and T a(x) = a(x+1) T.
class DifferenceForm {
 public:
  /// Order of the zero form; stands in for minus infinity.
  static constexpr int kZeroOrder = -1;

  DifferenceForm() = default;
  explicit DifferenceForm(std::vector<RationalFunction> coeffs);
  DifferenceForm(const RationalFunction& a0);  // NOLINT: multiplication operator

  static DifferenceForm theta(int power = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  RationalFunction coeff(int k) const;
  bool has_constant_coefficients() const;

  DifferenceForm& operator+=(const DifferenceForm& rhs);
  DifferenceForm& operator-=(const DifferenceForm& rhs);
  friend DifferenceForm operator+(DifferenceForm a, const DifferenceForm& b) { return a += b; }
  friend DifferenceForm operator-(DifferenceForm a, const DifferenceForm& b) { return a -= b; }
  DifferenceForm operator-() const;
  /// Noncommutative product: (A*B) f = A(B(f)).
  friend DifferenceForm operator*(const DifferenceForm& a, const DifferenceForm& b);
  friend bool operator==(const DifferenceForm& a, const DifferenceForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

/// sum_k a_k(t) f(t+k).
BigRational form_apply(const DifferenceForm& form, const GridFunction& f, long t);
/// The grid function t -> form_apply(form, f, t) on every t where it is defined.
GridFunction form_apply_all(const DifferenceForm& form, const GridFunction& f);

DifferenceForm form_mul(const DifferenceForm& a, const DifferenceForm& b);

struct FormDivision {
  DifferenceForm quotient;
  DifferenceForm remainder;
};
/// Left division A = Gamma * B + R with order(R) < order(B).
FormDivision form_divrem(const DifferenceForm& a, const DifferenceForm& b);

struct RuffiniDivision {
  DifferenceForm quotient;
  RationalFunction remainder;
};
/// Division by T - gamma through the Ruffini cascade.
RuffiniDivision ruffini_divide(const DifferenceForm& a, const RationalFunction& gamma);

bool form_divides(const DifferenceForm& b, const DifferenceForm& a);

/// True iff form_apply(F, omega, t) = 0 for t in [first, last].
bool is_root(const DifferenceForm& form, const GridFunction& omega, long first, long last);

/// t^j r^t (for r = 0 the j-th unit impulse at t = j).
struct BasisSolution {
  CharacteristicRoot root;
  int log_power = 0;
};

/// Basis of solutions of sum_k c_k y(t+k) = 0 where c = charpoly coefficients.
std::vector<BasisSolution> const_coeff_basis(const Polynomial& charpoly, bool exact_mode = true);
/// Exact value; requires an exact root and t >= 0 when the root is 0.
BigRational basis_value(const BasisSolution& s, long t);
std::complex<double> basis_value_numeric(const BasisSolution& s, long t);

struct PartialFractionTerm {
  BigRational root;
  int multiplicity = 1;
  /// coeffs[k-1] multiplies 1/(z - root)^k, k = 1..multiplicity.
  std::vector<BigRational> coeffs;
};
/// 1/F(z) = sum over roots and k of coeffs[k-1] / (z - root)^k, computed from the residue formula.
std::vector<PartialFractionTerm> cauchy_partial_fractions(const Polynomial& f);
BigRational partial_fraction_value(const std::vector<PartialFractionTerm>& terms, const BigRational& z);

struct NumericPartialFractionTerm {
  std::complex<double> root;
  int multiplicity = 1;
  std::vector<std::complex<double>> coeffs;
};
std::vector<NumericPartialFractionTerm> cauchy_partial_fractions_numeric(const Polynomial& f);

std::string to_string(const DifferenceForm& form);

}  // namespace casorati
