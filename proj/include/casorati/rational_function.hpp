#pragma once

#include <complex>
#include <string>

#include "casorati/polynomial.hpp"

namespace casorati {

/// Element of Q(x) kept in normal form: gcd(num, den) = 1 and den monic,
/// so structural equality is field equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}        // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                      // NOLINT

  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Value of a constant rational function.
  BigRational constant_value() const;

  /// Exact value; throws PoleAtPoint when den(at) = 0.
  BigRational operator()(const BigRational& at) const;
  std::complex<double> operator()(std::complex<double> at) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction shift(const BigRational& k) const;
  RationalFunction derivative() const;
  RationalFunction pow(int n) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

enum class FieldOp { Add, Sub, Mul, Div };
/// Field arithmetic dispatched on op; Div by zero throws DivisionByZero.
RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, FieldOp op);
/// Exact evaluation; PoleAtPoint at a zero of the denominator.
BigRational ratfunc_eval(const RationalFunction& a, const BigRational& x0);

std::string to_string(const RationalFunction& r, char var = 'x');

}  // namespace casorati
