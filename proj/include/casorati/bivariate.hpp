#pragma once

#include <complex>
#include <string>
#include <vector>

#include "casorati/rational_function.hpp"

namespace casorati {

/// Polynomial in y whose coefficients live in Q(x); entry j multiplies y^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<RationalFunction> coeffs);
  BivariatePolynomial(const RationalFunction& constant);  // NOLINT

  static BivariatePolynomial y() { return BivariatePolynomial({RationalFunction(0), RationalFunction(1)}); }

  int degree_y() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  RationalFunction coeff(int j) const;
  const RationalFunction& leading() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }
  BivariatePolynomial operator-() const;
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  BivariatePolynomial derivative_y() const;
  BivariatePolynomial derivative_x() const;
  BivariatePolynomial pow(unsigned n) const;

  /// f(x0, y0) in double precision.
  std::complex<double> operator()(std::complex<double> x0, std::complex<double> y0) const;

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

/// Division in y over the field Q(x).
std::pair<BivariatePolynomial, BivariatePolynomial> divrem_y(const BivariatePolynomial& a,
                                                              const BivariatePolynomial& b);

struct BezoutResult {
  BivariatePolynomial A;
  BivariatePolynomial B;
  RationalFunction phi;
};

/// A*f + B*f_y = phi with phi free of y. phi is the primitive integer part of the numerator of the
/// last Euclidean remainder; it divides Res_y(f, f_y).
/// Throws NotSquarefree when f and f_y share a factor of positive y-degree.
BezoutResult bezout_in_y(const BivariatePolynomial& f);

/// Res_y(a, b) via the Sylvester determinant over Q(x).
RationalFunction resultant_y(const BivariatePolynomial& a, const BivariatePolynomial& b);

std::string to_string(const BivariatePolynomial& f);

}  // namespace casorati
