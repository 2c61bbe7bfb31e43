#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace casorati {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive denominator).
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
BigRational make_rational(long num, long den = 1);
/// Parses "p" or "p/q" (optionally signed).
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);
std::complex<double> to_complex(const BigRational& q);

/// Dense univariate polynomial over Q, coefficients low to high.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);
  Polynomial(const BigRational& constant);  // NOLINT: implicit lift is the point
  Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT

  static Polynomial x() { return monomial(1, 1); }
  static Polynomial monomial(const BigRational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int k) const;
  const BigRational& leading() const;

  BigRational operator()(const BigRational& at) const;
  std::complex<double> operator()(std::complex<double> at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& b) { return a *= b; }
  friend Polynomial operator*(const BigRational& b, Polynomial a) { return a *= b; }
  friend Polynomial operator*(long b, Polynomial a) { return a *= BigRational(b); }
  friend Polynomial operator*(Polynomial a, long b) { return a *= BigRational(b); }
  friend Polynomial operator+(Polynomial a, long b) { return a += Polynomial(b); }
  friend Polynomial operator-(Polynomial a, long b) { return a -= Polynomial(b); }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const;
  /// q(x) = p(x + k).
  Polynomial shift(const BigRational& k) const;
  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const;
  Polynomial pow(unsigned n) const;
  Polynomial monic() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Integer-coefficient primitive associate with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);
/// Multiplier c with primitive_part(p) == c * p.
BigRational primitive_scale(const Polynomial& p);
/// Factors p as product of s_k^k with s_k squarefree, pairwise coprime, monic; entry k-1 holds s_k.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

std::string to_string(const Polynomial& p, char var = 'x');

}  // namespace casorati
