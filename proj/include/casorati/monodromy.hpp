#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "casorati/difference_form.hpp"
#include "casorati/errors.hpp"
#include "casorati/matrix.hpp"
#include "casorati/polynomial.hpp"

namespace casorati {

using Complex = std::complex<double>;

/// Exact local exponent rho = L(modulus) + turn with L(r) = -i ln(r) / (2 pi) for r > 0.
/// One positive tour multiplies x^rho by modulus * exp(2 pi i turn).
struct ExactExponent {
  BigRational modulus{1};
  BigRational turn{0};

  Complex value() const;
  /// The tour multiplier when it is rational (2 * turn an integer).
  std::optional<BigRational> multiplier() const;

  friend ExactExponent operator+(const ExactExponent& a, const ExactExponent& b) {
    return {a.modulus * b.modulus, a.turn + b.turn};
  }
  friend ExactExponent operator-(const ExactExponent& a) { return {1 / a.modulus, -a.turn}; }
  friend bool operator==(const ExactExponent& a, const ExactExponent& b) {
    return a.modulus == b.modulus && a.turn == b.turn;
  }
  friend bool operator<(const ExactExponent& a, const ExactExponent& b) {
    return a.turn != b.turn ? a.turn < b.turn : a.modulus < b.modulus;
  }
};

/// Exponent whose multiplier is the rational lambda (nonzero), on the branch 0 <= Re rho < 1.
ExactExponent exponent_of(const BigRational& lambda);
/// log(lambda) / (2 pi i) with 0 <= Re rho < 1.
Complex exponent_of(Complex lambda);

struct ExactTraits {
  using Coeff = BigRational;
  using Exponent = ExactExponent;
  static bool zero(const Coeff& c) { return casorati::is_zero(c); }
  static bool same(const Exponent& a, const Exponent& b) { return a == b; }
  static bool less(const Exponent& a, const Exponent& b) { return a < b; }
  static Coeff multiplier(const Exponent& e) {
    auto m = e.multiplier();
    if (!m) fail(ErrorCode::InconsistentMultiplier, "tour multiplier is not rational");
    return *m;
  }
};

struct NumericTraits {
  using Coeff = Complex;
  using Exponent = Complex;
  static constexpr double kExponentTolerance = 1e-9;
  static bool zero(const Coeff& c) { return c == Complex(0.0); }
  static bool same(const Exponent& a, const Exponent& b) { return std::abs(a - b) <= kExponentTolerance; }
  static bool less(const Exponent& a, const Exponent& b) {
    if (std::abs(a.real() - b.real()) > kExponentTolerance) return a.real() < b.real();
    if (std::abs(a.imag() - b.imag()) > kExponentTolerance) return a.imag() < b.imag();
    return false;
  }
  static Coeff multiplier(const Exponent& e) { return std::exp(Complex(0, 2 * M_PI) * e); }
};

/// Finite sum of c * x^rho * t^k, where t = log(x - x1) / (2 pi i) gains 1 per positive tour.
template <class Traits>
class FormalLocal {
 public:
  using Coeff = typename Traits::Coeff;
  using Exponent = typename Traits::Exponent;
  struct Term {
    Exponent rho;
    int log_power = 0;
    Coeff coeff;
  };

  FormalLocal() = default;
  explicit FormalLocal(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }
  static FormalLocal monomial(const Exponent& rho, int log_power = 0, const Coeff& c = Coeff(1)) {
    return FormalLocal({Term{rho, log_power, c}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_log_power() const {
    int k = -1;
    for (const auto& t : terms_) k = std::max(k, t.log_power);
    return k;
  }

  FormalLocal scaled(const Coeff& c) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return FormalLocal(std::move(out));
  }
  friend FormalLocal operator+(const FormalLocal& a, const FormalLocal& b) {
    std::vector<Term> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return FormalLocal(std::move(out));
  }
  friend FormalLocal operator-(const FormalLocal& a, const FormalLocal& b) { return a + b.scaled(Coeff(-1)); }
  friend bool operator==(const FormalLocal& a, const FormalLocal& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      const Term &s = a.terms_[i], &t = b.terms_[i];
      if (s.log_power != t.log_power || !Traits::same(s.rho, t.rho) || s.coeff != t.coeff) return false;
    }
    return true;
  }
  friend FormalLocal operator*(const FormalLocal& a, const FormalLocal& b) {
    std::vector<Term> out;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back(Term{s.rho + t.rho, s.log_power + t.log_power, Coeff(s.coeff * t.coeff)});
    return FormalLocal(std::move(out));
  }

 private:
  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      if (Traits::less(a.rho, b.rho)) return true;
      if (Traits::less(b.rho, a.rho)) return false;
      return a.log_power < b.log_power;
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().log_power == t.log_power && Traits::same(merged.back().rho, t.rho))
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : merged)
      if (!Traits::zero(t.coeff)) terms_.push_back(std::move(t));
  }

  std::vector<Term> terms_;
};

using ExactLocal = FormalLocal<ExactTraits>;
using NumericLocal = FormalLocal<NumericTraits>;

NumericLocal to_numeric(const ExactLocal& s);
double max_abs_coefficient(const NumericLocal& s);
std::string to_string(const ExactLocal& s);
std::string to_string(const NumericLocal& s);

/// theta(x^rho t^k) = lambda x^rho (t + 1)^k; every term must carry the multiplier lambda.
ExactLocal theta_on_local(const ExactLocal& s, const BigRational& lambda);
NumericLocal theta_on_local(const NumericLocal& s, Complex lambda, double tolerance = 1e-10);
/// Termwise theta with each term's own multiplier.
ExactLocal theta(const ExactLocal& s);
NumericLocal theta(const NumericLocal& s);
/// u / v for a single term v without logarithm.
ExactLocal divide_by_monomial(const ExactLocal& u, const ExactLocal& v);
NumericLocal divide_by_monomial(const NumericLocal& u, const NumericLocal& v);

/// det[theta^i y_j] expanded in the formal ring.
ExactLocal theta_determinant(const std::vector<ExactLocal>& sols, const std::vector<BigRational>& lambdas);
NumericLocal theta_determinant(const std::vector<NumericLocal>& sols, const std::vector<Complex>& lambdas,
                               double tolerance = 1e-10);
ExactLocal theta_determinant(const std::vector<ExactLocal>& sols);
NumericLocal theta_determinant(const std::vector<NumericLocal>& sols);

/// sum_k c_k theta^k y.
ExactLocal apply_constant_form(const std::vector<BigRational>& coeffs, const ExactLocal& y);
NumericLocal apply_constant_form(const std::vector<Complex>& coeffs, const NumericLocal& y);

enum class Mode { Exact, Numeric };

struct MonodromySpec {
  std::optional<Matrix<BigRational>> rational;
  std::vector<std::vector<Complex>> values;
  Mode mode = Mode::Exact;
  double tolerance = 1e-10;

  static MonodromySpec exact(const Matrix<BigRational>& m, Mode mode = Mode::Exact, double tolerance = 1e-10);
  static MonodromySpec numeric(std::vector<std::vector<Complex>> m, double tolerance = 1e-10);
  size_t dim() const { return values.size(); }
};

struct LocalBlock {
  Complex eigenvalue;
  std::optional<BigRational> exact_eigenvalue;
  Complex exponent;
  std::optional<ExactExponent> exact_exponent;
  std::vector<int> jordan_sizes;  // descending
};

struct LocalStructure {
  std::vector<LocalBlock> blocks;
  size_t dimension() const;
};

/// det(lambda I - M), low to high.
Polynomial characteristic_polynomial(const Matrix<BigRational>& m);
std::vector<Complex> characteristic_polynomial(const std::vector<std::vector<Complex>>& m);
Polynomial minimal_polynomial(const Matrix<BigRational>& m);

/// Constant-coefficient form whose coefficients are those of the characteristic polynomial.
DifferenceForm companion_difference_equation(const Matrix<BigRational>& m);
std::vector<Complex> companion_coefficients(const MonodromySpec& spec);
DifferenceForm minimal_relation(const Matrix<BigRational>& m);
std::vector<Complex> minimal_coefficients(const MonodromySpec& spec);

LocalStructure local_structure(const MonodromySpec& spec);
/// Solutions x^(rho+q) C(t, k), k below the block size, q counting repeated blocks of one eigenvalue.
std::vector<NumericLocal> canonical_fundamental_system(const MonodromySpec& spec);
std::vector<ExactLocal> canonical_fundamental_system_exact(const MonodromySpec& spec);
/// Column j holds the coordinates of theta(y_j) in the basis sols.
Matrix<BigRational> theta_action(const std::vector<ExactLocal>& sols);
std::vector<std::vector<Complex>> theta_action(const std::vector<NumericLocal>& sols);

}  // namespace casorati
