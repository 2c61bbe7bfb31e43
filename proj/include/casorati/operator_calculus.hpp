#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casorati/difference_form.hpp"
#include "casorati/matrix.hpp"
#include "casorati/polynomial.hpp"
#include "casorati/rational_function.hpp"

namespace casorati {

/// Linear operator on polynomials of degree <= N in the monomial basis; column j holds A(x^j).
/// Columns 0..reliable_degree() are exact; later columns lost terms of degree > N.
class TruncatedOperator {
 public:
  TruncatedOperator(int N, Matrix<BigRational> m, int reliable, std::string label);

  /// Columns image(0..N), reliable up to the first image of degree > N.
  static TruncatedOperator from_images(int N, const std::function<Polynomial(int)>& image, std::string label);

  int truncation() const { return n_; }
  int reliable_degree() const { return reliable_; }
  int degree_growth() const { return n_ - reliable_; }
  const Matrix<BigRational>& matrix() const { return m_; }
  const std::string& label() const { return label_; }

  Polynomial column(int j) const;
  /// Exact image of p; TruncationTooSmall when deg p exceeds the reliable degree.
  Polynomial apply(const Polynomial& p) const;

 private:
  int n_;
  Matrix<BigRational> m_;
  int reliable_;
  std::string label_;
};

TruncatedOperator identity_operator(int N);
TruncatedOperator theta_operator(int N);
TruncatedOperator derivative_operator(int N);
/// phi(x) -> phi(mu(x)).
TruncatedOperator substitution_operator(const Polynomial& mu, int N);
/// phi -> g * phi.
TruncatedOperator multiplication_operator(const Polynomial& g, int N);
/// sum a_k(x) theta^k with polynomial coefficients.
TruncatedOperator difference_form_operator(const DifferenceForm& form, int N);

/// A o B.
TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator scaled(const TruncatedOperator& a, const BigRational& c);

bool equal_on_reliable_block(const TruncatedOperator& a, const TruncatedOperator& b);
bool is_zero_on_reliable_block(const TruncatedOperator& a);

/// A'(phi) = A(x phi) - x A(phi).
TruncatedOperator functional_derivative(const TruncatedOperator& a);

/// For A' = A returns eps = A(1), certified by A(x^n) = (x+1)^n eps; else NotASolution.
Polynomial solve_A_prime_equals_A(const TruncatedOperator& a);

/// A(phi psi) = xi(alpha xi - 1) phi psi + (1 - alpha xi)(phi A(psi) + psi A(phi)) + alpha A(phi) A(psi).
bool check_multiplication_identity(const TruncatedOperator& a, const RationalFunction& alpha,
                                   const RationalFunction& xi,
                                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs);

/// Same identity for an operator given as a map on polynomials with rational-function values.
bool check_multiplication_identity(const std::function<RationalFunction(const Polynomial&)>& a,
                                   const RationalFunction& alpha, const RationalFunction& xi,
                                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs);

struct MultSpec {
  enum class Form { DerivationLike, SubstitutionLike };
  Form form = Form::DerivationLike;
  RationalFunction alpha;
  RationalFunction xi;   // A(1)
  RationalFunction xi1;  // A(x)
  std::optional<Polynomial> mu;
  friend bool operator==(const MultSpec&, const MultSpec&) = default;
};

/// (xi1 - xi x) D + M_xi for alpha = 0, (1/alpha) S_mu + M_(xi - 1/alpha) otherwise.
/// Needs polynomial xi, xi1, mu and 1/alpha.
TruncatedOperator build_mult_operator(const MultSpec& spec, int N);
/// The canonical form applied to phi; rational parameters allowed.
RationalFunction apply_mult_family(const MultSpec& spec, const Polynomial& phi);
MultSpec derivation_like_spec(const RationalFunction& xi, const RationalFunction& xi1);
MultSpec substitution_like_spec(const RationalFunction& alpha, const RationalFunction& xi, const Polynomial& mu);
/// Throws NotClassifiable when no (alpha, xi) fits.
MultSpec classify_mult_operator(const TruncatedOperator& a);

/// sum over permutations of sign * E(0, s0) o E(1, s1) o ... with E(i, j) = ops[j] differentiated i times.
TruncatedOperator grevy_determinant(const std::vector<TruncatedOperator>& ops);

struct NsymbReport {
  Polynomial candidate;
  bool operator_vanishes = false;
  int reliable_degree = -1;
};

/// Checks f(a) = sum lambda_k (a - x)^(n-k) = 0 (CandidateNotARoot otherwise) and that
/// sum lambda_k S_a^(n-k) vanishes on the reliable block.
std::vector<NsymbReport> nsymb_solution_check(const std::vector<RationalFunction>& lambdas,
                                              const std::vector<Polynomial>& candidates, int N);

std::string to_string(const TruncatedOperator& a);

}  // namespace casorati
