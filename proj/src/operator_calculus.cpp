#include "casorati/operator_calculus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "casorati/errors.hpp"

namespace casorati {

namespace {

Polynomial x_times(const Polynomial& p) { return Polynomial::x() * p; }

// Largest prefix 0..j on which ok(j') holds.
int prefix_while(int N, const std::function<bool(int)>& ok) {
  int r = -1;
  while (r < N && ok(r + 1)) ++r;
  return r;
}

void require_reliable(int reliable, const std::string& what) {
  if (reliable < 0) fail(ErrorCode::TruncationTooSmall, what + ": no input degree survives the truncation");
}

void require_same_truncation(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.truncation() != b.truncation()) fail(ErrorCode::InvalidArgument, "operators truncated at different N");
}

Polynomial polynomial_of(const RationalFunction& r, const char* what) {
  if (!r.is_polynomial()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be a polynomial");
  return r.num() * (BigRational(1) / r.den().leading());
}

}  // namespace

TruncatedOperator::TruncatedOperator(int N, Matrix<BigRational> m, int reliable, std::string label)
    : n_(N), m_(std::move(m)), reliable_(reliable), label_(std::move(label)) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "negative truncation");
  if (m_.rows() != static_cast<size_t>(N + 1) || m_.cols() != static_cast<size_t>(N + 1))
    fail(ErrorCode::InvalidArgument, "operator matrix must be (N+1)x(N+1)");
  require_reliable(reliable_, label_);
}

TruncatedOperator TruncatedOperator::from_images(int N, const std::function<Polynomial(int)>& image,
                                                 std::string label) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "negative truncation");
  Matrix<BigRational> m(N + 1, N + 1);
  int reliable = -1;
  bool broken = false;
  for (int j = 0; j <= N; ++j) {
    const Polynomial img = image(j);
    if (img.degree() > N) broken = true;
    if (!broken) reliable = j;
    for (int i = 0; i <= std::min(N, img.degree()); ++i) m(i, j) = img.coeff(i);
  }
  return TruncatedOperator(N, std::move(m), reliable, std::move(label));
}

Polynomial TruncatedOperator::column(int j) const {
  std::vector<BigRational> c(n_ + 1);
  for (int i = 0; i <= n_; ++i) c[i] = m_(i, j);
  return Polynomial(std::move(c));
}

Polynomial TruncatedOperator::apply(const Polynomial& p) const {
  if (p.degree() > reliable_)
    fail(ErrorCode::TruncationTooSmall, "input degree " + std::to_string(p.degree()) + " exceeds reliable degree " +
                                            std::to_string(reliable_) + " of " + label_);
  Polynomial out;
  for (int j = 0; j <= p.degree(); ++j)
    if (!is_zero(p.coeff(j))) out += column(j) * p.coeff(j);
  return out;
}

TruncatedOperator identity_operator(int N) {
  return TruncatedOperator::from_images(N, [](int j) { return Polynomial::monomial(1, j); }, "I");
}

TruncatedOperator theta_operator(int N) {
  const Polynomial xp1{1, 1};
  return TruncatedOperator::from_images(N, [&](int j) { return xp1.pow(j); }, "theta");
}

TruncatedOperator derivative_operator(int N) {
  return TruncatedOperator::from_images(N, [](int j) { return Polynomial::monomial(1, j).derivative(); }, "D");
}

TruncatedOperator substitution_operator(const Polynomial& mu, int N) {
  return TruncatedOperator::from_images(N, [&](int j) { return mu.pow(j); }, "S[" + to_string(mu) + "]");
}

TruncatedOperator multiplication_operator(const Polynomial& g, int N) {
  return TruncatedOperator::from_images(N, [&](int j) { return g * Polynomial::monomial(1, j); },
                                        "M[" + to_string(g) + "]");
}

TruncatedOperator difference_form_operator(const DifferenceForm& form, int N) {
  std::vector<Polynomial> a;
  for (const auto& c : form.coeffs()) a.push_back(polynomial_of(c, "difference form coefficient"));
  const Polynomial xp1{1, 1};
  return TruncatedOperator::from_images(
      N,
      [&](int j) {
        Polynomial out;
        for (size_t k = 0; k < a.size(); ++k) out += a[k] * xp1.shift(BigRational(static_cast<long>(k) - 1)).pow(j);
        return out;
      },
      "form");
}

TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_truncation(a, b);
  const int N = a.truncation();
  // column j of A o B is exact iff B(x^j) is exact and lands in A's reliable range
  const int reliable = prefix_while(N, [&](int j) {
    return j <= b.reliable_degree() && b.column(j).degree() <= a.reliable_degree();
  });
  return TruncatedOperator(N, a.matrix() * b.matrix(), reliable, "(" + a.label() + ").(" + b.label() + ")");
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_truncation(a, b);
  return TruncatedOperator(a.truncation(), a.matrix() + b.matrix(), std::min(a.reliable_degree(), b.reliable_degree()),
                           a.label() + " + " + b.label());
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_truncation(a, b);
  return TruncatedOperator(a.truncation(), a.matrix() - b.matrix(), std::min(a.reliable_degree(), b.reliable_degree()),
                           a.label() + " - (" + b.label() + ")");
}

TruncatedOperator scaled(const TruncatedOperator& a, const BigRational& c) {
  return TruncatedOperator(a.truncation(), a.matrix().scaled(c), a.reliable_degree(),
                           to_string(c) + "*(" + a.label() + ")");
}

bool equal_on_reliable_block(const TruncatedOperator& a, const TruncatedOperator& b) {
  require_same_truncation(a, b);
  const int r = std::min(a.reliable_degree(), b.reliable_degree());
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= a.truncation(); ++i)
      if (a.matrix()(i, j) != b.matrix()(i, j)) return false;
  return true;
}

bool is_zero_on_reliable_block(const TruncatedOperator& a) {
  for (int j = 0; j <= a.reliable_degree(); ++j)
    for (int i = 0; i <= a.truncation(); ++i)
      if (!is_zero(a.matrix()(i, j))) return false;
  return true;
}

TruncatedOperator functional_derivative(const TruncatedOperator& a) {
  const int N = a.truncation();
  const int reliable = prefix_while(N, [&](int j) {
    return j + 1 <= a.reliable_degree() && a.column(j).degree() + 1 <= N;
  });
  require_reliable(reliable, a.label() + "'");
  Matrix<BigRational> m(N + 1, N + 1);
  for (int j = 0; j < N; ++j) {
    const Polynomial c = a.column(j + 1) - x_times(a.column(j));
    for (int i = 0; i <= std::min(N, c.degree()); ++i) m(i, j) = c.coeff(i);
  }
  return TruncatedOperator(N, std::move(m), reliable, "(" + a.label() + ")'");
}

Polynomial solve_A_prime_equals_A(const TruncatedOperator& a) {
  const TruncatedOperator d = functional_derivative(a);
  if (!equal_on_reliable_block(d, a)) fail(ErrorCode::NotASolution, a.label() + " differs from its derivative");
  const Polynomial eps = a.column(0);
  const Polynomial xp1{1, 1};
  for (int n = 0; n <= a.reliable_degree(); ++n)
    if (a.column(n) != xp1.pow(n) * eps) fail(ErrorCode::NotASolution, "A(x^n) is not (x+1)^n A(1)");
  return eps;
}

bool check_multiplication_identity(const std::function<RationalFunction(const Polynomial&)>& a,
                                   const RationalFunction& alpha, const RationalFunction& xi,
                                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
  const RationalFunction c0 = xi * (alpha * xi - 1);
  const RationalFunction c1 = RationalFunction(1) - alpha * xi;
  for (const auto& [phi, psi] : pairs) {
    const RationalFunction lhs = a(phi * psi), aphi = a(phi), apsi = a(psi);
    const RationalFunction p(phi), q(psi);
    if (!(lhs == c0 * p * q + c1 * (p * apsi + q * aphi) + alpha * aphi * apsi)) return false;
  }
  return true;
}

bool check_multiplication_identity(const TruncatedOperator& a, const RationalFunction& alpha,
                                   const RationalFunction& xi,
                                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
  for (const auto& [phi, psi] : pairs) (void)a.apply(phi * psi);  // raises TruncationTooSmall up front
  return check_multiplication_identity([&](const Polynomial& p) { return RationalFunction(a.apply(p)); }, alpha, xi,
                                       pairs);
}

RationalFunction apply_mult_family(const MultSpec& spec, const Polynomial& phi) {
  const RationalFunction p(phi);
  if (spec.form == MultSpec::Form::DerivationLike)
    return (spec.xi1 - spec.xi * RationalFunction::x()) * RationalFunction(phi.derivative()) + spec.xi * p;
  if (!spec.mu) fail(ErrorCode::InvalidArgument, "substitution-like family needs mu");
  const RationalFunction inv = RationalFunction(1) / spec.alpha;
  return inv * RationalFunction(phi.compose(*spec.mu)) + (spec.xi - inv) * p;
}

MultSpec derivation_like_spec(const RationalFunction& xi, const RationalFunction& xi1) {
  return MultSpec{MultSpec::Form::DerivationLike, RationalFunction(0), xi, xi1, std::nullopt};
}

MultSpec substitution_like_spec(const RationalFunction& alpha, const RationalFunction& xi, const Polynomial& mu) {
  if (alpha.is_zero()) fail(ErrorCode::InvalidArgument, "substitution-like family needs alpha != 0");
  const RationalFunction inv = RationalFunction(1) / alpha;
  // A(x) = (1/alpha) mu + (xi - 1/alpha) x
  const RationalFunction xi1 = inv * RationalFunction(mu) + (xi - inv) * RationalFunction::x();
  return MultSpec{MultSpec::Form::SubstitutionLike, alpha, xi, xi1, mu};
}

TruncatedOperator build_mult_operator(const MultSpec& spec, int N) {
  const Polynomial xi = polynomial_of(spec.xi, "xi");
  if (spec.form == MultSpec::Form::DerivationLike) {
    const Polynomial xi1 = polynomial_of(spec.xi1, "xi1");
    const Polynomial g = xi1 - Polynomial::x() * xi;
    return compose(multiplication_operator(g, N), derivative_operator(N)) + multiplication_operator(xi, N);
  }
  if (!spec.mu) fail(ErrorCode::InvalidArgument, "substitution-like family needs mu");
  const Polynomial inv = polynomial_of(RationalFunction(1) / spec.alpha, "1/alpha");
  return compose(multiplication_operator(inv, N), substitution_operator(*spec.mu, N)) +
         multiplication_operator(xi - inv, N);
}

MultSpec classify_mult_operator(const TruncatedOperator& a) {
  if (a.reliable_degree() < 2)
    fail(ErrorCode::TruncationTooSmall, "classification needs A(1), A(x), A(x^2) exactly");
  const RationalFunction X = RationalFunction::x();
  const Polynomial xi = a.column(0), xi1 = a.column(1), a2 = a.column(2);
  const RationalFunction g = RationalFunction(xi1) - RationalFunction(xi) * X;
  // A(x^2) = -xi x^2 + 2 x xi1 + alpha (xi1 - xi x)^2
  const RationalFunction rest = RationalFunction(a2) + RationalFunction(xi) * X * X - RationalFunction(2) * X * xi1;
  RationalFunction alpha(0);
  if (g.is_zero()) {
    // A = M_xi satisfies the identity for every alpha; take the derivation-like representative
    if (!rest.is_zero()) fail(ErrorCode::NotClassifiable, "A(x^2) inconsistent with A(1), A(x)");
  } else {
    alpha = rest / (g * g);
  }

  MultSpec spec;
  if (alpha.is_zero()) {
    spec = derivation_like_spec(xi, xi1);
  } else {
    // S_mu(phi) = alpha A(phi) + (1 - alpha xi) phi
    const RationalFunction mu = alpha * RationalFunction(xi1) + (RationalFunction(1) - alpha * RationalFunction(xi)) * X;
    if (!mu.is_polynomial()) fail(ErrorCode::NotClassifiable, "substitution argument is not a polynomial");
    spec = MultSpec{MultSpec::Form::SubstitutionLike, alpha, xi, xi1, polynomial_of(mu, "mu")};
  }
  for (int j = 0; j <= a.reliable_degree(); ++j)
    if (!(apply_mult_family(spec, Polynomial::monomial(1, j)) == RationalFunction(a.column(j))))
      fail(ErrorCode::NotClassifiable, "A(x^" + std::to_string(j) + ") does not match the fitted family");
  return spec;
}

TruncatedOperator grevy_determinant(const std::vector<TruncatedOperator>& ops) {
  if (ops.empty()) fail(ErrorCode::InvalidArgument, "no operators");
  const size_t n = ops.size();
  // derivs[i][j] = ops[j] differentiated i times
  std::vector<std::vector<TruncatedOperator>> derivs{ops};
  for (size_t i = 1; i < n; ++i) {
    std::vector<TruncatedOperator> row;
    for (const auto& op : derivs.back()) row.push_back(functional_derivative(op));
    derivs.push_back(std::move(row));
  }
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<TruncatedOperator> total;
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    TruncatedOperator term = derivs[0][perm[0]];
    for (size_t i = 1; i < n; ++i) term = compose(term, derivs[i][perm[i]]);
    if (inversions % 2) term = scaled(term, BigRational(-1));
    total = total ? *total + term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string label = "grevy(";
  for (size_t j = 0; j < n; ++j) label += (j ? ", " : "") + ops[j].label();
  return TruncatedOperator(total->truncation(), total->matrix(), total->reliable_degree(), label + ")");
}

std::vector<NsymbReport> nsymb_solution_check(const std::vector<RationalFunction>& lambdas,
                                              const std::vector<Polynomial>& candidates, int N) {
  if (lambdas.size() < 2) fail(ErrorCode::InvalidArgument, "symbol needs lambda_0..lambda_n with n >= 1");
  const int n = static_cast<int>(lambdas.size()) - 1;
  std::vector<NsymbReport> out;
  for (const auto& a : candidates) {
    const RationalFunction z = RationalFunction(a) - RationalFunction::x();
    RationalFunction f(0);
    for (int k = 0; k <= n; ++k) f += lambdas[k] * z.pow(n - k);
    if (!f.is_zero()) fail(ErrorCode::CandidateNotARoot, to_string(a) + " is not a root of the symbol");

    std::vector<TruncatedOperator> d{substitution_operator(a, N)};
    for (int k = 1; k <= n; ++k) d.push_back(functional_derivative(d.back()));
    int reliable = N;
    for (const auto& op : d) reliable = std::min(reliable, op.reliable_degree());
    bool vanishes = true;
    for (int j = 0; j <= reliable && vanishes; ++j) {
      RationalFunction col(0);
      for (int k = 0; k <= n; ++k) col += lambdas[k] * RationalFunction(d[n - k].column(j));
      vanishes = col.is_zero();
    }
    out.push_back(NsymbReport{a, vanishes, reliable});
  }
  return out;
}

std::string to_string(const TruncatedOperator& a) {
  std::ostringstream os;
  os << a.label() << " on degree <= " << a.truncation() << ", exact through degree " << a.reliable_degree();
  for (int j = 0; j <= a.reliable_degree(); ++j) os << "\n  x^" << j << " -> " << to_string(a.column(j));
  return os.str();
}

}  // namespace casorati
