#include "casorati/monodromy.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <numeric>
#include <sstream>

namespace casorati {
namespace {

constexpr double kTwoPi = 2 * M_PI;

double log_abs(const BigRational& q) {
  long en = 0, ed = 0;
  const double n = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double d = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(std::abs(n)) - std::log(d) + static_cast<double>(en - ed) * std::log(2.0);
}

BigRational binomial(int n, int k) {
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(r);
}

template <class Traits, class Mult>
FormalLocal<Traits> theta_terms(const FormalLocal<Traits>& s, Mult multiplier_of) {
  using Coeff = typename Traits::Coeff;
  std::vector<typename FormalLocal<Traits>::Term> out;
  for (const auto& term : s.terms()) {
    const Coeff lambda = multiplier_of(term.rho);
    for (int i = 0; i <= term.log_power; ++i) {
      Coeff c = term.coeff * lambda;
      if constexpr (std::is_same_v<Coeff, BigRational>)
        c *= binomial(term.log_power, i);
      else
        c *= binomial(term.log_power, i).get_d();
      out.push_back({term.rho, i, c});
    }
  }
  return FormalLocal<Traits>(std::move(out));
}

template <class Local, class Step>
Local leibniz_theta_det(const std::vector<Local>& sols, Step step) {
  const size_t n = sols.size();
  if (n == 0) return Local::monomial({}, 0);
  // rows[i][j] = theta^i y_j
  std::vector<std::vector<Local>> rows(n);
  rows[0] = sols;
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rows[i].push_back(step(rows[i - 1][j], j));
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Local acc;
  do {
    int inversions = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Local prod = rows[0][perm[0]];
    for (size_t i = 1; i < n && !prod.is_zero(); ++i) prod = prod * rows[i][perm[i]];
    acc = inversions % 2 == 0 ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

template <class F>
std::vector<F> faddeev_leverrier(const std::vector<std::vector<F>>& a) {
  const size_t n = a.size();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  std::vector<std::vector<F>> mk(n, std::vector<F>(n, F(0)));
  for (size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<F>> next(n, std::vector<F>(n, F(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    F trace(0);
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    if constexpr (std::is_same_v<F, BigRational>)
      c[n - k] = -trace / BigRational(static_cast<long>(k));
    else
      c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

std::vector<std::vector<BigRational>> rows_of(const Matrix<BigRational>& m) {
  std::vector<std::vector<BigRational>> r(m.rows(), std::vector<BigRational>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

Eigen::MatrixXcd to_eigen(const std::vector<std::vector<Complex>>& m) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
  return e;
}

Matrix<BigRational> evaluate_at(const Polynomial& p, const Matrix<BigRational>& m) {
  Matrix<BigRational> acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) acc = acc * m + Matrix<BigRational>::identity(m.rows()).scaled(p.coeff(k));
  return acc;
}

std::vector<int> sizes_from_kernel_dims(const std::vector<long>& dims, int multiplicity) {
  // dims[j-1] = dim ker (M - lambda)^j for j = 1..multiplicity
  std::vector<long> at_least(static_cast<size_t>(multiplicity) + 2, 0);
  long prev = 0;
  for (int j = 1; j <= multiplicity; ++j) {
    at_least[static_cast<size_t>(j)] = dims[static_cast<size_t>(j - 1)] - prev;
    prev = dims[static_cast<size_t>(j - 1)];
  }
  if (prev != multiplicity) fail(ErrorCode::EigenfailNumeric, "Jordan structure inconsistent with multiplicity");
  std::vector<int> sizes;
  for (int j = multiplicity; j >= 1; --j) {
    const long exactly = at_least[static_cast<size_t>(j)] - at_least[static_cast<size_t>(j + 1)];
    if (exactly < 0 || at_least[static_cast<size_t>(j)] < 0)
      fail(ErrorCode::EigenfailNumeric, "Jordan structure inconsistent with multiplicity");
    for (long c = 0; c < exactly; ++c) sizes.push_back(j);
  }
  return sizes;
}

std::vector<int> exact_jordan_sizes(const Matrix<BigRational>& shifted, int multiplicity, long divide_by = 1) {
  std::vector<long> dims;
  Matrix<BigRational> power = shifted;
  for (int j = 1; j <= multiplicity; ++j) {
    const long d = static_cast<long>(shifted.rows() - rank(power));
    if (d % divide_by != 0) fail(ErrorCode::EigenfailNumeric, "kernel dimension not shared by conjugate roots");
    dims.push_back(d / divide_by);
    power = power * shifted;
  }
  return sizes_from_kernel_dims(dims, multiplicity);
}

long numeric_rank(const Eigen::MatrixXcd& a, double tolerance) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  const double threshold = std::sqrt(tolerance) * std::max(1.0, s.size() ? s(0) : 0.0);
  long r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return r;
}

std::vector<int> numeric_jordan_sizes(const Eigen::MatrixXcd& m, Complex lambda, int multiplicity, double tolerance) {
  const Eigen::MatrixXcd shifted = m - lambda * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::MatrixXcd power = shifted;
  std::vector<long> dims;
  for (int j = 1; j <= multiplicity; ++j) {
    dims.push_back(static_cast<long>(m.rows()) - numeric_rank(power, tolerance));
    power = power * shifted;
  }
  return sizes_from_kernel_dims(dims, multiplicity);
}

Polynomial cyclotomic(int n) {
  Polynomial p = Polynomial::monomial(1, static_cast<unsigned>(n)) - Polynomial(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divrem(p, cyclotomic(d)).first;
  return p;
}

int euler_phi(int n) {
  int r = 0;
  for (int a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++r;
  return r;
}

LocalBlock numeric_block(Complex lambda, std::vector<int> sizes) {
  return LocalBlock{lambda, std::nullopt, exponent_of(lambda), std::nullopt, std::move(sizes)};
}

LocalStructure rational_structure(const MonodromySpec& spec) {
  const Matrix<BigRational>& m = *spec.rational;
  const size_t n = m.rows();
  const Eigen::MatrixXcd numeric = to_eigen(spec.values);
  LocalStructure out;
  const auto levels = squarefree_decomposition(characteristic_polynomial(m));
  for (size_t level = 0; level < levels.size(); ++level) {
    Polynomial g = levels[level];
    if (g.degree() <= 0) continue;
    const int mult = static_cast<int>(level) + 1;
    for (const auto& [r, unused] : rational_roots(g)) {
      if (is_zero(r)) fail(ErrorCode::InvalidArgument, "singular monodromy matrix has no local exponent");
      const ExactExponent e = exponent_of(r);
      out.blocks.push_back({to_complex(r), r, e.value(), e,
                            exact_jordan_sizes(m - Matrix<BigRational>::identity(n).scaled(r), mult)});
      g = divrem(g, Polynomial({-r, BigRational(1)})).first;
    }
    for (int order = 3; g.degree() > 0 && order <= 6 * static_cast<int>(n * n) + 6; ++order) {
      const int phi = euler_phi(order);
      if (phi > g.degree()) continue;
      const Polynomial c = cyclotomic(order);
      auto [q, rem] = divrem(g, c);
      if (!rem.is_zero()) continue;
      g = q;
      const auto sizes = exact_jordan_sizes(evaluate_at(c, m), mult, phi);
      for (int a = 1; a < order; ++a) {
        if (std::gcd(a, order) != 1) continue;
        const ExactExponent e{BigRational(1), make_rational(a, order)};
        out.blocks.push_back({std::polar(1.0, kTwoPi * a / order), std::nullopt, e.value(), e, sizes});
      }
    }
    if (g.degree() > 0) {
      if (spec.mode == Mode::Exact)
        fail(ErrorCode::NoExactRoots, "eigenvalues are neither rational nor roots of unity");
      std::vector<Complex> coeffs;
      for (int k = 0; k <= g.degree(); ++k) coeffs.push_back(to_complex(g.coeff(k)));
      for (Complex lambda : numeric_roots(coeffs))
        out.blocks.push_back(numeric_block(lambda, numeric_jordan_sizes(numeric, lambda, mult, spec.tolerance)));
    }
  }
  return out;
}

LocalStructure complex_structure(const MonodromySpec& spec) {
  const Eigen::MatrixXcd m = to_eigen(spec.values);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) fail(ErrorCode::EigenfailNumeric, "eigenvalue iteration did not converge");
  std::vector<Complex> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  double scale = 1;
  for (auto v : ev) scale = std::max(scale, std::abs(v));
  const double radius = std::sqrt(spec.tolerance) * scale;
  // single-linkage clustering
  std::vector<size_t> label(ev.size());
  std::iota(label.begin(), label.end(), 0);
  for (size_t pass = 0; pass < ev.size(); ++pass)
    for (size_t i = 0; i < ev.size(); ++i)
      for (size_t j = 0; j < ev.size(); ++j)
        if (std::abs(ev[i] - ev[j]) <= radius) label[i] = label[j] = std::min(label[i], label[j]);
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = 0; j < ev.size(); ++j) {
      const double d = std::abs(ev[i] - ev[j]);
      if (label[i] != label[j] && d <= 100 * radius)
        fail(ErrorCode::EigenfailNumeric, "eigenvalues too close to separate or merge at this tolerance");
    }
  LocalStructure out;
  for (size_t root = 0; root < ev.size(); ++root) {
    Complex sum = 0;
    int count = 0;
    for (size_t i = 0; i < ev.size(); ++i)
      if (label[i] == root) {
        sum += ev[i];
        ++count;
      }
    if (count == 0) continue;
    const Complex lambda = sum / static_cast<double>(count);
    if (std::abs(lambda) <= radius) fail(ErrorCode::InvalidArgument, "singular monodromy matrix has no local exponent");
    out.blocks.push_back(numeric_block(lambda, numeric_jordan_sizes(m, lambda, count, spec.tolerance)));
  }
  return out;
}

std::vector<BigRational> binomial_polynomial(int k) {
  // C(t, k) = t (t - 1) ... (t - k + 1) / k!
  Polynomial p(1);
  for (int i = 0; i < k; ++i) p = p * Polynomial({BigRational(-i), BigRational(1)});
  BigInteger f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  std::vector<BigRational> out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i) / BigRational(f));
  return out;
}

template <class Local, class Traits>
std::vector<std::pair<typename Traits::Exponent, int>> collect_keys(const std::vector<Local>& a, const std::vector<Local>& b) {
  std::vector<std::pair<typename Traits::Exponent, int>> keys;
  auto add = [&](const Local& s) {
    for (const auto& t : s.terms()) {
      bool found = false;
      for (const auto& k : keys)
        if (k.second == t.log_power && Traits::same(k.first, t.rho)) found = true;
      if (!found) keys.emplace_back(t.rho, t.log_power);
    }
  };
  for (const auto& s : a) add(s);
  for (const auto& s : b) add(s);
  return keys;
}

template <class Traits, class Local, class Key>
typename Traits::Coeff coordinate(const Local& s, const Key& key) {
  for (const auto& t : s.terms())
    if (t.log_power == key.second && Traits::same(t.rho, key.first)) return t.coeff;
  return typename Traits::Coeff(0);
}

}  // namespace

Complex ExactExponent::value() const { return {turn.get_d(), -log_abs(modulus) / kTwoPi}; }

std::optional<BigRational> ExactExponent::multiplier() const {
  const BigRational twice = 2 * turn;
  if (twice.get_den() != 1) return std::nullopt;
  const bool odd = mpz_odd_p(twice.get_num_mpz_t()) != 0;
  return odd ? BigRational(-modulus) : modulus;
}

ExactExponent exponent_of(const BigRational& lambda) {
  if (is_zero(lambda)) fail(ErrorCode::InvalidArgument, "zero multiplier has no exponent");
  if (lambda > 0) return {lambda, BigRational(0)};
  return {BigRational(-lambda), make_rational(1, 2)};
}

Complex exponent_of(Complex lambda) {
  if (lambda == Complex(0.0)) fail(ErrorCode::InvalidArgument, "zero multiplier has no exponent");
  double re = std::arg(lambda) / kTwoPi;
  if (re < 0) re += 1;
  if (re >= 1 - 1e-14 || std::abs(re) < 1e-14) re = 0;
  return {re, -std::log(std::abs(lambda)) / kTwoPi};
}

NumericLocal to_numeric(const ExactLocal& s) {
  std::vector<NumericLocal::Term> out;
  for (const auto& t : s.terms()) out.push_back({t.rho.value(), t.log_power, to_complex(t.coeff)});
  return NumericLocal(std::move(out));
}

double max_abs_coefficient(const NumericLocal& s) {
  double m = 0;
  for (const auto& t : s.terms()) m = std::max(m, std::abs(t.coeff));
  return m;
}

std::string to_string(const ExactLocal& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms()) {
    BigRational c = t.coeff;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (!first || c < 0) c = abs(c);
    first = false;
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(casorati::to_string(c));
    if (!(t.rho == ExactExponent{})) {
      std::string e;
      if (t.rho.modulus != 1) e = "log(" + casorati::to_string(t.rho.modulus) + ")/(2*pi*i)";
      if (t.rho.turn != 0 || e.empty()) {
        if (!e.empty()) e += t.rho.turn < 0 ? "-" : "+";
        e += casorati::to_string(e.empty() ? t.rho.turn : BigRational(abs(t.rho.turn)));
      }
      factors.push_back("x^(" + e + ")");
    }
    if (t.log_power == 1) factors.push_back("t");
    if (t.log_power > 1) factors.push_back("t^" + std::to_string(t.log_power));
    if (factors.empty()) factors.push_back("1");
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::string to_string(const NumericLocal& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& t : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "-" : "+") << std::abs(t.coeff.imag()) << "i)";
    os << "*x^(" << t.rho.real() << (t.rho.imag() < 0 ? "-" : "+") << std::abs(t.rho.imag()) << "i)";
    if (t.log_power == 1) os << "*t";
    if (t.log_power > 1) os << "*t^" << t.log_power;
  }
  return os.str();
}

ExactLocal theta_on_local(const ExactLocal& s, const BigRational& lambda) {
  return theta_terms(s, [&](const ExactExponent& rho) {
    const auto m = rho.multiplier();
    if (!m || *m != lambda)
      fail(ErrorCode::InconsistentMultiplier, "term multiplier differs from " + casorati::to_string(lambda));
    return lambda;
  });
}

NumericLocal theta_on_local(const NumericLocal& s, Complex lambda, double tolerance) {
  return theta_terms(s, [&](const Complex& rho) {
    if (std::abs(NumericTraits::multiplier(rho) - lambda) > tolerance * std::max(1.0, std::abs(lambda)))
      fail(ErrorCode::InconsistentMultiplier, "term multiplier differs from the given lambda");
    return lambda;
  });
}

ExactLocal theta(const ExactLocal& s) { return theta_terms(s, ExactTraits::multiplier); }
NumericLocal theta(const NumericLocal& s) { return theta_terms(s, NumericTraits::multiplier); }

ExactLocal divide_by_monomial(const ExactLocal& u, const ExactLocal& v) {
  if (v.terms().size() != 1 || v.terms()[0].log_power != 0)
    fail(ErrorCode::InvalidArgument, "divisor must be a single term without logarithm");
  const auto& d = v.terms()[0];
  return u * ExactLocal::monomial(-d.rho, 0, 1 / d.coeff);
}

NumericLocal divide_by_monomial(const NumericLocal& u, const NumericLocal& v) {
  if (v.terms().size() != 1 || v.terms()[0].log_power != 0)
    fail(ErrorCode::InvalidArgument, "divisor must be a single term without logarithm");
  const auto& d = v.terms()[0];
  return u * NumericLocal::monomial(-d.rho, 0, 1.0 / d.coeff);
}

ExactLocal theta_determinant(const std::vector<ExactLocal>& sols, const std::vector<BigRational>& lambdas) {
  if (lambdas.size() != sols.size()) fail(ErrorCode::InvalidArgument, "one multiplier per solution required");
  return leibniz_theta_det(sols, [&](const ExactLocal& y, size_t j) { return theta_on_local(y, lambdas[j]); });
}

NumericLocal theta_determinant(const std::vector<NumericLocal>& sols, const std::vector<Complex>& lambdas,
                               double tolerance) {
  if (lambdas.size() != sols.size()) fail(ErrorCode::InvalidArgument, "one multiplier per solution required");
  return leibniz_theta_det(
      sols, [&](const NumericLocal& y, size_t j) { return theta_on_local(y, lambdas[j], tolerance); });
}

ExactLocal theta_determinant(const std::vector<ExactLocal>& sols) {
  return leibniz_theta_det(sols, [](const ExactLocal& y, size_t) { return theta(y); });
}

NumericLocal theta_determinant(const std::vector<NumericLocal>& sols) {
  return leibniz_theta_det(sols, [](const NumericLocal& y, size_t) { return theta(y); });
}

ExactLocal apply_constant_form(const std::vector<BigRational>& coeffs, const ExactLocal& y) {
  ExactLocal acc, power = y;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k) power = theta(power);
    acc = acc + power.scaled(coeffs[k]);
  }
  return acc;
}

NumericLocal apply_constant_form(const std::vector<Complex>& coeffs, const NumericLocal& y) {
  NumericLocal acc, power = y;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k) power = theta(power);
    acc = acc + power.scaled(coeffs[k]);
  }
  return acc;
}

MonodromySpec MonodromySpec::exact(const Matrix<BigRational>& m, Mode mode, double tolerance) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "monodromy matrix must be square");
  MonodromySpec s;
  s.rational = m;
  s.values.assign(m.rows(), std::vector<Complex>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) s.values[i][j] = to_complex(m(i, j));
  s.mode = mode;
  s.tolerance = tolerance;
  return s;
}

MonodromySpec MonodromySpec::numeric(std::vector<std::vector<Complex>> m, double tolerance) {
  for (const auto& row : m)
    if (row.size() != m.size()) fail(ErrorCode::InvalidArgument, "monodromy matrix must be square");
  if (!(tolerance > 0)) fail(ErrorCode::InvalidArgument, "numeric mode needs a positive tolerance");
  MonodromySpec s;
  s.values = std::move(m);
  s.mode = Mode::Numeric;
  s.tolerance = tolerance;
  return s;
}

size_t LocalStructure::dimension() const {
  size_t n = 0;
  for (const auto& b : blocks)
    for (int s : b.jordan_sizes) n += static_cast<size_t>(s);
  return n;
}

Polynomial characteristic_polynomial(const Matrix<BigRational>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "matrix must be square");
  return Polynomial(faddeev_leverrier(rows_of(m)));
}

std::vector<Complex> characteristic_polynomial(const std::vector<std::vector<Complex>>& m) {
  return faddeev_leverrier(m);
}

Polynomial minimal_polynomial(const Matrix<BigRational>& m) {
  const size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::InvalidArgument, "matrix must be square");
  std::vector<Matrix<BigRational>> powers{Matrix<BigRational>::identity(n)};
  for (size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    Matrix<BigRational> krylov(n * n, d + 1);
    for (size_t k = 0; k <= d; ++k)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) krylov(i * n + j, k) = powers[k](i, j);
    for (const auto& v : nullspace(krylov))
      if (!is_zero(v[d])) {
        std::vector<BigRational> c(v.begin(), v.end());
        return Polynomial(std::move(c)).monic();
      }
  }
  return characteristic_polynomial(m);
}

DifferenceForm companion_difference_equation(const Matrix<BigRational>& m) {
  const Polynomial p = characteristic_polynomial(m);
  std::vector<RationalFunction> c;
  for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p.coeff(k));
  return DifferenceForm(std::move(c));
}

std::vector<Complex> companion_coefficients(const MonodromySpec& spec) {
  if (spec.rational) {
    const Polynomial p = characteristic_polynomial(*spec.rational);
    std::vector<Complex> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(to_complex(p.coeff(k)));
    return c;
  }
  return characteristic_polynomial(spec.values);
}

DifferenceForm minimal_relation(const Matrix<BigRational>& m) {
  const Polynomial p = minimal_polynomial(m);
  std::vector<RationalFunction> c;
  for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p.coeff(k));
  return DifferenceForm(std::move(c));
}

std::vector<Complex> minimal_coefficients(const MonodromySpec& spec) {
  if (spec.rational) {
    const Polynomial p = minimal_polynomial(*spec.rational);
    std::vector<Complex> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(to_complex(p.coeff(k)));
    return c;
  }
  std::vector<Complex> c{1.0};
  for (const auto& b : local_structure(spec).blocks) {
    for (int rep = 0; rep < b.jordan_sizes.front(); ++rep) {
      std::vector<Complex> next(c.size() + 1, 0.0);
      for (size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= b.eigenvalue * c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

LocalStructure local_structure(const MonodromySpec& spec) {
  if (spec.dim() == 0) fail(ErrorCode::InvalidArgument, "empty monodromy matrix");
  LocalStructure s = spec.rational ? rational_structure(spec) : complex_structure(spec);
  std::stable_sort(s.blocks.begin(), s.blocks.end(), [](const LocalBlock& a, const LocalBlock& b) {
    return NumericTraits::less(a.exponent, b.exponent);
  });
  return s;
}

std::vector<NumericLocal> canonical_fundamental_system(const MonodromySpec& spec) {
  std::vector<NumericLocal> out;
  for (const auto& b : local_structure(spec).blocks)
    for (size_t q = 0; q < b.jordan_sizes.size(); ++q)
      for (int k = 0; k < b.jordan_sizes[q]; ++k) {
        std::vector<NumericLocal::Term> terms;
        const auto c = binomial_polynomial(k);
        for (size_t i = 0; i < c.size(); ++i)
          terms.push_back({b.exponent + static_cast<double>(q), static_cast<int>(i), to_complex(c[i])});
        out.emplace_back(std::move(terms));
      }
  return out;
}

std::vector<ExactLocal> canonical_fundamental_system_exact(const MonodromySpec& spec) {
  std::vector<ExactLocal> out;
  for (const auto& b : local_structure(spec).blocks) {
    if (!b.exact_exponent) fail(ErrorCode::NoExactRoots, "exponent is not exactly representable");
    for (size_t q = 0; q < b.jordan_sizes.size(); ++q)
      for (int k = 0; k < b.jordan_sizes[q]; ++k) {
        std::vector<ExactLocal::Term> terms;
        const auto c = binomial_polynomial(k);
        const ExactExponent rho = *b.exact_exponent + ExactExponent{BigRational(1), BigRational(static_cast<long>(q))};
        for (size_t i = 0; i < c.size(); ++i) terms.push_back({rho, static_cast<int>(i), c[i]});
        out.emplace_back(std::move(terms));
      }
  }
  return out;
}

Matrix<BigRational> theta_action(const std::vector<ExactLocal>& sols) {
  std::vector<ExactLocal> images;
  for (const auto& s : sols) images.push_back(theta(s));
  const auto keys = collect_keys<ExactLocal, ExactTraits>(sols, images);
  const size_t n = sols.size();
  Matrix<BigRational> aug(keys.size(), 2 * n);
  for (size_t r = 0; r < keys.size(); ++r)
    for (size_t j = 0; j < n; ++j) {
      aug(r, j) = coordinate<ExactTraits>(sols[j], keys[r]);
      aug(r, n + j) = coordinate<ExactTraits>(images[j], keys[r]);
    }
  const auto e = rref(aug);
  for (size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] != r) fail(ErrorCode::InvalidArgument, "theta does not preserve the span of the solutions");
  if (e.pivots.size() != n) fail(ErrorCode::InvalidArgument, "solutions are linearly dependent");
  Matrix<BigRational> a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = e.reduced(i, n + j);
  return a;
}

std::vector<std::vector<Complex>> theta_action(const std::vector<NumericLocal>& sols) {
  std::vector<NumericLocal> images;
  for (const auto& s : sols) images.push_back(theta(s));
  const auto keys = collect_keys<NumericLocal, NumericTraits>(sols, images);
  const auto n = static_cast<Eigen::Index>(sols.size());
  Eigen::MatrixXcd basis(static_cast<Eigen::Index>(keys.size()), n), rhs(static_cast<Eigen::Index>(keys.size()), n);
  for (size_t r = 0; r < keys.size(); ++r)
    for (Eigen::Index j = 0; j < n; ++j) {
      basis(static_cast<Eigen::Index>(r), j) = coordinate<NumericTraits>(sols[static_cast<size_t>(j)], keys[r]);
      rhs(static_cast<Eigen::Index>(r), j) = coordinate<NumericTraits>(images[static_cast<size_t>(j)], keys[r]);
    }
  const Eigen::MatrixXcd a = basis.colPivHouseholderQr().solve(rhs);
  std::vector<std::vector<Complex>> out(sols.size(), std::vector<Complex>(sols.size()));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(i, j);
  return out;
}

}  // namespace casorati
