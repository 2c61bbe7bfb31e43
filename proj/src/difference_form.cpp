#include "casorati/difference_form.hpp"

#include "casorati/errors.hpp"
#include "casorati/format.hpp"

namespace casorati {

GridFunction::GridFunction(long base, std::vector<BigRational> values) : base_(base), values_(std::move(values)) {
  if (values_.empty()) fail(ErrorCode::InvalidArgument, "grid function needs at least one sample");
}

const BigRational& GridFunction::at(long t) const {
  if (!covers(t))
    fail(ErrorCode::OutOfWindow, "sample at t = " + std::to_string(t) + " outside [" + std::to_string(base_) + ", " +
                                     std::to_string(last()) + "]");
  return values_[static_cast<size_t>(t - base_)];
}

DifferenceForm::DifferenceForm(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DifferenceForm::DifferenceForm(const RationalFunction& a0) {
  if (!a0.is_zero()) coeffs_.push_back(a0);
}

DifferenceForm DifferenceForm::theta(int power) {
  std::vector<RationalFunction> c(static_cast<size_t>(power) + 1);
  c.back() = RationalFunction(1);
  return DifferenceForm(std::move(c));
}

void DifferenceForm::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction DifferenceForm::coeff(int k) const {
  if (k < 0 || k > order()) return {};
  return coeffs_[static_cast<size_t>(k)];
}

bool DifferenceForm::has_constant_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_constant()) return false;
  return true;
}

DifferenceForm& DifferenceForm::operator+=(const DifferenceForm& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

DifferenceForm& DifferenceForm::operator-=(const DifferenceForm& rhs) { return *this += -rhs; }

DifferenceForm DifferenceForm::operator-() const {
  DifferenceForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DifferenceForm operator*(const DifferenceForm& a, const DifferenceForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t h = 0; h < a.coeffs_.size(); ++h) {
    if (a.coeffs_[h].is_zero()) continue;
    const BigRational shift(static_cast<long>(h));
    for (size_t k = 0; k < b.coeffs_.size(); ++k) {
      if (b.coeffs_[k].is_zero()) continue;
      out[h + k] += a.coeffs_[h] * b.coeffs_[k].shift(shift);
    }
  }
  return DifferenceForm(std::move(out));
}

DifferenceForm form_mul(const DifferenceForm& a, const DifferenceForm& b) { return a * b; }

BigRational form_apply(const DifferenceForm& form, const GridFunction& f, long t) {
  BigRational acc = 0;
  for (int k = 0; k <= form.order(); ++k) {
    const RationalFunction& c = form.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    acc += c(BigRational(t)) * f.at(t + k);
  }
  return acc;
}

GridFunction form_apply_all(const DifferenceForm& form, const GridFunction& f) {
  const long last = f.last() - std::max(form.order(), 0);
  if (last < f.base()) fail(ErrorCode::OutOfWindow, "grid function shorter than the form order");
  return GridFunction::tabulate(f.base(), last, [&](long t) { return form_apply(form, f, t); });
}

FormDivision form_divrem(const DifferenceForm& a, const DifferenceForm& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroDivisor, "division by the zero form");
  const int m = a.order();
  const int n = b.order();
  if (m < n) return {DifferenceForm(), a};
  // Row r of the quotient system fixes gamma_{m-n-r}:
  //   alpha_{m-r} = sum_{j=0..r} gamma_{m-n-j}(x) beta_{n-r+j}(x+m-n-j).
  std::vector<RationalFunction> gamma(static_cast<size_t>(m - n) + 1);
  for (int r = 0; r <= m - n; ++r) {
    RationalFunction rhs = a.coeff(m - r);
    for (int j = 0; j < r; ++j) {
      const int i = m - n - j;
      const RationalFunction& g = gamma[static_cast<size_t>(i)];
      if (g.is_zero()) continue;
      rhs -= g * b.coeff(n - r + j).shift(BigRational(i));
    }
    const int i = m - n - r;
    gamma[static_cast<size_t>(i)] = rhs / b.coeff(n).shift(BigRational(i));
  }
  DifferenceForm quotient(std::move(gamma));
  DifferenceForm remainder = a - quotient * b;
  if (remainder.order() >= n) fail(ErrorCode::InvalidArgument, "internal: remainder order not reduced");
  return {std::move(quotient), std::move(remainder)};
}

RuffiniDivision ruffini_divide(const DifferenceForm& a, const RationalFunction& gamma) {
  const int m = a.order();
  if (m <= 0) return {DifferenceForm(), a.coeff(0)};
  // beta_{m-1} = alpha_m, beta_{i-1} = alpha_i + beta_i(x) gamma(x+i), remainder = alpha_0 + beta_0 gamma.
  std::vector<RationalFunction> beta(static_cast<size_t>(m));
  beta[static_cast<size_t>(m - 1)] = a.coeff(m);
  for (int i = m - 1; i >= 1; --i)
    beta[static_cast<size_t>(i - 1)] = a.coeff(i) + beta[static_cast<size_t>(i)] * gamma.shift(BigRational(i));
  RationalFunction remainder = a.coeff(0) + beta[0] * gamma;
  return {DifferenceForm(std::move(beta)), std::move(remainder)};
}

bool form_divides(const DifferenceForm& b, const DifferenceForm& a) { return form_divrem(a, b).remainder.is_zero(); }

bool is_root(const DifferenceForm& form, const GridFunction& omega, long first, long last) {
  for (long t = first; t <= last; ++t)
    if (!is_zero(form_apply(form, omega, t))) return false;
  return true;
}

std::vector<BasisSolution> const_coeff_basis(const Polynomial& charpoly, bool exact_mode) {
  if (charpoly.degree() < 1) fail(ErrorCode::InvalidArgument, "characteristic polynomial must have degree >= 1");
  std::vector<BasisSolution> out;
  for (const auto& root : characteristic_roots(charpoly, exact_mode))
    for (int j = 0; j < root.multiplicity; ++j) out.push_back({root, j});
  return out;
}

BigRational basis_value(const BasisSolution& s, long t) {
  if (!s.root.exact) fail(ErrorCode::NoExactRoots, "basis element has an irrational root");
  const BigRational& r = *s.root.exact;
  if (is_zero(r)) {
    if (t < 0) fail(ErrorCode::OutOfWindow, "impulse solutions are defined for t >= 0");
    return t == s.log_power ? 1 : 0;
  }
  BigRational power = 1;
  const BigRational base = t >= 0 ? r : BigRational(1 / r);
  for (long i = 0; i < std::abs(t); ++i) power *= base;
  BigRational tj = 1;
  for (int i = 0; i < s.log_power; ++i) tj *= t;
  return tj * power;
}

std::complex<double> basis_value_numeric(const BasisSolution& s, long t) {
  if (std::abs(s.root.value) == 0.0) return t == s.log_power ? 1.0 : 0.0;
  return std::pow(static_cast<double>(t), s.log_power) * std::pow(s.root.value, static_cast<double>(t));
}

namespace {

template <class T>
std::vector<T> series_inverse(const std::vector<T>& g, size_t terms) {
  std::vector<T> h(terms);
  for (size_t i = 0; i < terms; ++i) {
    T acc = i == 0 ? T(1) : T(0);
    for (size_t j = 1; j <= i && j < g.size(); ++j) acc -= g[j] * h[i - j];
    h[i] = acc / g[0];
  }
  return h;
}

}  // namespace

std::vector<PartialFractionTerm> cauchy_partial_fractions(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "partial fractions of 1/0");
  std::vector<PartialFractionTerm> out;
  for (const auto& root : characteristic_roots(f, true)) {
    const int m = root.multiplicity;
    // g(eps) = F(rho + eps) / eps^m; R_{m-k} = [eps^{m-k}] 1/g.
    const Polynomial shifted = f.shift(*root.exact);
    std::vector<BigRational> g(shifted.coeffs().begin() + m, shifted.coeffs().end());
    const auto h = series_inverse(g, static_cast<size_t>(m));
    PartialFractionTerm term{*root.exact, m, {}};
    for (int k = 1; k <= m; ++k) term.coeffs.push_back(h[static_cast<size_t>(m - k)]);
    out.push_back(std::move(term));
  }
  return out;
}

BigRational partial_fraction_value(const std::vector<PartialFractionTerm>& terms, const BigRational& z) {
  BigRational acc = 0;
  for (const auto& term : terms) {
    const BigRational d = z - term.root;
    if (is_zero(d)) fail(ErrorCode::PoleAtPoint, "sample coincides with a root");
    BigRational inv = 1 / d, p = inv;
    for (const auto& c : term.coeffs) {
      acc += c * p;
      p *= inv;
    }
  }
  return acc;
}

std::vector<NumericPartialFractionTerm> cauchy_partial_fractions_numeric(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "partial fractions of 1/0");
  std::vector<NumericPartialFractionTerm> out;
  for (const auto& root : characteristic_roots(f, false)) {
    const int m = root.multiplicity;
    // Taylor coefficients of F at rho by repeated synthetic division.
    std::vector<std::complex<double>> c;
    for (const auto& q : f.coeffs()) c.emplace_back(q.get_d(), 0.0);
    std::vector<std::complex<double>> taylor;
    for (size_t k = 0; k < c.size(); ++k) {
      std::complex<double> acc = 0.0;
      for (size_t i = c.size(); i-- > k;) {
        acc = acc * root.value + c[i];
        c[i] = acc;
      }
      taylor.push_back(c[k]);
    }
    std::vector<std::complex<double>> g(taylor.begin() + m, taylor.end());
    const auto h = series_inverse(g, static_cast<size_t>(m));
    NumericPartialFractionTerm term{root.value, m, {}};
    for (int k = 1; k <= m; ++k) term.coeffs.push_back(h[static_cast<size_t>(m - k)]);
    out.push_back(std::move(term));
  }
  return out;
}

std::string to_string(const DifferenceForm& form) {
  std::vector<std::pair<RationalFunction, std::string>> terms;
  for (int k = form.order(); k >= 0; --k) terms.emplace_back(form.coeff(k), power_symbol("T", k));
  return format_terms(terms);
}

}  // namespace casorati
