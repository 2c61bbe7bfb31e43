#include "casorati/bivariate.hpp"

#include "casorati/errors.hpp"
#include "casorati/format.hpp"
#include "casorati/matrix.hpp"

namespace casorati {

BivariatePolynomial::BivariatePolynomial(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BivariatePolynomial::BivariatePolynomial(const RationalFunction& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

void BivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction BivariatePolynomial::coeff(int j) const {
  if (j < 0 || j > degree_y()) return {};
  return coeffs_[static_cast<size_t>(j)];
}

const RationalFunction& BivariatePolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) { return *this += -rhs; }

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RationalFunction> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  std::vector<RationalFunction> out;
  for (size_t j = 1; j < coeffs_.size(); ++j) out.push_back(coeffs_[j] * RationalFunction(static_cast<long>(j)));
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  std::vector<RationalFunction> out;
  for (const auto& c : coeffs_) out.push_back(c.derivative());
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::pow(unsigned n) const {
  BivariatePolynomial r(RationalFunction(1));
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

std::complex<double> BivariatePolynomial::operator()(std::complex<double> x0, std::complex<double> y0) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y0 + (*it)(x0);
  return acc;
}

std::pair<BivariatePolynomial, BivariatePolynomial> divrem_y(const BivariatePolynomial& a,
                                                              const BivariatePolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero polynomial in y");
  if (a.degree_y() < b.degree_y()) return {BivariatePolynomial(), a};
  std::vector<RationalFunction> rem = a.coeffs();
  std::vector<RationalFunction> quo(static_cast<size_t>(a.degree_y() - b.degree_y()) + 1);
  const RationalFunction inv = RationalFunction(1) / b.leading();
  const size_t db = static_cast<size_t>(b.degree_y());
  for (size_t k = quo.size(); k-- > 0;) {
    RationalFunction q = rem[k + db] * inv;
    if (q.is_zero()) continue;
    for (size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {BivariatePolynomial(std::move(quo)), BivariatePolynomial(std::move(rem))};
}

RationalFunction resultant_y(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const int m = a.degree_y();
  const int n = b.degree_y();
  if (m < 0 || n < 0) return RationalFunction(0);
  if (m == 0) return a.leading().pow(n);
  if (n == 0) return b.leading().pow(m);
  const size_t size = static_cast<size_t>(m + n);
  Matrix<RationalFunction> s(size, size);
  // Rows hold coefficients from highest power down.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s(static_cast<size_t>(r), static_cast<size_t>(r + j)) = a.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s(static_cast<size_t>(n + r), static_cast<size_t>(r + j)) = b.coeff(n - j);
  return determinant(std::move(s));
}

BezoutResult bezout_in_y(const BivariatePolynomial& f) {
  if (f.is_zero() || f.degree_y() < 1) fail(ErrorCode::InvalidArgument, "bezout_in_y needs positive y-degree");
  const BivariatePolynomial fy = f.derivative_y();
  // Extended Euclid over Q(x)[y]: s*f + t*fy = r at every step.
  BivariatePolynomial r0 = f, r1 = fy;
  BivariatePolynomial s0(RationalFunction(1)), s1;
  BivariatePolynomial t0, t1(RationalFunction(1));
  while (r1.degree_y() > 0) {
    auto [q, r] = divrem_y(r0, r1);
    BivariatePolynomial s2 = s0 - q * s1;
    BivariatePolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.is_zero()) fail(ErrorCode::NotSquarefree, "f and df/dy share a factor of positive y-degree");
  const RationalFunction g = r1.leading();
  // The last Euclidean remainder divides Res_y(f, f_y) but drops the spurious
  // leading-coefficient factor the resultant carries.
  const RationalFunction phi(primitive_part(g.num()));
  const BivariatePolynomial scale(phi / g);
  return {s1 * scale, t1 * scale, phi};
}

std::string to_string(const BivariatePolynomial& f) {
  std::vector<std::pair<RationalFunction, std::string>> terms;
  for (int j = f.degree_y(); j >= 0; --j) terms.emplace_back(f.coeff(j), power_symbol("y", j));
  return format_terms(terms);
}

}  // namespace casorati
