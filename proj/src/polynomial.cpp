#include "casorati/polynomial.hpp"

#include <algorithm>

#include "casorati/errors.hpp"

namespace casorati {

BigRational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (text.empty() || q.set_str(text, 10) != 0) fail(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::complex<double> to_complex(const BigRational& q) { return {q.get_d(), 0.0}; }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(const BigRational& constant) {
  if (!casorati::is_zero(constant)) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const BigRational& c, int degree) {
  if (casorati::is_zero(c)) return {};
  std::vector<BigRational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && casorati::is_zero(coeffs_.back())) coeffs_.pop_back();
}

BigRational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

const BigRational& Polynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRational Polynomial::operator()(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> at) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (casorati::is_zero(coeffs_[i])) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& rhs) {
  if (casorati::is_zero(rhs)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shift(const BigRational& k) const {
  if (casorati::is_zero(k) || coeffs_.size() <= 1) return *this;
  // Horner in the shifted variable: p(x+k) = (...(a_n (x+k) + a_{n-1})(x+k) ...).
  const size_t n = coeffs_.size();
  std::vector<BigRational> out(n);
  for (size_t step = n; step-- > 0;) {
    // out <- out * (x + k) + a_step
    for (size_t i = n - 1; i > 0; --i) out[i] = out[i - 1] + out[i] * k;
    out[0] = out[0] * k + coeffs_[step];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  BigRational inv = 1 / leading();
  return *this * inv;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const BigRational inv = 1 / b.leading();
  const auto& bc = b.coeffs();
  const size_t db = static_cast<size_t>(b.degree());
  for (size_t k = quo.size(); k-- > 0;) {
    BigRational q = rem[k + db] * inv;
    if (is_zero(q)) continue;
    quo[k] = q;
    for (size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a.monic();
  Polynomial v = b.monic();
  while (!v.is_zero()) {
    Polynomial r = divrem(u, v).second.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

BigRational primitive_scale(const Polynomial& p) {
  if (p.is_zero()) return 1;
  BigInteger den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInteger num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    BigInteger scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading()) < 0) scale = -scale;
  return scale;
}

Polynomial primitive_part(const Polynomial& p) { return p * primitive_scale(p); }

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<Polynomial> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = divrem(p, a).first;
  Polynomial c = divrem(dp, a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divrem(b, g).first;
    c = divrem(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::string v(1, var);
  for (int d = p.degree(); d >= 0; --d) {
    const BigRational& c = p.coeffs()[static_cast<size_t>(d)];
    if (is_zero(c)) continue;
    std::string term;
    std::string power = d == 1 ? v : v + "^" + std::to_string(d);
    if (d == 0) {
      term = to_string(c);
    } else if (c == 1) {
      term = power;
    } else if (c == -1) {
      term = "-" + power;
    } else {
      term = to_string(c) + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace casorati
