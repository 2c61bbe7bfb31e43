#include "casorati/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "casorati/errors.hpp"

namespace casorati {
namespace {

using cld = std::complex<long double>;

std::vector<std::complex<double>> to_complex_coeffs(const Polynomial& p) {
  std::vector<std::complex<double>> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  return c;
}

std::vector<BigInteger> positive_divisors(BigInteger n) {
  n = abs(n);
  std::vector<BigInteger> small, large;
  for (BigInteger d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs_in) {
  std::vector<std::complex<double>> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  std::vector<std::complex<double>> roots;
  // Peel zero roots exactly.
  size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == 0.0) ++zeros;
  for (size_t i = 0; i < zeros; ++i) roots.emplace_back(0.0, 0.0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
  const long n = static_cast<long>(coeffs.size()) - 1;
  if (n <= 0) return roots;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (long i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  for (long i = 0; i < n; ++i) {
    cld z(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
    for (int iter = 0; iter < 8; ++iter) {
      cld val = 0, der = 0;
      for (size_t k = coeffs.size(); k-- > 0;) {
        der = der * z + val;
        val = val * z + cld(coeffs[k].real(), coeffs[k].imag());
      }
      if (std::abs(der) == 0.0L) break;
      cld step = val / der;
      z -= step;
      if (std::abs(step) <= 1e-19L * (1.0L + std::abs(z))) break;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return roots;
}

std::vector<std::pair<BigRational, int>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<std::pair<BigRational, int>> out;
  const auto parts = squarefree_decomposition(p);
  for (size_t k = 0; k < parts.size(); ++k) {
    Polynomial s = primitive_part(parts[k]);
    if (s.degree() <= 0) continue;
    if (is_zero(s.coeff(0))) {
      out.emplace_back(BigRational(0), static_cast<int>(k) + 1);
      s = divrem(s, Polynomial::x()).first;
      if (s.degree() <= 0) continue;
    }
    // Numerically guided rational root theorem: a rational root p/q has q | lead.
    const auto approx = numeric_roots(to_complex_coeffs(s));
    const auto denominators = positive_divisors(s.leading().get_num());
    std::vector<BigRational> found;
    for (const auto& z : approx) {
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
      for (const auto& q : denominators) {
        BigInteger num;
        mpz_set_d(num.get_mpz_t(), std::nearbyint(z.real() * q.get_d()));
        BigRational cand(num, q);
        cand.canonicalize();
        if (std::abs(cand.get_d() - z.real()) > 1e-6 * (1.0 + std::abs(z))) continue;
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        if (is_zero(s(cand))) {
          found.push_back(cand);
          break;
        }
      }
    }
    for (const auto& r : found) out.emplace_back(r, static_cast<int>(k) + 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<CharacteristicRoot> characteristic_roots(const Polynomial& p, bool exact_mode) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<CharacteristicRoot> out;
  Polynomial rest = p.monic();
  for (const auto& [r, mult] : rational_roots(p)) {
    out.push_back({r, to_complex(r), mult});
    rest = divrem(rest, (Polynomial::x() - Polynomial(r)).pow(static_cast<unsigned>(mult))).first;
  }
  if (rest.degree() <= 0) return out;
  if (exact_mode) fail(ErrorCode::NoExactRoots, "irrational roots remain: " + to_string(rest));
  const auto parts = squarefree_decomposition(rest);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    for (const auto& z : numeric_roots(to_complex_coeffs(parts[k])))
      out.push_back({std::nullopt, z, static_cast<int>(k) + 1});
  }
  return out;
}

}  // namespace casorati
