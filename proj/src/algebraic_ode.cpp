#include "casorati/algebraic_ode.hpp"

#include <algorithm>
#include <cmath>

#include "casorati/errors.hpp"
#include "casorati/format.hpp"
#include "casorati/matrix.hpp"
#include "casorati/roots.hpp"

namespace casorati {
namespace {

BivariatePolynomial reduce(const BivariatePolynomial& p, const BivariatePolynomial& f) {
  return divrem_y(p, f).second;
}

std::vector<RationalFunction> row_of(const BivariatePolynomial& p, const RationalFunction& scale, int m) {
  std::vector<RationalFunction> row(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) row[static_cast<size_t>(j)] = p.coeff(j) / scale;
  return row;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) { return divrem(a * b, gcd(a, b)).first.monic(); }

}  // namespace

DerivativeTable derivative_table(const BivariatePolynomial& f, int K) {
  const int m = f.degree_y();
  if (m < 1) fail(ErrorCode::InvalidArgument, "f must have positive degree in y");
  if (K < m) fail(ErrorCode::InvalidArgument, "table depth must be at least the y-degree");
  const BezoutResult bz = bezout_in_y(f);
  DerivativeTable t;
  t.m = m;
  t.phi = bz.phi;
  const RationalFunction dphi = bz.phi.derivative();
  const BivariatePolynomial p1 = reduce(-(bz.B * f.derivative_x()), f);
  t.numerators.push_back(reduce(BivariatePolynomial::y(), f));
  RationalFunction power(1);
  t.rows.push_back(row_of(t.numerators[0], power, m));
  for (int k = 0; k < K; ++k) {
    const BivariatePolynomial& pk = t.numerators.back();
    // P_{k+1} = phi dP_k/dx + dP_k/dy P_1 - k phi' P_k
    BivariatePolynomial next = BivariatePolynomial(bz.phi) * pk.derivative_x() + pk.derivative_y() * p1 -
                               BivariatePolynomial(dphi * RationalFunction(static_cast<long>(k))) * pk;
    next = reduce(next, f);
    power *= bz.phi;
    t.rows.push_back(row_of(next, power, m));
    t.numerators.push_back(std::move(next));
  }
  return t;
}

LinearODE normalize_ode(std::vector<RationalFunction> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) fail(ErrorCode::ZeroPolynomial, "zero differential equation");
  Polynomial den(1);
  for (const auto& c : coeffs) den = lcm(den, c.den());
  std::vector<Polynomial> polys;
  Polynomial common;
  for (const auto& c : coeffs) {
    polys.push_back(divrem(c.num() * den, c.den()).first);
    common = common.is_zero() ? polys.back().monic() : (polys.back().is_zero() ? common : gcd(common, polys.back()));
  }
  BigInteger num_gcd = 0, den_lcm = 1;
  for (auto& p : polys) {
    p = divrem(p, common).first;
    for (int k = 0; k <= p.degree(); ++k) {
      const BigRational& c = p.coeff(k);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (polys.back().leading() < 0) scale = -scale;
  LinearODE ode;
  for (const auto& p : polys) ode.coeffs.emplace_back(p * scale);
  return ode;
}

LinearODE tannery_ode(const BivariatePolynomial& f) {
  const int m = f.degree_y();
  const DerivativeTable t = derivative_table(f, std::max(m, 1));
  for (int q = 0; q <= m; ++q) {
    Matrix<RationalFunction> a(static_cast<size_t>(m), static_cast<size_t>(q) + 1);
    for (int k = 0; k <= q; ++k)
      for (int j = 0; j < m; ++j) a(static_cast<size_t>(j), static_cast<size_t>(k)) = t.rows[static_cast<size_t>(k)][static_cast<size_t>(j)];
    const auto null = nullspace(a);
    if (!null.empty()) return normalize_ode(null.front());
  }
  fail(ErrorCode::InvalidArgument, "no relation among the first m+1 derivatives");
}

LinearODE differentiate_ode(const LinearODE& ode) {
  std::vector<RationalFunction> c(ode.coeffs.size() + 1);
  for (size_t k = 0; k < ode.coeffs.size(); ++k) {
    c[k] += ode.coeffs[k].derivative();
    c[k + 1] += ode.coeffs[k];
  }
  return normalize_ode(std::move(c));
}

LinearODE raise_to_order(const LinearODE& ode, int target) {
  LinearODE out = ode;
  while (out.order() < target) out = differentiate_ode(out);
  return out;
}

bool check_tannery_shape(const LinearODE& ode, const RationalFunction& phi) {
  if (ode.coeffs.empty()) fail(ErrorCode::ZeroPolynomial, "zero differential equation");
  const int q = ode.order();
  const RationalFunction& lead = ode.coeffs.back();
  for (int j = 1; j <= q; ++j)
    if (!(ode.coeffs[static_cast<size_t>(q - j)] / lead * phi.pow(j)).is_polynomial()) return false;
  return true;
}

double verify_ode_numeric(const BivariatePolynomial& f, const LinearODE& ode,
                          const std::vector<std::complex<double>>& xs) {
  const int m = f.degree_y();
  const DerivativeTable t = derivative_table(f, std::max(m, ode.order()));
  double worst = 0;
  for (const auto x0 : xs) {
    const auto near_zero = [&](const Polynomial& p) {
      return !p.is_zero() && std::abs(p(x0)) < 1e-10 * std::max(1.0, std::pow(std::abs(x0), p.degree()));
    };
    if (near_zero(t.phi.num()) || near_zero(f.leading().num()) || near_zero(f.leading().den()))
      fail(ErrorCode::SampleAtSingularity, "sample too close to a singular point");
    for (const auto& row : t.rows)
      for (const auto& r : row)
        if (near_zero(r.den())) fail(ErrorCode::SampleAtSingularity, "sample at a pole of the derivative table");
    for (const auto& c : ode.coeffs)
      if (near_zero(c.den())) fail(ErrorCode::SampleAtSingularity, "sample at a pole of the equation");
    std::vector<std::complex<double>> fc;
    for (const auto& c : f.coeffs()) fc.push_back(c(x0));
    std::vector<std::complex<double>> cs;
    for (const auto& c : ode.coeffs) cs.push_back(c(x0));
    for (const auto y0 : numeric_roots(fc)) {
      std::complex<double> acc = 0;
      double magnitude = 0;
      for (size_t k = 0; k < cs.size(); ++k) {
        std::complex<double> yk = 0, power = 1;
        for (const auto& entry : t.rows[k]) {
          yk += entry(x0) * power;
          power *= y0;
        }
        acc += cs[k] * yk;
        magnitude += std::abs(cs[k] * yk);
      }
      if (magnitude > 0) worst = std::max(worst, std::abs(acc) / magnitude);
    }
  }
  return worst;
}

std::string to_string(const LinearODE& ode) {
  std::vector<std::pair<RationalFunction, std::string>> terms;
  for (int k = ode.order(); k >= 0; --k) {
    std::string sym = k == 0 ? "y" : k == 1 ? "y'" : k == 2 ? "y''" : "y^(" + std::to_string(k) + ")";
    terms.emplace_back(ode.coeffs[static_cast<size_t>(k)], sym);
  }
  if (terms.empty()) return "0";
  return format_terms(terms);
}

}  // namespace casorati
