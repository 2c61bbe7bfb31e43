#pragma once

#include <complex>
#include <string>
#include <vector>

#include "casorati/bivariate.hpp"

namespace casorati {

/// y^(k) reduced modulo f(x, y) = 0, over the basis y^0..y^(m-1).
struct DerivativeTable {
  int m = 0;
  RationalFunction phi;
  std::vector<BivariatePolynomial> numerators;          // P_k with y^(k) = P_k / phi^k
  std::vector<std::vector<RationalFunction>> rows;      // coefficients of P_k / phi^k
};

/// Rows 0..K; requires deg_y f = m >= 1 and K >= m. Throws NotSquarefree.
DerivativeTable derivative_table(const BivariatePolynomial& f, int K);

/// sum c_k y^(k) = 0.
struct LinearODE {
  std::vector<RationalFunction> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const LinearODE&, const LinearODE&) = default;
};

/// Polynomial coefficients, jointly primitive over Z, no common polynomial factor,
/// positive leading coefficient of c_q.
LinearODE normalize_ode(std::vector<RationalFunction> coeffs);

/// Minimal-order linear homogeneous ODE satisfied by every root of f(x, y) = 0.
LinearODE tannery_ode(const BivariatePolynomial& f);
/// d/dx of the equation, one order higher.
LinearODE differentiate_ode(const LinearODE& ode);
/// Differentiates until the order reaches target (normalized).
LinearODE raise_to_order(const LinearODE& ode, int target);

/// True iff c_(q-j) / c_q * phi^j is a polynomial for j = 1..q.
bool check_tannery_shape(const LinearODE& ode, const RationalFunction& phi);

/// Max over samples and roots y0 of f(x0, y0) = 0 of |sum c_k y^(k)| / sum |c_k y^(k)|, everything
/// evaluated at x0. Throws SampleAtSingularity.
double verify_ode_numeric(const BivariatePolynomial& f, const LinearODE& ode,
                          const std::vector<std::complex<double>>& xs);

std::string to_string(const LinearODE& ode);

}  // namespace casorati
