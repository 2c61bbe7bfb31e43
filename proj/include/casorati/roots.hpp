#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "casorati/polynomial.hpp"

namespace casorati {

/// Root of a rational polynomial: exact when rational, always with a double-precision value.
struct CharacteristicRoot {
  std::optional<BigRational> exact;
  std::complex<double> value;
  int multiplicity = 1;
};

/// All roots with multiplicity. Exact mode throws NoExactRoots if any root is irrational;
/// numeric mode returns rational roots exactly and the rest as polished doubles.
std::vector<CharacteristicRoot> characteristic_roots(const Polynomial& p, bool exact_mode);

/// Roots of a squarefree complex polynomial (coefficients low to high), Newton-polished.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs);

/// Rational roots of p with multiplicities, in increasing order.
std::vector<std::pair<BigRational, int>> rational_roots(const Polynomial& p);

}  // namespace casorati
