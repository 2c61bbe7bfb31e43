#include "casorati/transforms.hpp"

#include <algorithm>

#include "casorati/errors.hpp"
#include "casorati/format.hpp"

namespace casorati {

void DifferentialOperator::add(int lambda, int r, const BigRational& a) {
  if (lambda < 0 || r < 0) fail(ErrorCode::InvalidArgument, "powers of y and derivative orders are nonnegative");
  auto key = std::make_pair(lambda, r);
  BigRational v = coeffs[key] + a;
  if (is_zero(v))
    coeffs.erase(key);
  else
    coeffs[key] = v;
}

void ShiftedDifferenceRelation::add(long shift, const Polynomial& c) {
  Polynomial v = terms[shift] + c;
  if (v.is_zero())
    terms.erase(shift);
  else
    terms[shift] = v;
}

DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
  DifferentialOperator r = a;
  for (const auto& [k, v] : b.coeffs) r.add(k.first, k.second, v);
  return r;
}

DifferentialOperator operator*(const BigRational& s, const DifferentialOperator& a) {
  DifferentialOperator r;
  for (const auto& [k, v] : a.coeffs) r.add(k.first, k.second, s * v);
  return r;
}

ShiftedDifferenceRelation operator+(const ShiftedDifferenceRelation& a, const ShiftedDifferenceRelation& b) {
  ShiftedDifferenceRelation r = a;
  for (const auto& [s, c] : b.terms) r.add(s, c);
  return r;
}

ShiftedDifferenceRelation operator*(const BigRational& s, const ShiftedDifferenceRelation& a) {
  ShiftedDifferenceRelation r;
  for (const auto& [k, c] : a.terms) r.add(k, c * s);
  return r;
}

Polynomial transform_factor(int lambda, int r) {
  Polynomial p(r % 2 == 0 ? 1L : -1L);
  for (int i = 1; i <= r; ++i) p = p * Polynomial({BigRational(lambda - i), BigRational(1)});
  return p;
}

ShiftedDifferenceRelation diff_to_difference(const DifferentialOperator& op) {
  ShiftedDifferenceRelation rel;
  for (const auto& [key, a] : op.coeffs) rel.add(key.first - key.second, transform_factor(key.first, key.second) * a);
  return rel;
}

std::optional<DifferentialOperator> difference_to_diff(const ShiftedDifferenceRelation& rel) {
  DifferentialOperator op;
  for (const auto& [s, c] : rel.terms) {
    // Factors with lambda - r = s have degree r >= max(0, -s), one per degree: triangular solve.
    const int r0 = static_cast<int>(std::max(0L, -s));
    Polynomial rest = c;
    while (!rest.is_zero()) {
      const int r = rest.degree();
      if (r < r0) return std::nullopt;
      const int lambda = static_cast<int>(s) + r;
      const Polynomial basis = transform_factor(lambda, r);
      const BigRational a = rest.leading() / basis.leading();
      op.add(lambda, r, a);
      rest = rest - basis * a;
    }
  }
  return op;
}

ThetaEmbedding as_theta_form(const ShiftedDifferenceRelation& rel) {
  if (rel.terms.empty()) return {};
  const long s_min = rel.terms.begin()->first;
  const long s_max = rel.terms.rbegin()->first;
  const long offset = -s_min;
  std::vector<RationalFunction> coeffs(static_cast<size_t>(s_max - s_min) + 1);
  for (const auto& [s, c] : rel.terms)
    coeffs[static_cast<size_t>(s + offset)] = RationalFunction(c.shift(BigRational(offset)));
  return {DifferenceForm(std::move(coeffs)), offset};
}

BigRational relation_apply(const ShiftedDifferenceRelation& rel, const GridFunction& f, long x) {
  BigRational acc = 0;
  for (const auto& [s, c] : rel.terms) acc += c(BigRational(x)) * f.at(x + s);
  return acc;
}

std::string to_string(const DifferentialOperator& op) {
  std::vector<std::pair<RationalFunction, std::string>> terms;
  for (auto it = op.coeffs.rbegin(); it != op.coeffs.rend(); ++it) {
    const auto [lambda, r] = it->first;
    std::string sym = power_symbol("y", lambda);
    if (!sym.empty()) sym += "*";
    sym += r == 0 ? "phi" : r == 1 ? "phi'" : "phi^(" + std::to_string(r) + ")";
    terms.emplace_back(RationalFunction(it->second), sym);
  }
  if (terms.empty()) return "0";
  return format_terms(terms);
}

std::string to_string(const ShiftedDifferenceRelation& rel) {
  std::vector<std::pair<RationalFunction, std::string>> terms;
  for (auto it = rel.terms.rbegin(); it != rel.terms.rend(); ++it) {
    const long s = it->first;
    const std::string arg = s == 0 ? "x" : s > 0 ? "x+" + std::to_string(s) : "x-" + std::to_string(-s);
    terms.emplace_back(RationalFunction(it->second), "f(" + arg + ")");
  }
  if (terms.empty()) return "0";
  return format_terms(terms);
}

}  // namespace casorati
