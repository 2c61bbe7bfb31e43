#include "casorati/format.hpp"

namespace casorati {
namespace {

bool is_monomial(const RationalFunction& c) {
  if (!c.is_polynomial()) return false;
  int terms = 0;
  for (const auto& q : c.num().coeffs()) terms += is_zero(q) ? 0 : 1;
  return terms <= 1;
}

bool is_negative(const RationalFunction& c) { return !c.is_zero() && sgn(c.num().leading()) < 0; }

}  // namespace

std::string power_symbol(const std::string& s, int k) {
  if (k == 0) return "";
  if (k == 1) return s;
  return s + "^" + std::to_string(k);
}

std::string format_terms(const std::vector<std::pair<RationalFunction, std::string>>& terms, char var) {
  std::string out;
  for (const auto& [coeff, symbol] : terms) {
    if (coeff.is_zero()) continue;
    const bool neg = is_negative(coeff);
    const RationalFunction mag = neg ? -coeff : coeff;
    std::string body;
    if (symbol.empty()) {
      body = to_string(mag, var);
      if (neg && !is_monomial(mag) && mag.is_polynomial()) body = "(" + body + ")";
    } else if (mag == RationalFunction(1)) {
      body = symbol;
    } else if (is_monomial(mag)) {
      body = to_string(mag, var) + "*" + symbol;
    } else {
      body = "(" + to_string(mag, var) + ")*" + symbol;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace casorati
