#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casorati/rational_function.hpp"

namespace casorati {

/// Renders sum c_k * s_k as "c*s - (p)*s + r", highest term first; an empty symbol marks the
/// constant term. Output re-parses to the same value under the expression grammar.
std::string format_terms(const std::vector<std::pair<RationalFunction, std::string>>& terms, char var = 'x');

/// "s", "s^k" or "" for k = 0.
std::string power_symbol(const std::string& s, int k);

}  // namespace casorati
