#pragma once

#include <optional>
#include <vector>

#include "casorati/difference_form.hpp"
#include "casorati/matrix.hpp"

namespace casorati {

using Relation = std::vector<BigRational>;

/// Half-open integer interval [begin, end).
struct Window {
  long begin = 0;
  long end = 0;
  long length() const { return end - begin; }
  friend bool operator==(const Window&, const Window&) = default;
};

enum class DependenceCase { None, A, B };

/// Outcome of the rank analysis of sampled sequences on a window.
struct DependenceReport {
  Window window;
  int rank = 0;
  /// Basis of the relation space in reduced echelon form (first nonzero entry 1).
  std::vector<Relation> relations;
  DependenceCase dependence = DependenceCase::None;
};

/// det[f_j(m + i)], i, j < n.
BigRational casoratian(const std::vector<GridFunction>& seqs, long m);

/// Matrix [f_j(t)] for t in the window, one column per sequence.
Matrix<BigRational> sample_matrix(const std::vector<GridFunction>& seqs, Window window);

/// Rank analysis of n+1 sequences sampled on m0 .. m0+n+p. Relations come from signed maximal
/// minors of an independent row set, so each basis vector is a cofactor vector.
DependenceReport christoffel_analyze(const std::vector<GridFunction>& seqs, long m0, long p);

/// Sliding windows of the given length over [range.begin, range.end); consecutive windows with
/// identical relation spaces are merged greedily left to right.
std::vector<DependenceReport> windowed_scan(const std::vector<GridFunction>& seqs, Window range, long window_length);

struct RelationCheck {
  /// Constant-coefficient relation valid on the whole window, when one exists.
  std::optional<Relation> relation;
  /// The window holds fewer samples than sequences, so no Casoratian was checked.
  bool window_limited = false;
  /// Casoratian vanishes but only point-dependent relations exist.
  bool varying_coefficients = false;
  /// Per-point relation (one null vector of the n x n matrix at each m) when varying.
  std::vector<Relation> pointwise;
};

/// Converse check on the sample points [first, last]: requires a vanishing Casoratian at every
/// admissible m and looks for a constant relation.
RelationCheck casoratian_zero_implies_relation_check(const std::vector<GridFunction>& seqs, long first, long last);

}  // namespace casorati
