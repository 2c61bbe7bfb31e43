#include "casorati/dependence.hpp"

#include <algorithm>

#include "casorati/errors.hpp"

namespace casorati {
namespace {

struct Pivots {
  std::vector<size_t> rows;
  std::vector<size_t> cols;
};

// Fraction-free (Bareiss) elimination with full row tracking; returns independent rows/columns.
Pivots bareiss_pivots(Matrix<BigRational> m) {
  // Clear denominators row by row so the elimination stays integral.
  for (size_t i = 0; i < m.rows(); ++i) {
    BigInteger l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) *= l;
  }
  std::vector<size_t> order(m.rows());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Pivots out;
  BigRational prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      std::swap(order[p], order[r]);
    }
    for (size_t i = r + 1; i < m.rows(); ++i) {
      for (size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.rows.push_back(order[r]);
    out.cols.push_back(c);
    ++r;
  }
  return out;
}

Relation normalized(Relation v) {
  for (const auto& x : v)
    if (!is_zero(x)) {
      const BigRational inv = 1 / x;
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

}  // namespace

BigRational casoratian(const std::vector<GridFunction>& seqs, long m) {
  const size_t n = seqs.size();
  Matrix<BigRational> a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = seqs[j].at(m + static_cast<long>(i));
  return determinant(std::move(a));
}

Matrix<BigRational> sample_matrix(const std::vector<GridFunction>& seqs, Window window) {
  Matrix<BigRational> a(static_cast<size_t>(window.length()), seqs.size());
  for (long t = window.begin; t < window.end; ++t)
    for (size_t j = 0; j < seqs.size(); ++j) a(static_cast<size_t>(t - window.begin), j) = seqs[j].at(t);
  return a;
}

DependenceReport christoffel_analyze(const std::vector<GridFunction>& seqs, long m0, long p) {
  if (p < 0) fail(ErrorCode::InsufficientWindow, "window excess p must be nonnegative");
  if (seqs.empty()) fail(ErrorCode::InvalidArgument, "no sequences");
  const long n = static_cast<long>(seqs.size()) - 1;
  DependenceReport report;
  report.window = {m0, m0 + n + p + 1};
  const Matrix<BigRational> a = sample_matrix(seqs, report.window);
  const Pivots piv = bareiss_pivots(a);
  const size_t r = piv.rows.size();
  report.rank = static_cast<int>(r);

  std::vector<bool> is_pivot_col(a.cols(), false);
  for (size_t c : piv.cols) is_pivot_col[c] = true;
  std::vector<Relation> relations;
  for (size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot_col[free]) continue;
    // Columns pivot_cols + {free}, rows = independent rows: the r x (r+1) block has a
    // one-dimensional kernel spanned by its signed maximal minors.
    std::vector<size_t> cols = piv.cols;
    cols.push_back(free);
    std::sort(cols.begin(), cols.end());
    Relation v(a.cols(), BigRational(0));
    for (size_t mu = 0; mu < cols.size(); ++mu) {
      Matrix<BigRational> minor(r, r);
      for (size_t i = 0; i < r; ++i) {
        size_t jj = 0;
        for (size_t k = 0; k < cols.size(); ++k) {
          if (k == mu) continue;
          minor(i, jj++) = a(piv.rows[i], cols[k]);
        }
      }
      BigRational d = r == 0 ? BigRational(1) : determinant(std::move(minor));
      v[cols[mu]] = (mu % 2 == 0) ? d : BigRational(-d);
    }
    relations.push_back(std::move(v));
  }
  for (auto& rel : canonical_span(relations, a.cols())) report.relations.push_back(normalized(std::move(rel)));
  const size_t corank = a.cols() - r;
  report.dependence = corank == 0 ? DependenceCase::None : corank == 1 ? DependenceCase::A : DependenceCase::B;
  return report;
}

std::vector<DependenceReport> windowed_scan(const std::vector<GridFunction>& seqs, Window range, long window_length) {
  const long count = static_cast<long>(seqs.size());
  if (window_length < count) fail(ErrorCode::InsufficientWindow, "window shorter than the number of sequences");
  std::vector<DependenceReport> out;
  for (long t = range.begin; t + window_length <= range.end; ++t) {
    DependenceReport rep = christoffel_analyze(seqs, t, window_length - count);
    if (!out.empty() && out.back().relations == rep.relations && out.back().rank == rep.rank) {
      out.back().window.end = rep.window.end;
    } else {
      out.push_back(std::move(rep));
    }
  }
  return out;
}

RelationCheck casoratian_zero_implies_relation_check(const std::vector<GridFunction>& seqs, long first, long last) {
  if (seqs.empty()) fail(ErrorCode::InvalidArgument, "no sequences");
  if (last < first) fail(ErrorCode::InsufficientWindow, "empty window");
  const long n = static_cast<long>(seqs.size());
  RelationCheck out;
  if (last - first + 1 < n) {
    out.window_limited = true;
  } else {
    for (long m = first; m + n - 1 <= last; ++m)
      if (!is_zero(casoratian(seqs, m)))
        fail(ErrorCode::PreconditionViolated, "Casoratian is nonzero at m = " + std::to_string(m));
  }
  const auto null = nullspace(sample_matrix(seqs, {first, last + 1}));
  if (!null.empty()) {
    out.relation = normalized(canonical_span(null, seqs.size()).front());
    return out;
  }
  out.varying_coefficients = true;
  for (long m = first; m + n - 1 <= last; ++m) {
    const auto local = nullspace(sample_matrix(seqs, {m, m + n}));
    out.pointwise.push_back(normalized(local.front()));
  }
  return out;
}

}  // namespace casorati
