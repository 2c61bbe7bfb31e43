#include "doctest.h"

#include <algorithm>

#include "casorati/dependence.hpp"
#include "casorati/errors.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace casorati;
using namespace casorati::testing;

namespace {

GridFunction scaled(const GridFunction& f, const BigRational& c) {
  std::vector<BigRational> v = f.values();
  for (auto& x : v) x *= c;
  return GridFunction(f.base(), std::move(v));
}

const Polynomial X = Polynomial::x();

}  // namespace

TEST_CASE("casoratian of monomials is the superfactorial") {
  std::vector<GridFunction> three, four;
  for (int k = 0; k < 4; ++k) {
    auto seq = poly_seq(X.pow(static_cast<unsigned>(k)), -10, 10);
    if (k < 3) three.push_back(seq);
    four.push_back(seq);
  }
  for (long m = -5; m <= 5; ++m) {
    std::vector<std::vector<BigRational>> a3(3, std::vector<BigRational>(3));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) a3[i][j] = three[j].at(m + static_cast<long>(i));
    CHECK(laplace_det(a3) == 2);
    CHECK(casoratian(three, m) == 2);
    CHECK(casoratian(four, m) == 12);
  }
  auto twos = GridFunction::tabulate(0, 8, [](long t) { return BigRational(1L << t); });
  CHECK(casoratian({twos, scaled(twos, 3)}, 2) == 0);
  CHECK_THROWS_AS(casoratian(three, 9), Error);
}

TEST_CASE("christoffel_analyze cases") {
  auto f = poly_seq(X * X, -3, 12);
  auto a = christoffel_analyze({f, scaled(f, 2)}, 0, 3);
  CHECK(a.dependence == DependenceCase::A);
  REQUIRE(a.relations.size() == 1);
  CHECK(a.relations[0] == Relation{1, make_rational(-1, 2)});

  auto b = christoffel_analyze({f, scaled(f, 2), scaled(f, 5)}, 0, 2);
  CHECK(b.dependence == DependenceCase::B);
  CHECK(b.relations.size() == 2);
  CHECK(b.rank == 1);

  auto none = christoffel_analyze({poly_seq(1, -3, 12), poly_seq(X, -3, 12), poly_seq(X * X, -3, 12)}, 1, 4);
  CHECK(none.dependence == DependenceCase::None);
  CHECK(none.relations.empty());
  CHECK(none.window == Window{1, 8});

  try {
    christoffel_analyze({f}, 0, -1);
    FAIL("expected InsufficientWindow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientWindow);
  }
}

TEST_CASE("planted relation forces vanishing casoratian; scale and shift laws") {
  Random rng(9);
  for (int i = 0; i < 30; ++i) {
    const size_t n = static_cast<size_t>(rng.integer(2, 4));
    std::vector<GridFunction> seqs;
    for (size_t j = 0; j + 1 < n; ++j) seqs.push_back(rng.grid(-2, 12, 9));
    std::vector<BigRational> c(n - 1);
    for (auto& v : c) v = rng.rational(5);
    seqs.push_back(GridFunction::tabulate(-2, 9, [&](long t) {
      BigRational acc = 0;
      for (size_t j = 0; j + 1 < n; ++j) acc += c[j] * seqs[j].at(t);
      return acc;
    }));
    for (long m = -2; m + static_cast<long>(n) - 1 <= 9; ++m) CHECK(casoratian(seqs, m) == 0);
  }
  for (int i = 0; i < 30; ++i) {
    std::vector<GridFunction> seqs{rng.grid(0, 8, 9), rng.grid(0, 8, 9), rng.grid(0, 8, 9)};
    BigRational c = rng.nonzero_rational(7);
    auto changed = seqs;
    changed[1] = scaled(seqs[1], c);
    CHECK(casoratian(changed, 2) == c * casoratian(seqs, 2));
    auto r1 = christoffel_analyze(seqs, 0, 2), r2 = christoffel_analyze(changed, 0, 2);
    CHECK(r1.dependence == r2.dependence);
    CHECK(r1.rank == r2.rank);
    std::vector<GridFunction> shifted;
    for (const auto& s : seqs) shifted.emplace_back(s.base() - 1, s.values());
    CHECK(casoratian(shifted, 2) == casoratian(seqs, 3));
  }
}

TEST_CASE("windowed_scan on piecewise data") {
  // g agrees with f for t < 0 and is t^3 afterwards; f = t^2 + 1 is never zero.
  auto f = GridFunction::tabulate(-8, 12, [](long t) { return BigRational(t * t + 1); });
  auto g = GridFunction::tabulate(-8, 12, [](long t) { return BigRational(t < 0 ? t * t + 1 : t * t * t + 5); });
  auto reports = windowed_scan({f, g}, {-8, 12}, 3);
  REQUIRE(reports.size() >= 2);
  CHECK(reports.front().dependence == DependenceCase::A);
  CHECK(reports.front().relations[0] == Relation{1, -1});
  CHECK(reports.front().window == Window{-8, 0});
  CHECK(reports.back().dependence == DependenceCase::None);
  // Brute force each window and compare with the merged decomposition.
  for (long t = -8; t + 3 <= 12; ++t) {
    auto single = christoffel_analyze({f, g}, t, 1);
    auto it = std::find_if(reports.begin(), reports.end(),
                           [t](const DependenceReport& r) { return r.window.begin <= t && t + 3 <= r.window.end; });
    REQUIRE(it != reports.end());
    CHECK(it->relations == single.relations);
  }

  auto dep = windowed_scan({f, scaled(f, 3)}, {-8, 12}, 4);
  REQUIRE(dep.size() == 1);
  CHECK(dep[0].dependence == DependenceCase::A);
  CHECK(dep[0].window == Window{-8, 12});

  auto indep = windowed_scan({poly_seq(1, 0, 10), poly_seq(X, 0, 10), poly_seq(X * X, 0, 10)}, {0, 11}, 3);
  REQUIRE(indep.size() == 1);
  CHECK(indep[0].dependence == DependenceCase::None);
  CHECK_THROWS_AS(windowed_scan({f, g}, {0, 5}, 1), Error);
}

TEST_CASE("casoratian_zero_implies_relation_check") {
  auto twos = GridFunction::tabulate(0, 8, [](long t) { return BigRational(1L << t); });
  auto r = casoratian_zero_implies_relation_check({twos, scaled(twos, 3)}, 0, 6);
  REQUIRE(r.relation);
  CHECK(*r.relation == Relation{1, make_rational(-1, 3)});
  CHECK_FALSE(r.window_limited);

  auto limited = casoratian_zero_implies_relation_check({poly_seq(1, 0, 4), poly_seq(X, 0, 4)}, 2, 2);
  CHECK(limited.window_limited);
  REQUIRE(limited.relation);
  REQUIRE(limited.relation->size() == 2);
  CHECK((*limited.relation)[0] + (*limited.relation)[1] * 2 == 0);

  Random rng(33);
  for (int i = 0; i < 10; ++i) {
    auto a = rng.grid(0, 10, 9), b = rng.grid(0, 10, 9);
    BigRational p = rng.nonzero_rational(5), q = rng.rational(5);
    auto c = GridFunction::tabulate(0, 9, [&](long t) -> BigRational { return p * a.at(t) + q * b.at(t); });
    auto res = casoratian_zero_implies_relation_check({a, b, c}, 0, 9);
    REQUIRE(res.relation);
    CHECK(*res.relation == Relation{1, q / p, -1 / p});
  }

  // Zero pattern: every 2x2 Casoratian vanishes, yet the ratio changes across the zeros.
  GridFunction u(0, {1, 0, 0, 1}), v(0, {1, 0, 0, 2});
  auto varying = casoratian_zero_implies_relation_check({u, v}, 0, 3);
  CHECK_FALSE(varying.relation);
  CHECK(varying.varying_coefficients);
  CHECK(varying.pointwise.size() == 3);

  try {
    casoratian_zero_implies_relation_check({poly_seq(1, 0, 4), poly_seq(X, 0, 4)}, 0, 4);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("christoffel relations equal the Gauss-Jordan nullspace") {
  Random rng(2024);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const size_t n = static_cast<size_t>(rng.integer(1, 4));
    const long window = rng.integer(static_cast<long>(n), 12);
    std::vector<GridFunction> seqs;
    for (size_t j = 0; j < n; ++j) seqs.push_back(rng.grid(0, window, 9));
    const long planted = rng.integer(0, static_cast<long>(n) - 1);
    for (long k = 0; k < planted; ++k) {
      // overwrite a sequence by a combination of the others (or by zero when alone)
      const size_t target = static_cast<size_t>(rng.integer(0, static_cast<long>(n) - 1));
      std::vector<BigRational> mix(n);
      for (auto& c : mix) c = rng.rational(4);
      seqs[target] = GridFunction::tabulate(0, window - 1, [&](long t) -> BigRational {
        BigRational acc = 0;
        for (size_t j = 0; j < n; ++j)
          if (j != target) acc += mix[j] * seqs[j].at(t);
        return acc;
      });
    }
    auto report = christoffel_analyze(seqs, 0, window - static_cast<long>(n));
    std::vector<std::vector<BigRational>> rows;
    for (long t = 0; t < window; ++t) {
      std::vector<BigRational> row;
      for (const auto& s : seqs) row.push_back(s.at(t));
      rows.push_back(row);
    }
    if (report.relations != oracle_nullspace(rows, n)) ++mismatches;
    CHECK(report.rank + static_cast<int>(report.relations.size()) == static_cast<int>(n));
  }
  CHECK(mismatches == 0);
}
