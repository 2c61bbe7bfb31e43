#include "doctest.h"

#include <cmath>

#include "casorati/monodromy.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace casorati;
using namespace casorati::testing;

namespace {

Matrix<BigRational> mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<BigRational> m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

DifferenceForm constant_form(std::initializer_list<long> c) {
  std::vector<RationalFunction> v;
  for (long x : c) v.emplace_back(x);
  return DifferenceForm(std::move(v));
}

double max_abs(const std::vector<std::vector<Complex>>& a, const std::vector<std::vector<Complex>>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

bool annihilates(const Polynomial& p, const Matrix<BigRational>& m) {
  Matrix<BigRational> acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) acc = acc * m + Matrix<BigRational>::identity(m.rows()).scaled(p.coeff(k));
  return acc == Matrix<BigRational>(m.rows(), m.cols());
}

}  // namespace

TEST_CASE("theta_on_local examples") {
  const auto sqrt_x = ExactLocal::monomial(turn(1, 2));
  CHECK(to_string(theta_on_local(sqrt_x, BigRational(-1))) == "-x^(1/2)");
  const auto t = ExactLocal::monomial(ExactExponent{}, 1);
  const auto shifted = theta_on_local(t, BigRational(1));
  CHECK(to_string(shifted) == "1 + t");
  CHECK_THROWS_AS(theta_on_local(sqrt_x, BigRational(1)), Error);

  const Complex lambda = std::polar(1.0, 2 * M_PI / 3);
  const auto s = NumericLocal::monomial(Complex(1.0 / 3), 1);
  const auto r = theta_on_local(s, lambda);
  REQUIRE(r.terms().size() == 2);
  for (const auto& term : r.terms()) {
    CHECK(std::abs(term.rho - Complex(1.0 / 3)) < 1e-15);
    CHECK(std::abs(term.coeff - lambda) < 1e-15);
  }
  try {
    theta_on_local(s, Complex(1.0));
    FAIL("expected InconsistentMultiplier");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentMultiplier);
  }
}

TEST_CASE("theta is multiplicative on the formal ring") {
  Random rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_exact_local(rng, exponent_of(rng.nonzero_rational(4)), 3);
    const auto v = random_exact_local(rng, exponent_of(rng.nonzero_rational(4)), 3);
    CHECK(theta(u * v) == theta(u) * theta(v));
    const auto mono = ExactLocal::monomial(exponent_of(rng.nonzero_rational(4)), 0, rng.nonzero_rational(4));
    CHECK(theta(divide_by_monomial(u, mono)) == divide_by_monomial(theta(u), theta(mono)));

    const auto a = random_numeric_local(rng, Complex(0.3, 0.05), 3);
    const auto b = random_numeric_local(rng, Complex(0.7, -0.02), 2);
    CHECK(max_abs_coefficient(theta(a * b) - theta(a) * theta(b)) < 1e-12 * (1 + max_abs_coefficient(theta(a * b))));
  }
}

TEST_CASE("companion and minimal relations") {
  CHECK(companion_difference_equation(mat({{1, 0}, {0, 1}})) == constant_form({1, -2, 1}));
  CHECK(companion_difference_equation(mat({{1, 1}, {0, 1}})) == constant_form({1, -2, 1}));
  CHECK(companion_difference_equation(mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) == constant_form({-1, 0, 0, 1}));
  CHECK(minimal_relation(mat({{1, 0}, {0, 1}})) == constant_form({-1, 1}));
  CHECK(minimal_relation(mat({{1, 0}, {0, 2}})) == constant_form({2, -3, 1}));
  CHECK(minimal_relation(mat({{1, 1}, {0, 1}})) == constant_form({1, -2, 1}));

  Random rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto m = planted(rng, {{rng.nonzero_rational(3), 2}, {rng.nonzero_rational(3), 1}});
    const auto minimal = minimal_polynomial(m), charpoly = characteristic_polynomial(m);
    CHECK(divrem(charpoly, minimal).second.is_zero());
    CHECK(annihilates(minimal, m));
  }
}

TEST_CASE("local_structure examples") {
  const auto jordan = local_structure(MonodromySpec::exact(mat({{1, 1}, {0, 1}})));
  REQUIRE(jordan.blocks.size() == 1);
  CHECK(*jordan.blocks[0].exact_eigenvalue == 1);
  CHECK(jordan.blocks[0].exact_exponent == ExactExponent{});
  CHECK(jordan.blocks[0].jordan_sizes == std::vector<int>{2});

  const auto minus = local_structure(MonodromySpec::exact(mat({{-1, 0}, {0, -1}})));
  REQUIRE(minus.blocks.size() == 1);
  CHECK(minus.blocks[0].exact_exponent == turn(1, 2));
  CHECK(minus.blocks[0].jordan_sizes == std::vector<int>{1, 1});

  const double c = std::cos(2 * M_PI / 5), s = std::sin(2 * M_PI / 5);
  const auto rot = local_structure(MonodromySpec::numeric({{c, -s}, {s, c}}, 1e-10));
  REQUIRE(rot.blocks.size() == 2);
  CHECK(std::abs(rot.blocks[0].exponent - Complex(0.2)) < 1e-10);
  CHECK(std::abs(rot.blocks[1].exponent - Complex(0.8)) < 1e-10);

  const auto cyclic = local_structure(MonodromySpec::exact(mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
  REQUIRE(cyclic.blocks.size() == 3);
  CHECK(cyclic.blocks[0].exact_exponent == ExactExponent{});
  CHECK(cyclic.blocks[1].exact_exponent == turn(1, 3));
  CHECK(cyclic.blocks[2].exact_exponent == turn(2, 3));

  CHECK_THROWS_AS(local_structure(MonodromySpec::exact(mat({{0, -2}, {1, 0}}))), Error);
  const auto irrational = local_structure(MonodromySpec::exact(mat({{0, -2}, {1, 0}}), Mode::Numeric));
  CHECK(irrational.dimension() == 2);

  try {
    local_structure(MonodromySpec::numeric({{1.0, 0.0}, {0.0, 1.0 + 1e-4}}, 1e-10));
    FAIL("expected EigenfailNumeric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EigenfailNumeric);
  }
  const auto near_jordan = local_structure(MonodromySpec::numeric({{2.0, 1.0}, {0.0, 2.0}}, 1e-10));
  REQUIRE(near_jordan.blocks.size() == 1);
  CHECK(near_jordan.blocks[0].jordan_sizes == std::vector<int>{2});
}

TEST_CASE("canonical fundamental systems") {
  const auto jordan = MonodromySpec::exact(mat({{1, 1}, {0, 1}}));
  const auto sols = canonical_fundamental_system_exact(jordan);
  REQUIRE(sols.size() == 2);
  CHECK(to_string(sols[0]) == "1");
  CHECK(to_string(sols[1]) == "t");
  CHECK(theta_action(sols) == mat({{1, 1}, {0, 1}}));

  const auto id = canonical_fundamental_system_exact(MonodromySpec::exact(mat({{1, 0}, {0, 1}})));
  REQUIRE(id.size() == 2);
  CHECK(theta_action(id) == mat({{1, 0}, {0, 1}}));
  CHECK(to_string(id[1]) == "x^(1)");

  const auto cyc = MonodromySpec::exact(mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  const auto exact_cyc = canonical_fundamental_system_exact(cyc);
  REQUIRE(exact_cyc.size() == 3);
  CHECK(to_string(exact_cyc[1]) == "x^(1/3)");
  const auto action = theta_action(canonical_fundamental_system(cyc));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      const Complex expected = i == j ? std::polar(1.0, 2 * M_PI * static_cast<double>(i) / 3) : Complex(0.0);
      CHECK(std::abs(action[i][j] - expected) < 1e-12);
    }

  // Three-dimensional block for -1 with a second eigenvalue 2 repeated.
  Random rng(71);
  const auto m = planted(rng, {{BigRational(-1), 3}, {BigRational(2), 1}, {BigRational(2), 1}});
  const auto exact = canonical_fundamental_system_exact(MonodromySpec::exact(m));
  CHECK(characteristic_polynomial(theta_action(exact)) == characteristic_polynomial(m));
  CHECK(minimal_polynomial(theta_action(exact)) == minimal_polynomial(m));
}

TEST_CASE("companion equation annihilates theta powers of canonical solutions") {
  Random rng(505);
  int rational_cases = 0, numeric_cases = 0;
  for (int i = 0; i < 50; ++i) {
    Matrix<BigRational> m;
    if (i % 2 == 0) {
      std::vector<std::pair<BigRational, int>> blocks;
      const int shape = static_cast<int>(rng.integer(0, 2));
      const BigRational a = rng.nonzero_rational(3), b = rng.nonzero_rational(3);
      if (shape == 0) blocks = {{a, 3}};
      if (shape == 1) blocks = {{a, 2}, {b, 1}};
      if (shape == 2) blocks = {{a, 1}, {b, 1}, {rng.nonzero_rational(3), 1}};
      m = planted(rng, blocks);
    } else {
      do m = rng.matrix(3, 9); while (is_zero(determinant(m)));
    }
    const auto form = companion_difference_equation(m);
    const auto coeffs = form_constants(form);
    const auto spec = MonodromySpec::exact(m, Mode::Numeric);
    const bool rational_eigen = i % 2 == 0;
    if (rational_eigen) {
      ++rational_cases;
      for (const auto& y : canonical_fundamental_system_exact(spec)) {
        ExactLocal power = y;
        for (int n = 0; n < 8; ++n) {
          CHECK(apply_constant_form(coeffs, power).is_zero());
          power = theta(power);
        }
      }
    } else {
      ++numeric_cases;
      std::vector<Complex> c;
      for (const auto& v : coeffs) c.push_back(to_complex(v));
      const auto sols = canonical_fundamental_system(spec);
      for (const auto& y : sols) {
        NumericLocal power = y;
        for (int n = 0; n < 8; ++n) {
          double scale = 0;
          NumericLocal p = power;
          for (const auto& ck : c) {
            scale += std::abs(ck) * max_abs_coefficient(p);
            p = theta(p);
          }
          CHECK(max_abs_coefficient(apply_constant_form(c, power)) < 1e-9 * scale);
          power = theta(power);
        }
      }
      auto mc = companion_coefficients(spec);
      const auto cp = characteristic_polynomial(theta_action(sols));
      for (size_t k = 0; k < mc.size(); ++k) CHECK(std::abs(cp[k] - mc[k]) < 1e-8 * (1 + std::abs(mc[k])));
    }
    for (int k = 0; k < 20 && i < 1; ++k) {
      const auto p = rng.invertible_matrix(3, 5);
      CHECK(companion_difference_equation(p * m * inverse(p)) == form);
    }
  }
  CHECK(rational_cases == 25);
  CHECK(numeric_cases == 25);
}

TEST_CASE("theta determinant examples") {
  const auto half = ExactLocal::monomial(turn(1, 2));
  CHECK(theta_determinant({half, half.scaled(3)}, {BigRational(-1), BigRational(-1)}).is_zero());
  const auto one = ExactLocal::monomial(ExactExponent{});
  const auto t = ExactLocal::monomial(ExactExponent{}, 1);
  CHECK(to_string(theta_determinant({one, t}, {BigRational(1), BigRational(1)})) == "1");

  const Complex l1 = -1.0, l2 = std::polar(1.0, 2 * M_PI / 3);
  const auto d = theta_determinant({NumericLocal::monomial(0.5), NumericLocal::monomial(1.0 / 3)}, {l1, l2});
  REQUIRE(d.terms().size() == 1);
  CHECK(std::abs(d.terms()[0].rho - Complex(5.0 / 6)) < 1e-12);
  CHECK(std::abs(d.terms()[0].coeff - (l2 - l1)) < 1e-12);
}

TEST_CASE("vanishing theta determinant for planted invariant-coefficient relations") {
  Random rng(606);
  for (int i = 0; i < 50; ++i) {
    const size_t n = static_cast<size_t>(rng.integer(2, 4));
    const ExactExponent base = exponent_of(rng.nonzero_rational(3));
    std::vector<ExactLocal> ys;
    for (size_t j = 0; j + 1 < n; ++j) ys.push_back(random_exact_local(rng, base, 3));
    ExactLocal combo;
    for (const auto& y : ys) combo = combo + invariant_coefficient(rng) * y;
    ys.insert(ys.begin() + rng.integer(0, static_cast<long>(n) - 1), combo);
    CHECK(theta_determinant(ys).is_zero());

    const Complex numeric_base(rng.integer(0, 9) / 10.0, rng.integer(-3, 3) / 50.0);
    std::vector<NumericLocal> zs;
    for (size_t j = 0; j + 1 < n; ++j) zs.push_back(random_numeric_local(rng, numeric_base, 3));
    NumericLocal numeric_combo;
    for (const auto& z : zs) numeric_combo = numeric_combo + to_numeric(invariant_coefficient(rng, 3)) * z;
    zs.push_back(numeric_combo);
    const Complex lambda = NumericTraits::multiplier(numeric_base);
    CHECK(max_abs_coefficient(theta_determinant(zs, std::vector<Complex>(n, lambda))) < 1e-10);
  }
  for (int i = 0; i < 50; ++i) {
    const size_t n = static_cast<size_t>(rng.integer(2, 4));
    std::vector<NumericLocal> zs;
    for (size_t j = 0; j < n; ++j)
      zs.push_back(random_numeric_local(rng, Complex(rng.integer(0, 9) / 10.0, rng.integer(-3, 3) / 50.0), 3));
    CHECK(max_abs_coefficient(theta_determinant(zs)) > 1e-3);
  }
}
