#include "doctest.h"

#include "casorati/difference_form.hpp"
#include "casorati/errors.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace casorati;
using namespace casorati::testing;

namespace {

const Polynomial X = Polynomial::x();
const RationalFunction RX = RationalFunction::x();
const DifferenceForm T = DifferenceForm::theta();

DifferenceForm mult(const RationalFunction& a) { return DifferenceForm(a); }

GridFunction powers_of(long r, long first, long last) {
  return GridFunction::tabulate(first, last, [r](long t) {
    BigRational v = 1;
    for (long i = 0; i < t; ++i) v *= r;
    return v;
  });
}

}  // namespace

TEST_CASE("form_apply examples") {
  auto constant = GridFunction(0, std::vector<BigRational>(6, BigRational(5)));
  CHECK(form_apply(T - mult(1), constant, 2) == 0);
  auto squares = GridFunction::tabulate(0, 10, [](long t) { return BigRational(t * t); });
  CHECK(form_apply(T, squares, 3) == 16);
  auto twos = powers_of(2, 0, 12);
  DifferenceForm f = T * T - mult(3) * T + mult(2);
  for (long t = 0; t <= 10; ++t) CHECK(form_apply(f, twos, t) == 0);
  CHECK_THROWS_AS(form_apply(f, twos, 11), Error);
  DifferenceForm pole = mult(RationalFunction(1, X - 4)) * T;
  try {
    form_apply(pole, twos, 4);
    FAIL("expected PoleAtPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtPoint);
  }
}

TEST_CASE("form_mul examples") {
  CHECK(T * mult(RX) == mult(RX + 1) * T);
  DifferenceForm a = T - mult(RX);
  // (T - x)(T - x) f = f(x+2) - (x+1) f(x+1) - x f(x+1) + x^2 f(x).
  DifferenceForm expected({RationalFunction(X * X), RationalFunction(-(2 * X + 1)), RationalFunction(1)});
  CHECK(a * a == expected);
  auto f = GridFunction::tabulate(-3, 12, [](long t) { return BigRational(t * t * t - 2 * t + 7, 3); });
  for (long t = -3; t <= 8; ++t) CHECK(form_apply(a * a, f, t) == apply_twice(a, a, f, t));
  CHECK((a * DifferenceForm()).is_zero());
  CHECK(to_string(a * a) == "T^2 - (2*x+1)*T + x^2");
}

TEST_CASE("form_divrem examples") {
  DifferenceForm b = T - mult(RX);
  DifferenceForm a = T * T - mult(2 * RX + 1) * T + mult(RX * RX + RX);
  auto [gamma, r] = form_divrem(a, b);
  CHECK(gamma * b + r == a);
  CHECK(gamma == T - mult(RX));
  CHECK(r == mult(RX));
  auto exact = form_divrem(b * b, b);
  CHECK(exact.quotient == b);
  CHECK(exact.remainder.is_zero());

  auto same = form_divrem(b, b);
  CHECK(same.quotient == mult(1));
  CHECK(same.remainder.is_zero());

  DifferenceForm p = mult(RX * RX) * T + mult(3);
  DifferenceForm q = mult(RX - 1) * T + mult(RationalFunction(1, X + 2));
  auto d = form_divrem(p, q);
  CHECK(d.quotient.order() == 0);
  CHECK(d.remainder.order() <= 0);
  CHECK(d.quotient * q + d.remainder == p);

  CHECK(form_divrem(T, T * T).quotient.is_zero());
  try {
    form_divrem(a, DifferenceForm());
    FAIL("expected ZeroDivisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDivisor);
  }
}

TEST_CASE("ruffini_divide examples") {
  auto one = ruffini_divide(T - mult(RX), RX);
  CHECK(one.quotient == mult(1));
  CHECK(one.remainder.is_zero());

  // (T - (x+1))(T - x) = T^2 - (2x+2) T + x(x+1).
  DifferenceForm a = T * T - mult(2 * RX + 2) * T + mult((RX + 1) * RX);
  CHECK((T - mult(RX + 1)) * (T - mult(RX)) == a);
  auto two = ruffini_divide(a, RX);
  CHECK(two.quotient == T - mult(RX + 1));
  CHECK(two.remainder.is_zero());

  auto three = ruffini_divide(T * T, RX);
  CHECK(three.quotient == T + mult(RX + 1));
  CHECK(three.remainder == RX * (RX + 1));
  CHECK(three.quotient * (T - mult(RX)) + mult(three.remainder) == T * T);
}

TEST_CASE("form_divides and is_root") {
  Random rng(5);
  DifferenceForm b = rng.form(2, 2, 5, true);
  DifferenceForm g = rng.form(2, 2, 5, true);
  CHECK(form_divides(b, g * b));
  CHECK_FALSE(form_divides(T - mult(RX), T * T));
  CHECK(form_divides(b, b));

  CHECK(is_root(T - mult(2), powers_of(2, 0, 10), 0, 9));
  auto identity = GridFunction::tabulate(0, 10, [](long t) { return BigRational(t); });
  CHECK_FALSE(is_root(T - mult(2), identity, 0, 9));
  CHECK(is_root((T - mult(1)) * (T - mult(1)), identity, 0, 8));
}

TEST_CASE("const_coeff_basis examples") {
  auto check_annihilates = [](const Polynomial& charpoly) {
    auto basis = const_coeff_basis(charpoly);
    CHECK(static_cast<int>(basis.size()) == charpoly.degree());
    for (const auto& s : basis)
      for (long t = 0; t < 10; ++t) {
        BigRational acc = 0;
        for (int k = 0; k <= charpoly.degree(); ++k) acc += charpoly.coeff(k) * basis_value(s, t + k);
        CHECK(acc == 0);
      }
    return basis;
  };
  auto b1 = check_annihilates(Polynomial({2, -3, 1}));
  REQUIRE(b1.size() == 2);
  CHECK(*b1[0].root.exact == 1);
  CHECK(*b1[1].root.exact == 2);
  auto b2 = check_annihilates(Polynomial({1, -2, 1}));
  CHECK(b2[1].log_power == 1);
  CHECK(check_annihilates(Polynomial({-1, 1})).size() == 1);
  check_annihilates((X - make_rational(1, 2)).pow(3) * (X + 3));
  check_annihilates(X * X * (X - 2));

  try {
    const_coeff_basis(Polynomial({-2, 0, 1}));
    FAIL("expected NoExactRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoExactRoots);
  }
  auto numeric = const_coeff_basis(Polynomial({-2, 0, 1}), false);
  for (const auto& s : numeric)
    for (long t = 0; t < 10; ++t) {
      auto r = basis_value_numeric(s, t + 2) - 2.0 * basis_value_numeric(s, t);
      CHECK(std::abs(r) < 1e-9);
    }
}

TEST_CASE("cauchy_partial_fractions examples") {
  auto simple = cauchy_partial_fractions((X - 1) * (X - 2));
  REQUIRE(simple.size() == 2);
  CHECK(simple[0].coeffs == std::vector<BigRational>{-1});
  CHECK(simple[1].coeffs == std::vector<BigRational>{1});

  auto square = cauchy_partial_fractions(X * X);
  REQUIRE(square.size() == 1);
  CHECK(square[0].coeffs == std::vector<BigRational>{0, 1});

  Polynomial f = (X - 1) * (X - 1) * (X - 3);
  auto terms = cauchy_partial_fractions(f);
  for (long z : {0L, 2L, 5L}) CHECK(partial_fraction_value(terms, z) == 1 / f(BigRational(z)));
  CHECK_THROWS_AS(cauchy_partial_fractions(Polynomial()), Error);

  auto numeric = cauchy_partial_fractions_numeric(Polynomial({1, 0, 1}));
  std::complex<double> z(0.3, 0.7), acc = 0.0;
  for (const auto& t : numeric) acc += t.coeffs[0] / (z - t.root);
  CHECK(std::abs(acc - 1.0 / (z * z + 1.0)) < 1e-12);
}

TEST_CASE("operational homomorphism on random triples") {
  Random rng(101);
  for (int i = 0; i < 200; ++i) {
    DifferenceForm a = rng.form(static_cast<int>(rng.integer(0, 3)), 2, 6);
    DifferenceForm b = rng.form(static_cast<int>(rng.integer(0, 3)), 2, 6);
    GridFunction f = rng.grid(-4, 14, 9);
    long t = rng.integer(-4, 3);
    CHECK(form_apply(a * b, f, t) == apply_twice(a, b, f, t));
  }
}

TEST_CASE("division round trip, Ruffini agreement, Galois construction") {
  Random rng(202);
  for (int i = 0; i < 60; ++i) {
    int n = static_cast<int>(rng.integer(0, 3));
    int m = static_cast<int>(rng.integer(n, 4));
    DifferenceForm a = rng.form(m, 2, 5, true);
    DifferenceForm b = rng.form(n, 2, 5, true);
    auto [gamma, r] = form_divrem(a, b);
    CHECK(gamma * b + r == a);
    CHECK(r.order() < b.order());
    CHECK(gamma.order() == m - n);

    RationalFunction g = rng.rational_function(2, 5);
    auto ruffini = ruffini_divide(a, g);
    auto general = form_divrem(a, T - mult(g));
    CHECK(ruffini.quotient == general.quotient);
    CHECK(DifferenceForm(ruffini.remainder) == general.remainder);
  }
  // A root of B on a window is a root of Gamma*B on the window shrunk by order(Gamma).
  for (int i = 0; i < 20; ++i) {
    BigRational r = rng.nonzero_rational(4);
    DifferenceForm b = T - mult(RationalFunction(r));
    DifferenceForm gamma = rng.form(2, 2, 5);
    DifferenceForm a = gamma * b;
    auto omega = GridFunction::tabulate(0, 12, [&](long t) {
      BigRational v = 1;
      for (long k = 0; k < t; ++k) v *= r;
      return v;
    });
    CHECK(is_root(b, omega, 0, 11));
    CHECK(is_root(a, omega, 0, 11 - gamma.order()));
    CHECK(form_divides(b, a));
  }
}

TEST_CASE("ring laws of form_mul") {
  Random rng(303);
  for (int i = 0; i < 40; ++i) {
    DifferenceForm a = rng.form(2, 2, 5, true), b = rng.form(2, 2, 5, true), c = rng.form(1, 2, 5, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}
