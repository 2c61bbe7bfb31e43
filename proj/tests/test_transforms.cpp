#include "doctest.h"

#include "casorati/transforms.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace casorati;
using namespace casorati::testing;

namespace {

const Polynomial X = Polynomial::x();

}  // namespace

TEST_CASE("transform examples") {
  auto gamma = diff_to_difference(gamma_operator());
  CHECK(to_string(gamma) == "f(x) - (x-1)*f(x-1)");
  ShiftedDifferenceRelation expected;
  expected.add(0, Polynomial(1));
  expected.add(-1, Polynomial({1, -1}));
  CHECK(gamma == expected);

  auto beta = diff_to_difference(beta_operator(3));
  CHECK(to_string(beta) == "(x+3)*f(x) - (x-1)*f(x-1)");

  DifferentialOperator only;
  only.add(0, 1, 1);
  CHECK(to_string(diff_to_difference(only)) == "-(x-1)*f(x-1)");
  CHECK(to_string(gamma_operator()) == "phi' + phi");
  CHECK(to_string(beta_operator(2)) == "-y*phi' + phi' + 2*phi");
  CHECK(transform_factor(3, 0) == Polynomial(1));
}

TEST_CASE("gamma and beta recurrences annihilate exact samples") {
  const auto gamma = diff_to_difference(gamma_operator());
  const auto fact = GridFunction::tabulate(1, 20, [](long n) { return factorial(n - 1); });
  for (long n = 2; n <= 20; ++n) CHECK(relation_apply(gamma, fact, n) == 0);

  for (long a = 1; a <= 3; ++a) {
    const auto rel = diff_to_difference(beta_operator(a));
    const auto beta = GridFunction::tabulate(1, 15, [a](long n) -> BigRational {
      return factorial(n - 1) * factorial(a) / factorial(n + a);
    });
    for (long n = 2; n <= 15; ++n) CHECK(relation_apply(rel, beta, n) == 0);
    // and a perturbed sample is caught
    auto values = beta.values();
    values[5] += 1;
    GridFunction broken(1, values);
    CHECK(relation_apply(rel, broken, 6) != 0);
  }
}

TEST_CASE("as_theta_form re-centres shifts") {
  const auto gamma = diff_to_difference(gamma_operator());
  const auto emb = as_theta_form(gamma);
  CHECK(emb.offset == 1);
  CHECK(to_string(emb.form) == "T - x");
  const auto fact = GridFunction::tabulate(1, 20, [](long n) { return factorial(n - 1); });
  for (long t = 1; t < 20; ++t) CHECK(form_apply(emb.form, fact, t) == relation_apply(gamma, fact, t + emb.offset));

  ShiftedDifferenceRelation direct;
  direct.add(0, X);
  direct.add(1, Polynomial(-1));
  const auto d = as_theta_form(direct);
  CHECK(d.offset == 0);
  CHECK(to_string(d.form) == "-T + x");

  for (long a = 1; a <= 3; ++a) {
    const auto rel = diff_to_difference(beta_operator(a));
    const auto e = as_theta_form(rel);
    CHECK(e.offset == 1);
    const auto beta = GridFunction::tabulate(1, 15, [a](long n) -> BigRational {
      return factorial(n - 1) * factorial(a) / factorial(n + a);
    });
    for (long t = 1; t < 15; ++t) {
      CHECK(form_apply(e.form, beta, t) == 0);
      CHECK(form_apply(e.form, beta, t) == relation_apply(rel, beta, t + 1));
    }
  }
}

TEST_CASE("inverse transform") {
  const auto back = difference_to_diff(diff_to_difference(gamma_operator()));
  REQUIRE(back);
  CHECK(*back == gamma_operator());
  CHECK(difference_to_diff(ShiftedDifferenceRelation{}) == DifferentialOperator{});

  // f(x+1) - f(x): c_1 = 1 is the lambda = 1, r = 0 image, c_0 = -1 the lambda = 0 image.
  ShiftedDifferenceRelation forward;
  forward.add(1, Polynomial(1));
  forward.add(0, Polynomial(-1));
  auto pre = difference_to_diff(forward);
  REQUIRE(pre);
  CHECK(diff_to_difference(*pre) == forward);

  // Negative shifts need the factor (x-1)...(x+s); a constant at shift -1 has no preimage.
  ShiftedDifferenceRelation orphan;
  orphan.add(-1, Polynomial(1));
  CHECK_FALSE(difference_to_diff(orphan));
  ShiftedDifferenceRelation orphan2;
  orphan2.add(-2, X * X);
  CHECK_FALSE(difference_to_diff(orphan2));
}

TEST_CASE("round trip and linearity on random operators") {
  Random rng(77);
  for (int i = 0; i < 100; ++i) {
    DifferentialOperator p, q;
    for (int k = 0; k < 5; ++k) {
      p.add(static_cast<int>(rng.integer(0, 4)), static_cast<int>(rng.integer(0, 4)), rng.rational(9));
      q.add(static_cast<int>(rng.integer(0, 4)), static_cast<int>(rng.integer(0, 4)), rng.rational(9));
    }
    const auto back = difference_to_diff(diff_to_difference(p));
    REQUIRE(back);
    CHECK(*back == p);
    const BigRational a = rng.rational(5), b = rng.rational(5);
    CHECK(diff_to_difference(a * p + b * q) == a * diff_to_difference(p) + b * diff_to_difference(q));
  }
}
