#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "krein/forward.hpp"
#include "krein/generators.hpp"
#include "oracles.hpp"

using namespace krein;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> random_coefficients(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.1, 10.0);
  std::vector<double> s(n + 1);
  for (auto& v : s) v = u(rng);
  if (std::bernoulli_distribution(0.3)(rng) && n > 0) s[0] = 0.0;
  return s;
}

}  // namespace

TEST_CASE("eval_w_string closed forms", "[forward]") {
  CHECK_THAT(eval_w_string(validate_string({{0, 2}}, std::nullopt), -1.0), WithinRel(0.5, 1e-15));
  const auto massless = validate_string({{0, 0}}, 3.0);
  CHECK(eval_w_string(massless, -1.0) == 3.0);
  CHECK(eval_w_string(massless, -7.5) == 3.0);
  // 1/(1/2 + 1/(4 + 2))
  const auto two = validate_string({{0, 0.5}, {4, 1}}, std::nullopt);
  CHECK_THAT(eval_w_string(two, -1.0), WithinRel(1.5, 1e-15));
  CHECK_THROWS_AS(eval_w_string(two, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_w_string(two, 0.5), std::invalid_argument);
}

TEST_CASE("eval_cf closed forms", "[forward]") {
  CHECK_THAT(eval_cf(ContinuedFraction(CfForm::krein, {1, 1, 1}), -1.0), WithinRel(1.5, 1e-15));
  CHECK_THAT(eval_cf(ContinuedFraction(CfForm::stieltjes, {1, 1}), -1.0), WithinRel(0.5, 1e-15));
  CHECK_THAT(eval_cf(tanh_coefficients(60), -1.0), WithinAbs(std::tanh(1.0), 1e-9));
  CHECK_THAT(eval_cf(tanh_coefficients(60), -1.0), WithinAbs(0.7615941559, 1e-9));
  CHECK_THROWS_AS(eval_cf(ContinuedFraction(CfForm::krein, {1}), 0.0), std::invalid_argument);
}

TEST_CASE("eval_cf agrees with the convergent recurrence", "[forward][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 15);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_coefficients(rng, len(rng));
    if (s.size() == 1 && s[0] == 0.0) s[0] = 1.0;
    const ContinuedFraction cf(CfForm::krein, s);
    for (double z : {-0.5, -1.0, -2.0, -5.0})
      CHECK_THAT(eval_cf(cf, z), WithinRel(oracle::krein_cf_convergent(s, z), 1e-11));
  }
}

TEST_CASE("levy_exponent", "[forward]") {
  CHECK_THAT(levy_exponent(ContinuedFraction(CfForm::krein, {3.5}), 1.0), WithinRel(1.0 / 3.5, 1e-15));

  const double c = 1.0 / std::sqrt(2.0 * std::acos(-1.0));
  const auto cf = bessel_drift_coefficients(0.5, 2.0, c, 400);
  CHECK_THAT(levy_exponent(cf, 2.0), WithinAbs(2.0 * (std::sqrt(2.0) - 1.0), 1e-6));

  double prev = 0.0;
  for (double lambda = 0.05; lambda < 50.0; lambda *= 1.3) {
    const double theta = levy_exponent(cf, lambda);
    CHECK(theta > prev);
    prev = theta;
  }
  CHECK_THROWS_AS(levy_exponent(cf, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(levy_exponent(ContinuedFraction(CfForm::stieltjes, {1}), 1.0), std::invalid_argument);
}

TEST_CASE("positivity, monotonicity and the minus map", "[forward][property]") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(1, 15);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_coefficients(rng, len(rng));
    const ContinuedFraction krein_cf(CfForm::krein, s);
    const ContinuedFraction stieltjes_cf(CfForm::stieltjes, s);

    double prev = infinity;
    for (double z = -0.01; z > -100.0; z *= 1.5) {
      const double w = eval_cf(krein_cf, z);
      CHECK(w > 0.0);
      // W(z) shrinks as z moves toward -infinity
      CHECK(w <= prev * (1 + 1e-14));
      prev = w;
    }

    for (double z : {-0.5, -1.0, -2.0, -5.0}) {
      // W^-(z) = (1/(-z)) W*(1/z) with W*(u) = 1/(-u W(u))
      const double zi = 1.0 / z;
      const double w_star = 1.0 / (-zi * eval_cf(krein_cf, zi));
      const double w_minus = w_star / -z;
      CHECK_THAT(eval_cf(stieltjes_cf, z), WithinRel(w_minus, 1e-10));
      CHECK(eval_cf(stieltjes_cf, z) > 0.0);
    }
  }
}
