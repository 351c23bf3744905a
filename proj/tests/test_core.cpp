#include <catch_amalgamated.hpp>

#include <random>

#include "krein/core.hpp"

using namespace krein;

namespace {

DiscreteString random_string(std::mt19937_64& rng, bool with_terminal) {
  std::uniform_real_distribution<double> step(0.05, 3.0);
  std::uniform_int_distribution<int> count(1, 8);
  std::vector<Jump> raw;
  const int n = count(rng);
  // a lone massless record needs a terminal point
  const bool empty_start = (n > 1 || with_terminal) && std::bernoulli_distribution(0.5)(rng);
  double x = 0.0, y = empty_start ? 0.0 : step(rng);
  for (int j = 0; j < n; ++j) {
    raw.push_back({x, y});
    x += step(rng);
    y += step(rng);
  }
  return validate_string(raw, with_terminal ? std::optional<double>(x) : std::nullopt);
}

}  // namespace

TEST_CASE("validate_string accepts and canonicalizes", "[core]") {
  SECTION("two jumps") {
    const auto s = validate_string({{0, 0.5}, {4, 1}}, std::nullopt);
    REQUIRE(s.size() == 2);
    CHECK(s.jumps()[1] == Jump{4, 1});
    CHECK_FALSE(s.terminal());
  }
  SECTION("massless string of length 1") {
    const auto s = validate_string({{0, 0}}, 1.0);
    REQUIRE(s.size() == 1);
    CHECK(*s.terminal() == 1.0);
  }
  SECTION("leading origin record is inserted") {
    const auto s = validate_string({{2, 1}}, std::nullopt);
    REQUIRE(s.size() == 2);
    CHECK(s.jumps()[0] == Jump{0, 0});
    CHECK(s.first_increase() == 2.0);
  }
  SECTION("records without a mass increment are dropped") {
    const auto s = validate_string({{0, 0}, {1, 0}, {2, 3}, {3, 3}}, std::nullopt);
    REQUIRE(s.size() == 2);
    CHECK(s.jumps()[1] == Jump{2, 3});
  }
  SECTION("a massless record may sit on the terminal point") {
    const auto s = validate_string({{0, 0}, {1, 0}}, 1.0);
    CHECK(s.size() == 1);
  }
}

TEST_CASE("validate_string rejects malformed input", "[core]") {
  CHECK_THROWS_AS(validate_string({{2, 1}, {1, 2}}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, 2}, {1, 1}}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, -1}}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{-1, 1}}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, 0}, {2, 1}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, 0}, {2, 1}}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, 0}}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, 0}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(validate_string({{0, infinity}}, std::nullopt), std::invalid_argument);
}

TEST_CASE("eval_mass is a right-continuous step lookup", "[core]") {
  const auto s = validate_string({{0, 0.5}, {4, 1}}, std::nullopt);
  CHECK(eval_mass(s, 3.9) == 0.5);
  CHECK(eval_mass(s, 0.0) == 0.5);
  CHECK(eval_mass(s, 4.0) == 1.0);
  CHECK(eval_mass(s, 1e9) == 1.0);

  const auto massless = validate_string({{0, 0}}, 1.0);
  CHECK(eval_mass(massless, 1.0) == infinity);
  CHECK(eval_mass(massless, 0.999) == 0.0);

  CHECK_THROWS_AS(eval_mass(s, -0.1), std::invalid_argument);
}

TEST_CASE("total_mass", "[core]") {
  const auto two = total_mass(validate_string({{0, 0.5}, {4, 1}}, std::nullopt));
  CHECK(two.finite == 1.0);
  CHECK_FALSE(two.terminal);

  const auto massless = total_mass(validate_string({{0, 0}}, 1.0));
  CHECK(massless.finite == 0.0);
  CHECK(massless.terminal);

  CHECK(total_mass(validate_string({{0, 2.5}}, std::nullopt)).finite == 2.5);
}

TEST_CASE("string properties on random inputs", "[core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_string(rng, trial % 2 == 0);
    const auto& jumps = s.jumps();

    // idempotent
    CHECK(validate_string(jumps, s.terminal()) == s);

    double min_gap = infinity;
    for (std::size_t j = 1; j < jumps.size(); ++j)
      min_gap = std::min(min_gap, jumps[j].position - jumps[j - 1].position);
    const double eps = min_gap / 4;

    for (std::size_t j = 0; j < jumps.size(); ++j) {
      CHECK(eval_mass(s, jumps[j].position) == jumps[j].value);
      if (j > 0) CHECK(eval_mass(s, jumps[j].position - eps) == jumps[j - 1].value);
    }
    double prev = 0.0;
    for (double x = 0.0; x < jumps.back().position + 2.0; x += 0.01) {
      const double v = eval_mass(s, x);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("ContinuedFraction invariants", "[core]") {
  CHECK_NOTHROW(ContinuedFraction(CfForm::krein, {0, 1, 3}));
  CHECK_THROWS_AS(ContinuedFraction(CfForm::krein, {}), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction(CfForm::krein, {-1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction(CfForm::krein, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction(CfForm::stieltjes, {1, NAN}), std::invalid_argument);
  const ContinuedFraction cf(CfForm::stieltjes, {2, 3});
  CHECK(cf.size() == 2);
  CHECK(cf[1] == 3.0);
}
