#include "wpo/largeness.hpp"

#include "doctest.h"
#include "support/test_pools.hpp"

using namespace wpo;

namespace {

Nat identity(Nat x) { return x; }

}  // namespace

TEST_CASE("finite sets must be strictly increasing") {
  CHECK_NOTHROW(FiniteSet({2, 3, 4}));
  CHECK_THROWS_AS(FiniteSet({2, 2}), domain_error);
  CHECK_THROWS_AS(FiniteSet({3, 1}), domain_error);
  CHECK(FiniteSet::interval(2, 4).size() == 3);
}

TEST_CASE("omega-largeness of {2,3,4}") {
  auto result = is_alpha_large(Ordinal::omega(), FiniteSet({2, 3, 4}));
  CHECK(result.is_large);
  REQUIRE(result.trace.steps.size() == 3);
  CHECK(result.trace.steps[0].consumed == 2);
  CHECK(result.trace.steps[0].after == Ordinal(2));
  CHECK(result.trace.steps[1].after == Ordinal(1));
  CHECK(result.trace.steps[2].after == Ordinal(0));
}

TEST_CASE("short sets are not omega-large") {
  auto result = is_alpha_large(Ordinal::omega(), FiniteSet({2}));
  CHECK_FALSE(result.is_large);
  REQUIRE(result.trace.steps.size() == 1);
  CHECK(result.trace.steps[0].after == Ordinal(2));
}

TEST_CASE("1 is large for any singleton") {
  auto result = is_alpha_large(Ordinal(1), FiniteSet({5}));
  CHECK(result.is_large);
  CHECK(result.trace.steps[0].after == Ordinal(0));
}

TEST_CASE("trace keeps zeros once the descent bottoms out") {
  auto result = is_alpha_large(Ordinal(1), FiniteSet({1, 2, 3}));
  CHECK(result.is_large);
  for (const auto& step : result.trace.steps) CHECK(step.after == Ordinal(0));
}

TEST_CASE("largeness is preserved under right extension") {
  auto pool = testsupport::ordinal_pool(
      {Ordinal(0), Ordinal(1), Ordinal::omega()}, 2, 2);
  for (const auto& alpha : pool) {
    if (alpha.is_zero()) continue;
    auto base = is_alpha_large(alpha, FiniteSet({1, 2, 3, 4}));
    if (base.is_large)
      CHECK(is_alpha_large(alpha, FiniteSet({1, 2, 3, 4, 5, 6})).is_large);
  }
}

TEST_CASE("interval search matches the descent examples") {
  Budget budget(1'000'000);
  CHECK(find_alpha_large_interval(Ordinal::omega(), identity, 2, budget) == 4);
  CHECK(find_alpha_large_interval(Ordinal(1), identity, 7, budget) == 7);
  CHECK_THROWS_AS(
      find_alpha_large_interval(Ordinal(0), identity, 1, budget),
      domain_error);
}

TEST_CASE("interval search result is minimal") {
  auto shifted = [](Nat x) { return x + 1; };
  Budget budget(1'000'000);
  Ordinal alpha = Ordinal::omega().times(2);
  Nat b = find_alpha_large_interval(alpha, shifted, 1, budget);

  // oracle: replay largeness on {f(1)..f(b)} and on the one-shorter set
  std::vector<Nat> full;
  for (Nat i = 1; i <= b; ++i) full.push_back(i + 1);
  CHECK(is_alpha_large(alpha, FiniteSet(full)).is_large);
  std::vector<Nat> shorter(full.begin(), full.end() - 1);
  CHECK_FALSE(is_alpha_large(alpha, FiniteSet(shorter)).is_large);
}

TEST_CASE("interval search respects its budget") {
  Budget tiny(3);
  CHECK_THROWS_AS(find_alpha_large_interval(
                      Ordinal::omega_pow(Ordinal::omega()), identity, 2, tiny),
                  budget_error);
}

TEST_CASE("hardy base cases") {
  Budget budget(1'000'000);
  CHECK(hardy(Ordinal(0), 9, budget) == 9);
  CHECK(hardy(Ordinal(3), 3, budget) == 6);
  CHECK(hardy(Ordinal::omega(), 3, budget) == 6);
}

TEST_CASE("hardy successor identity and growth on sampled ordinals") {
  // feasible samples below w^3: additive w-multiples plus a few w^2 cases
  std::vector<Ordinal> samples;
  for (Nat b = 0; b <= 3; ++b)
    for (Nat c = 0; c <= 3; ++c)
      samples.push_back(Ordinal::omega().times(b) + Ordinal(c));
  Ordinal w2 = Ordinal::omega_pow(Ordinal(2));
  samples.push_back(w2);
  samples.push_back(w2 + Ordinal(2));
  samples.push_back(w2 + Ordinal::omega() + Ordinal(1));

  for (const auto& alpha : samples) {
    for (Nat n = 0; n <= 5; ++n) {
      Budget budget(10'000'000);
      Nat lhs = hardy(alpha + Ordinal(1), n, budget);
      Budget budget2(10'000'000);
      Nat rhs = hardy(alpha, n + 1, budget2);
      CHECK(lhs == rhs);
      Budget budget3(10'000'000);
      CHECK(hardy(alpha, n, budget3) >= n);
    }
  }
}

TEST_CASE("hardy exhausts its budget on fast-growing cases") {
  Budget tiny(100);
  CHECK_THROWS_AS(
      hardy(Ordinal::omega_pow(Ordinal::omega()), 10, tiny), budget_error);
}
