#include "wpo/experiments.hpp"

#include <algorithm>

#include "doctest.h"

using namespace wpo;

namespace {

const GrowthFn kId = parse_growth("id");

// Independent oracle: enumerate every sequence, re-verifying badness of the
// whole prefix from scratch at each extension.
std::size_t brute_longest_bad_partitions(std::size_t k, Nat l) {
  Budget pool_budget(10'000'000);
  std::vector<Partition> seq;
  std::size_t best = 0;
  auto all_bad = [&]() {
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        if (leq_t(seq[i], seq[j])) return false;
    return true;
  };
  auto recurse = [&](auto&& self) -> void {
    best = std::max(best, seq.size());
    Budget b(10'000'000);
    for (const auto& candidate : enumerate_partitions(k, l + seq.size(), b)) {
      seq.push_back(candidate);
      if (all_bad()) self(self);
      seq.pop_back();
    }
  };
  recurse(recurse);
  return best;
}

}  // namespace

TEST_CASE("growth functions parse and evaluate") {
  CHECK(parse_growth("id").fn(7) == 7);
  CHECK(parse_growth("succ").fn(7) == 8);
  CHECK(parse_growth("const:3").fn(7) == 3);
  CHECK(parse_growth("plus:2").fn(7) == 9);
  CHECK(parse_growth("times:2").fn(7) == 14);
  CHECK_THROWS_AS(parse_growth("cubed"), domain_error);
  CHECK_THROWS_AS(parse_growth("const:x"), domain_error);
}

TEST_CASE("partition searches at the smallest scales") {
  auto r0 = search_longest_bad_partitions(1, 0, kId, 1'000'000);
  CHECK(r0.exhausted);
  CHECK(r0.witness.size() == 1);
  CHECK(r0.witness[0].is_empty());

  auto r1 = search_longest_bad_partitions(1, 1, kId, 10'000'000);
  CHECK(r1.exhausted);
  CHECK(r1.witness.size() == brute_longest_bad_partitions(1, 1));

  auto r2 = search_longest_bad_partitions(1, 2, kId, 100'000'000);
  CHECK(r2.exhausted);
  CHECK(r2.witness.size() == brute_longest_bad_partitions(1, 2));
}

TEST_CASE("partition witnesses replay") {
  for (Nat l = 0; l <= 2; ++l) {
    auto result = search_longest_bad_partitions(1, l, kId, 100'000'000);
    REQUIRE(result.exhausted);
    const auto& w = result.witness;
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i].value() <= l + i);
      for (std::size_t j = i + 1; j < w.size(); ++j)
        CHECK_FALSE(leq_t(w[i], w[j]));
    }
  }
}

TEST_CASE("partition search length is monotone in l") {
  std::size_t previous = 0;
  for (Nat l = 0; l <= 2; ++l) {
    auto result = search_longest_bad_partitions(1, l, kId, 100'000'000);
    REQUIRE(result.exhausted);
    CHECK(result.witness.size() >= previous);
    previous = result.witness.size();
  }
}

TEST_CASE("downset searches match the closed form in dimension 1") {
  for (Nat l = 0; l <= 6; ++l) {
    auto result = search_longest_bad_downsets(1, l, kId, 10'000'000);
    REQUIRE(result.exhausted);
    CHECK(result.witness.size() == l + 1);
    // witness is the strictly descending chain of singletons from l
    for (std::size_t i = 0; i < result.witness.size(); ++i) {
      REQUIRE(result.witness[i].size() == 1);
      CHECK(result.witness[i].generators()[0].coords[0] == l - i);
    }
  }
}

TEST_CASE("downset witnesses replay with the coordinate bound") {
  auto result = search_longest_bad_downsets(2, 1, kId, 1'000'000);
  const auto& w = result.witness;
  CHECK(is_bad_sequence(w).is_bad);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& p : w[i].generators())
      for (Nat coordinate : p.coords) CHECK(coordinate <= 1 + i);
}

TEST_CASE("searches are deterministic across runs") {
  auto a = search_longest_bad_partitions(1, 2, kId, 100'000'000);
  auto b = search_longest_bad_partitions(1, 2, kId, 100'000'000);
  CHECK(a.witness == b.witness);
  CHECK(a.exhausted == b.exhausted);
  CHECK(a.nodes == b.nodes);

  auto c = search_longest_bad_downsets(1, 4, kId, 10'000'000);
  auto d = search_longest_bad_downsets(1, 4, kId, 10'000'000);
  CHECK(c.witness == d.witness);
  CHECK(c.nodes == d.nodes);
}

TEST_CASE("zero budget reports exhaustion honestly") {
  auto result = search_longest_bad_partitions(1, 1, kId, 0);
  CHECK_FALSE(result.exhausted);
  auto downsets = search_longest_bad_downsets(1, 1, kId, 0);
  CHECK_FALSE(downsets.exhausted);
}

TEST_CASE("records carry the search outcome") {
  ExperimentRecord record = run_bad_downsets(1, 3, kId, 10'000'000);
  CHECK(record.experiment == "bad-downsets");
  CHECK(record.k == 1);
  CHECK(record.l == 3);
  CHECK(record.length == 4);
  CHECK(record.exhausted);
  CHECK(std::holds_alternative<std::vector<GeneratorSet>>(record.witness));
  CHECK(record.wall_ms >= 0.0);
}

TEST_CASE("embedding sweep reports zero violations") {
  Budget budget(100'000'000);
  SweepReport report = embedding_sweep(0, CnfPoolSpec{2, 2, 2}, budget);
  CHECK(report.pool_size > 1);
  CHECK(report.pairs_checked == report.pool_size * report.pool_size);
  CHECK(report.reflection_violations == 0);
  CHECK(report.antichain_failures == 0);
  CHECK(report.digit_violations == 0);
}

TEST_CASE("embedding sweep on the degenerate pool") {
  Budget budget(1'000'000);
  SweepReport report = embedding_sweep(0, CnfPoolSpec{0, 0, 1}, budget);
  CHECK(report.pool_size == 1);  // just zero
  CHECK(report.pairs_checked == 1);
  CHECK(report.reflection_violations == 0);
}
