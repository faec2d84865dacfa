#include "wpo/ph.hpp"

#include "wpo/largeness.hpp"

#include "doctest.h"

using namespace wpo;

namespace {

Nat identity(Nat x) { return x; }

SetColoring parity_of_min(Nat lo, Nat hi) {
  return SetColoring::from_function(
      2, lo, hi, 2, [](std::span<const Nat> t) {
        return static_cast<unsigned>(t[0] % 2);
      });
}

}  // namespace

TEST_CASE("set coloring storage round-trips") {
  SetColoring c(2, 1, 4, 3);
  c.set(std::vector<Nat>{1, 3}, 2);
  c.set(std::vector<Nat>{2, 4}, 1);
  CHECK(c.at(std::vector<Nat>{1, 3}) == 2);
  CHECK(c.at(std::vector<Nat>{2, 4}) == 1);
  CHECK(c.at(std::vector<Nat>{1, 2}) == 0);
  CHECK_THROWS_AS(c.at(std::vector<Nat>{3, 2}), domain_error);
  CHECK_THROWS_AS(c.at(std::vector<Nat>{0, 2}), domain_error);
  CHECK_THROWS_AS(c.set(std::vector<Nat>{1, 2}, 3), domain_error);
}

TEST_CASE("homogeneity predicates") {
  SetColoring constant(2, 0, 4, 2);
  CHECK(is_homogeneous(constant, std::vector<Nat>{0, 2, 4}));
  CHECK(is_adjacent_homogeneous(constant, std::vector<Nat>{0, 1, 2, 3}));

  SetColoring parity = parity_of_min(0, 4);
  CHECK(is_homogeneous(parity, std::vector<Nat>{0, 2, 4}));
  CHECK_FALSE(is_homogeneous(parity, std::vector<Nat>{0, 1, 2}));
  CHECK_FALSE(is_adjacent_homogeneous(parity, std::vector<Nat>{0, 1, 2}));
  // vacuous sizes
  CHECK(is_homogeneous(parity, std::vector<Nat>{3}));
  CHECK(is_adjacent_homogeneous(parity, std::vector<Nat>{1, 2}));
  CHECK_THROWS_AS(is_homogeneous(parity, std::vector<Nat>{0, 9}),
                  domain_error);
}

TEST_CASE("witness search honours size conditions") {
  Budget budget(10'000'000);
  SetColoring one_color(2, 0, 2, 1);
  auto witness =
      find_ph_witness(one_color, identity, PhMode::homogeneous, 0, budget);
  REQUIRE(witness.has_value());
  CHECK(witness->elements == std::vector<Nat>{0, 1});

  SetColoring shifted(2, 1, 3, 2);  // all cells zero
  auto w2 = find_ph_witness(shifted, identity, PhMode::homogeneous, 0, budget);
  REQUIRE(w2.has_value());
  CHECK(w2->elements == std::vector<Nat>{1, 2});

  SetColoring tight(2, 2, 3, 2);
  CHECK_FALSE(find_ph_witness(tight, identity, PhMode::homogeneous, 0, budget)
                  .has_value());
}

TEST_CASE("witnesses replay through their predicates") {
  Budget budget(10'000'000);
  std::vector<SetColoring> pool;
  pool.push_back(parity_of_min(0, 5));
  pool.push_back(SetColoring::from_function(
      2, 0, 5, 3, [](std::span<const Nat> t) {
        return static_cast<unsigned>((t[0] + t[1]) % 3);
      }));
  pool.push_back(SetColoring::from_function(
      3, 0, 6, 2, [](std::span<const Nat> t) {
        return static_cast<unsigned>(t[2] > 4 ? 1 : 0);
      }));

  auto small = [](Nat) { return Nat(1); };
  for (const auto& c : pool) {
    for (PhMode mode :
         {PhMode::homogeneous, PhMode::adjacent, PhMode::adjacent_strong}) {
      auto witness = find_ph_witness(c, small, mode, 1, budget);
      if (!witness.has_value()) continue;
      const auto& h = witness->elements;
      if (mode == PhMode::homogeneous) {
        CHECK(h.size() >= c.arity());
        CHECK(h.size() > small(h.front()));
        CHECK(is_homogeneous(c, h));
      } else {
        CHECK(h.size() >= c.arity() + 1);
        CHECK(is_adjacent_homogeneous(c, h));
        if (mode == PhMode::adjacent_strong)
          CHECK(h.size() > small(h[1]));
        else
          CHECK(h.size() > small(h.front()));
      }
    }
  }
}

TEST_CASE("witness search respects its budget") {
  Budget tiny(5);
  SetColoring parity = parity_of_min(0, 9);
  auto needs_four = [](Nat) { return Nat(3); };
  CHECK_THROWS_AS(
      find_ph_witness(parity, needs_four, PhMode::homogeneous, 0, tiny),
      budget_error);
}

TEST_CASE("z-prefix search certifies the relativized bit") {
  Budget budget(10'000'000);
  SetColoring constant(2, 0, 5, 1);
  auto z = find_z_prefix(constant, 1, std::vector<Nat>{2, 4}, budget);
  REQUIRE(z.has_value());
  CHECK(*z == std::vector<Nat>{0});
  // no room below the interval floor
  CHECK_FALSE(find_z_prefix(constant, 1, std::vector<Nat>{0, 1}, budget)
                  .has_value());
  CHECK_FALSE(find_z_prefix(constant, 3, std::vector<Nat>{2, 4}, budget)
                  .has_value());
}

TEST_CASE("relativized coloring doubles colors and encodes the bit") {
  Budget budget(10'000'000);
  SetColoring constant(2, 0, 4, 1);
  SetColoring lifted = build_relativized(constant, 1, budget);
  CHECK(lifted.colors() == 2);
  // tuples starting at the interval floor carry bit 0, the rest bit 1
  CHECK(lifted.at(std::vector<Nat>{0, 1}) == 0);
  CHECK(lifted.at(std::vector<Nat>{0, 4}) == 0);
  CHECK(lifted.at(std::vector<Nat>{1, 2}) == 1);
  CHECK(lifted.at(std::vector<Nat>{3, 4}) == 1);
}

TEST_CASE("relativized witnesses replay to adjacent-homogeneous supersets") {
  Budget budget(10'000'000);
  SetColoring parity = parity_of_min(0, 7);
  const Nat k = 1;
  SetColoring lifted = build_relativized(parity, k, budget);
  auto witness = find_ph_witness(lifted, [](Nat) { return Nat(2); },
                                 PhMode::adjacent, 0, budget);
  REQUIRE(witness.has_value());
  const auto& h = witness->elements;
  REQUIRE(is_adjacent_homogeneous(lifted, h));
  // the first window's bit must be 1 for the replay to extend downwards
  std::vector<Nat> first_window(h.begin(), h.begin() + parity.arity());
  REQUIRE(lifted.at(first_window) % 2 == 1);
  auto z = find_z_prefix(parity, k, first_window, budget);
  REQUIRE(z.has_value());
  std::vector<Nat> combined = *z;
  combined.insert(combined.end(), h.begin(), h.end());
  CHECK(is_adjacent_homogeneous(parity, combined));
}

TEST_CASE("descent coloring distinguishes ascent from least descent") {
  // d=0, r=1, C = [1, 0]
  Coloring c = Coloring::from_function(0, 1, 1, [](std::span<const Nat> t) {
    return std::vector<Nat>{t[0] == 0 ? Nat(1) : Nat(0)};
  });
  SetColoring d0 = build_descent(c, 0);
  CHECK(d0.arity() == 2);
  CHECK(d0.colors() == 2);
  CHECK(d0.at(std::vector<Nat>{0, 1}) == 1);

  // d=0, r=2: first component ascends, second descends
  Coloring c2 = Coloring::from_function(0, 2, 1, [](std::span<const Nat> t) {
    return t[0] == 0 ? std::vector<Nat>{0, 1} : std::vector<Nat>{1, 0};
  });
  SetColoring d2 = build_descent(c2, 0);
  CHECK(d2.colors() == 3);
  CHECK(d2.at(std::vector<Nat>{0, 1}) == 2);

  Coloring constant(1, 2, 3);
  SetColoring d3 = build_descent(constant, 2);
  CHECK(d3.lo() == 2);
  CHECK(d3.hi() == 5);
  CHECK(d3.at(std::vector<Nat>{2, 3, 4}) == 0);
  CHECK(d3.at(std::vector<Nat>{3, 4, 5}) == 0);
}

TEST_CASE("all-zero descent blocks replay as ascent chains") {
  // an f-limited coloring whose descent coloring is identically zero
  Coloring c = Coloring::from_function(0, 1, 4, [](std::span<const Nat> t) {
    return std::vector<Nat>{t[0] / 2};
  });
  const Nat a = 1;
  SetColoring d = build_descent(c, a);
  std::vector<Nat> h = {1, 2, 3, 4, 5};
  REQUIRE(is_adjacent_homogeneous(d, h));
  REQUIRE(d.at(std::vector<Nat>{h[0], h[1]}) == 0);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    std::vector<Nat> left{h[i] - a};
    std::vector<Nat> right{h[i + 1] - a};
    auto u = c.at(left);
    auto v = c.at(right);
    for (std::size_t t = 0; t < u.size(); ++t) CHECK(u[t] <= v[t]);
  }
}

TEST_CASE("homogeneous search over an alpha-large interval") {
  // desk-scale version of the largeness-to-homogeneity pipeline: take an
  // alpha-large interval and search it for a homogeneous set bigger than
  // its least element
  Budget budget(10'000'000);
  Ordinal alpha = Ordinal::omega().times(2);
  Nat start = 3;
  Nat end = find_alpha_large_interval(alpha, [](Nat x) { return x; }, start,
                                      budget);
  REQUIRE(end == 14);

  SetColoring parity = SetColoring::from_function(
      2, start, end, 2, [](std::span<const Nat> t) {
        return static_cast<unsigned>((t[0] + t[1]) % 2);
      });
  auto witness = find_ph_witness(parity, [](Nat x) { return x; },
                                 PhMode::homogeneous, 0, budget);
  REQUIRE(witness.has_value());
  CHECK(is_homogeneous(parity, witness->elements));
  CHECK(witness->elements.size() > witness->elements.front());
}

TEST_CASE("derived growth dominates the table and is monotone") {
  Coloring squares = Coloring::from_function(0, 1, 3, [](std::span<const Nat> t) {
    return std::vector<Nat>{t[0] * t[0]};
  });
  auto growth = derive_growth(squares);
  REQUIRE(growth.size() == 4);
  CHECK(growth[2] == 4);
  CHECK(growth[3] == 9);
  for (std::size_t x = 1; x < growth.size(); ++x)
    CHECK(growth[x - 1] <= growth[x]);
  CHECK(is_f_limited(squares, [&](Nat x) { return growth[x]; }));

  Coloring constant = Coloring::from_function(1, 1, 2, [](std::span<const Nat>) {
    return std::vector<Nat>{3};
  });
  auto flat = derive_growth(constant);
  for (Nat value : flat) CHECK(value == 3);
}
