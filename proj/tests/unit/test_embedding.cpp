#include "wpo/embedding.hpp"

#include "doctest.h"
#include "support/test_pools.hpp"

using namespace wpo;

TEST_CASE("digit vectors read the CNF digits") {
  CHECK(ordinal_digits(parse_ordinal("w^2*3+1"), 2) == Point{{3, 0, 1}});
  CHECK(ordinal_digits(Ordinal(0), 1) == Point{{0, 0}});
  CHECK(ordinal_digits(Ordinal(5), 0) == Point{{5}});
  CHECK(ordinal_digits(parse_ordinal("w*2+1"), 3) == Point{{0, 0, 2, 1}});
  CHECK_THROWS_AS(ordinal_digits(parse_ordinal("w^3"), 2), domain_error);
  CHECK_THROWS_AS(ordinal_digits(parse_ordinal("w^(w)"), 4), domain_error);
}

TEST_CASE("embedding maps monomials to stacked points") {
  GeneratorSet g = embed_ordinal(parse_ordinal("w^2*2+w*3"), 0);
  CHECK(g.dim() == 3);
  CHECK(g == GeneratorSet(3, {Point{{0, 2, 2}}, Point{{1, 3, 1}}}));

  CHECK(embed_ordinal(Ordinal(0), 0) == GeneratorSet(3, {}));
  CHECK(embed_ordinal(Ordinal(7), 0) == GeneratorSet(3, {Point{{0, 7, 0}}}));
  CHECK_THROWS_AS(embed_ordinal(parse_ordinal("w^(w)"), 0), domain_error);
}

TEST_CASE("single reflection pairs") {
  CHECK(reflection_holds(Ordinal::omega().times(2), Ordinal::omega().times(3), 0));
  CHECK(reflection_holds(parse_ordinal("w^2"), parse_ordinal("w^2"), 0));
  // vacuous direction: w^2 does not embed below w
  CHECK_FALSE(leq_gen(embed_ordinal(parse_ordinal("w^2"), 0),
                      embed_ordinal(Ordinal::omega(), 0)));
  CHECK(reflection_holds(parse_ordinal("w^2"), Ordinal::omega(), 0));
}

TEST_CASE("digit vectors reflect order below w^3") {
  auto betas = enumerate_digit_ordinals(2, 4);
  CHECK(betas.size() == 125);
  for (const auto& b1 : betas)
    for (const auto& b2 : betas)
      if (leq_point(ordinal_digits(b1, 2), ordinal_digits(b2, 2)))
        CHECK(b1 <= b2);
}

TEST_CASE("embeddings are antichains over the pool") {
  Budget budget(1'000'000);
  for (unsigned k = 0; k <= 1; ++k) {
    auto pool = enumerate_cnf_pool(k, CnfPoolSpec{2, 2, 2}, budget);
    for (const auto& alpha : pool) {
      GeneratorSet g = embed_ordinal(alpha, k);
      CHECK(g.size() == alpha.monomials().size());
      for (const auto& p : g.generators())
        for (const auto& q : g.generators())
          if (p != q) CHECK_FALSE(leq_point(p, q));
    }
  }
}

TEST_CASE("reflection across the k=0 pool") {
  Budget budget(1'000'000);
  auto pool = enumerate_cnf_pool(0, CnfPoolSpec{3, 3, 3}, budget);
  std::vector<GeneratorSet> embedded;
  embedded.reserve(pool.size());
  for (const auto& alpha : pool) embedded.push_back(embed_ordinal(alpha, 0));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (leq_gen(embedded[i], embedded[j])) CHECK(pool[i] <= pool[j]);
}

TEST_CASE("descending ordinal chains embed to bad sequences") {
  std::vector<Ordinal> chain = {
      parse_ordinal("w^2*2+w"), parse_ordinal("w^2*2"), parse_ordinal("w^2+w*3"),
      parse_ordinal("w*9+5"),   parse_ordinal("w*9"),   Ordinal(17),
      Ordinal(3),               Ordinal(0)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    REQUIRE(chain[i] > chain[i + 1]);
  std::vector<GeneratorSet> embedded;
  for (const auto& alpha : chain) embedded.push_back(embed_ordinal(alpha, 1));
  CHECK(is_bad_sequence(embedded).is_bad);
}

TEST_CASE("cnf pool respects its budget") {
  Budget tiny(10);
  CHECK_THROWS_AS(enumerate_cnf_pool(1, CnfPoolSpec{3, 3, 3}, tiny),
                  budget_error);
}
