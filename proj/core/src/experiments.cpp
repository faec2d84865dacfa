#include "wpo/experiments.hpp"

#include <chrono>
#include <map>

namespace wpo {

namespace {

// Shared skeleton for both longest-bad searches. Candidate pools are
// memoized per bound; the first sequence reaching a new length is kept, so
// the reported witness is the least one in candidate-enumeration order.
template <typename Element>
class LongestBadSearch {
 public:
  LongestBadSearch(Nat l, const GrowthFn& growth, std::uint64_t budget)
      : budget_(budget), l_(l), growth_(growth) {}

  virtual ~LongestBadSearch() = default;

  void run() {
    try {
      extend();
      exhausted_ = true;
    } catch (const budget_error&) {
      exhausted_ = false;
    }
  }

  const std::vector<Element>& best() const { return best_; }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return budget_.used(); }

 protected:
  virtual const std::vector<Element>& pool(Nat bound) = 0;
  virtual bool dominates(const Element& earlier, const Element& later) = 0;

  Budget budget_;

 private:
  void extend() {
    if (seq_.size() > best_.size()) best_ = seq_;
    const Nat bound = growth_.fn(l_ + seq_.size());
    for (const Element& candidate : pool(bound)) {
      budget_.charge();
      bool bad = true;
      for (const Element& earlier : seq_)
        if (dominates(earlier, candidate)) {
          bad = false;
          break;
        }
      if (!bad) continue;
      seq_.push_back(candidate);
      extend();
      seq_.pop_back();
    }
  }

  Nat l_;
  const GrowthFn& growth_;
  std::vector<Element> seq_;
  std::vector<Element> best_;
  bool exhausted_ = false;
};

class PartitionSearch final : public LongestBadSearch<Partition> {
 public:
  PartitionSearch(std::size_t k, Nat l, const GrowthFn& growth,
                  std::uint64_t budget)
      : LongestBadSearch(l, growth, budget), k_(k) {}

 protected:
  const std::vector<Partition>& pool(Nat bound) override {
    auto it = pools_.find(bound);
    if (it == pools_.end())
      it = pools_.emplace(bound, enumerate_partitions(k_, bound, budget_))
               .first;
    return it->second;
  }

  bool dominates(const Partition& earlier, const Partition& later) override {
    return leq_t(earlier, later);
  }

 private:
  std::size_t k_;
  std::map<Nat, std::vector<Partition>> pools_;
};

class DownsetSearch final : public LongestBadSearch<GeneratorSet> {
 public:
  DownsetSearch(std::size_t k, Nat l, const GrowthFn& growth,
                std::uint64_t budget)
      : LongestBadSearch(l, growth, budget), k_(k) {}

 protected:
  const std::vector<GeneratorSet>& pool(Nat bound) override {
    auto it = pools_.find(bound);
    if (it == pools_.end()) {
      std::vector<GeneratorSet> sets;
      for (const DownSet& ds : enumerate_downsets(k_, bound, budget_))
        if (ds.size() > 0) sets.push_back(ds.maxima());
      it = pools_.emplace(bound, std::move(sets)).first;
    }
    return it->second;
  }

  bool dominates(const GeneratorSet& earlier,
                 const GeneratorSet& later) override {
    return leq_gen(earlier, later);
  }

 private:
  std::size_t k_;
  std::map<Nat, std::vector<GeneratorSet>> pools_;
};

}  // namespace

PartitionSearchResult search_longest_bad_partitions(std::size_t k, Nat l,
                                                    const GrowthFn& growth,
                                                    std::uint64_t budget) {
  if (k == 0) throw domain_error("dimension must be >= 1");
  PartitionSearch search(k, l, growth, budget);
  search.run();
  return PartitionSearchResult{search.best(), search.exhausted(),
                               search.nodes()};
}

DownsetSearchResult search_longest_bad_downsets(std::size_t k, Nat l,
                                                const GrowthFn& growth,
                                                std::uint64_t budget) {
  if (k == 0) throw domain_error("dimension must be >= 1");
  DownsetSearch search(k, l, growth, budget);
  search.run();
  return DownsetSearchResult{search.best(), search.exhausted(),
                             search.nodes()};
}

SweepReport embedding_sweep(unsigned k, const CnfPoolSpec& pool,
                            Budget& budget) {
  SweepReport report;

  std::vector<Ordinal> digit_pool = enumerate_digit_ordinals(k, pool.max_digit);
  report.exponent_pool_size = digit_pool.size();
  std::vector<Point> digits;
  digits.reserve(digit_pool.size());
  for (const Ordinal& beta : digit_pool)
    digits.push_back(ordinal_digits(beta, k));
  for (std::size_t i = 0; i < digit_pool.size(); ++i)
    for (std::size_t j = 0; j < digit_pool.size(); ++j) {
      budget.charge();
      ++report.digit_pairs_checked;
      if (leq_point(digits[i], digits[j]) && digit_pool[i] > digit_pool[j])
        ++report.digit_violations;
    }

  std::vector<Ordinal> ordinals = enumerate_cnf_pool(k, pool, budget);
  report.pool_size = ordinals.size();
  std::vector<GeneratorSet> embeddings;
  embeddings.reserve(ordinals.size());
  for (const Ordinal& alpha : ordinals) {
    GeneratorSet g = embed_ordinal(alpha, k);
    if (g.size() != alpha.monomials().size()) ++report.antichain_failures;
    embeddings.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < ordinals.size(); ++i)
    for (std::size_t j = 0; j < ordinals.size(); ++j) {
      budget.charge();
      ++report.pairs_checked;
      if (leq_gen(embeddings[i], embeddings[j]) && ordinals[i] > ordinals[j])
        ++report.reflection_violations;
    }
  return report;
}

namespace {

template <typename Result>
ExperimentRecord make_record(std::string name, std::size_t k, Nat l,
                             const GrowthFn& growth, std::uint64_t budget,
                             Result (*search)(std::size_t, Nat,
                                              const GrowthFn&,
                                              std::uint64_t)) {
  ExperimentRecord record;
  record.experiment = std::move(name);
  record.k = k;
  record.l = l;
  record.growth = growth.name;
  record.budget = budget;
  auto start = std::chrono::steady_clock::now();
  Result result = search(k, l, growth, budget);
  auto stop = std::chrono::steady_clock::now();
  record.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  record.length = result.witness.size();
  record.exhausted = result.exhausted;
  record.nodes = result.nodes;
  record.witness = std::move(result.witness);
  return record;
}

}  // namespace

ExperimentRecord run_bad_partitions(std::size_t k, Nat l,
                                    const GrowthFn& growth,
                                    std::uint64_t budget) {
  return make_record("bad-partitions", k, l, growth, budget,
                     &search_longest_bad_partitions);
}

ExperimentRecord run_bad_downsets(std::size_t k, Nat l,
                                  const GrowthFn& growth,
                                  std::uint64_t budget) {
  return make_record("bad-downsets", k, l, growth, budget,
                     &search_longest_bad_downsets);
}

}  // namespace wpo
