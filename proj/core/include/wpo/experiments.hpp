#ifndef WPO_EXPERIMENTS_HPP
#define WPO_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wpo/downset.hpp"
#include "wpo/embedding.hpp"
#include "wpo/errors.hpp"
#include "wpo/growth.hpp"
#include "wpo/partition.hpp"

namespace wpo {

/// Longest-bad-sequence searches are exhaustive depth-first, candidates in
/// each module's deterministic enumeration order, so repeated runs produce
/// identical witnesses. `exhausted` is true only when the whole search
/// tree was traversed within budget.
struct PartitionSearchResult {
  std::vector<Partition> witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

struct DownsetSearchResult {
  std::vector<GeneratorSet> witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Longest sequence of k-dimensional partitions with value(N_i) <=
/// growth(l+i) and no i < j with N_i <=_t N_j. The empty partition is a
/// legal candidate.
PartitionSearchResult search_longest_bad_partitions(std::size_t k, Nat l,
                                                    const GrowthFn& growth,
                                                    std::uint64_t budget);

/// Downset analogue: candidates are the nonempty downward-closed subsets
/// of {0..growth(l+i)}^k, compared through their generator antichains.
DownsetSearchResult search_longest_bad_downsets(std::size_t k, Nat l,
                                                const GrowthFn& growth,
                                                std::uint64_t budget);

/// Batch check of the two embedding properties over an enumerated pool:
/// digit vectors reflect order, and generator-set domination of embeddings
/// reflects ordinal order (with every embedding an antichain).
struct SweepReport {
  std::uint64_t pool_size = 0;
  std::uint64_t exponent_pool_size = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t reflection_violations = 0;
  std::uint64_t antichain_failures = 0;
  std::uint64_t digit_pairs_checked = 0;
  std::uint64_t digit_violations = 0;
};

SweepReport embedding_sweep(unsigned k, const CnfPoolSpec& pool,
                            Budget& budget);

/// One appendable result row; the witness replays through is_bad_sequence
/// (or leq_t) and the growth bound, with length == witness size.
struct ExperimentRecord {
  std::string experiment;
  std::size_t k = 0;
  Nat l = 0;
  std::string growth = "id";
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::variant<std::monostate, std::vector<Partition>,
               std::vector<GeneratorSet>>
      witness;
};

ExperimentRecord run_bad_partitions(std::size_t k, Nat l,
                                    const GrowthFn& growth,
                                    std::uint64_t budget);
ExperimentRecord run_bad_downsets(std::size_t k, Nat l,
                                  const GrowthFn& growth,
                                  std::uint64_t budget);

}  // namespace wpo

#endif
