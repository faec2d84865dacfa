#ifndef WPO_PARTITION_HPP
#define WPO_PARTITION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wpo/downset.hpp"
#include "wpo/errors.hpp"

namespace wpo {

/// A k-dimensional partition: strictly positive parts on a downward-closed
/// support in N^k, antitone along every coordinate (k=1 gives integer
/// partitions, k=2 plane partitions). k = 0 is excluded.
class Partition {
 public:
  static Partition empty(std::size_t dim);
  /// Validates all three invariants; throws domain_error on violation.
  Partition(std::size_t dim, std::map<Point, Nat> parts);

  std::size_t dim() const noexcept { return dim_; }
  const std::map<Point, Nat>& parts() const noexcept { return parts_; }
  /// v(N): sum of all parts.
  Nat value() const noexcept;
  bool is_empty() const noexcept { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::size_t dim_;
  std::map<Point, Nat> parts_;
};

/// Pointwise order: every part of n is <= the matching part of m, missing
/// entries of m read as 0.
bool leq_t(const Partition& n, const Partition& m);

/// The stacked-solid translation into N^{k+1}: one generator
/// (part-1, i_1, ..., i_k) per support index, height coordinate first.
GeneratorSet to_downset(const Partition& n);

/// Column heights of a downward-closed X in N^{k+1}: part at (i_1..i_k) is
/// max{n+1 : (n, i_1..i_k) in X}.
Partition from_downset(const DownSet& x);

/// All dim-dimensional partitions with value <= max_value, each once,
/// ordered by value then lexicographic part list.
std::vector<Partition> enumerate_partitions(std::size_t dim, Nat max_value,
                                            Budget& budget);

/// 1-dimensional text format "3+2"; the empty partition prints "0".
std::string to_string_1d(const Partition& p);
Partition parse_partition_1d(std::string_view text);

}  // namespace wpo

#endif
