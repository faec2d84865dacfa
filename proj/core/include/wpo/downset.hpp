#ifndef WPO_DOWNSET_HPP
#define WPO_DOWNSET_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

/// A tuple in N^k, compared coordinatewise for domination and
/// lexicographically for canonical ordering.
struct Point {
  std::vector<Nat> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  auto operator<=>(const Point&) const = default;
};

/// true iff p <= q in every coordinate; dimensions must match.
bool leq_point(const Point& p, const Point& q);

/// A finite antichain of points generating a downward-closed set. The
/// constructor canonicalizes: dominated and duplicate generators are
/// dropped and the rest sorted lexicographically, so equal downsets have
/// equal generator sets.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t dim, std::vector<Point> generators);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Point> generators() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  std::size_t size() const noexcept { return gens_.size(); }

  auto operator<=>(const GeneratorSet&) const = default;

 private:
  std::size_t dim_;
  std::vector<Point> gens_;
};

/// An explicitly listed finite downward-closed subset of N^k; points kept
/// lexicographically sorted.
class DownSet {
 public:
  /// Validates downward closure (throws domain_error otherwise).
  static DownSet from_points(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const Point& p) const;
  /// true iff every point of *this is a point of other.
  bool subset_of(const DownSet& other) const;
  /// The maximal points; generate(maxima()) reproduces *this.
  GeneratorSet maxima() const;

  auto operator<=>(const DownSet&) const = default;

 private:
  DownSet(std::size_t dim, std::vector<Point> sorted);

  std::size_t dim_;
  std::vector<Point> points_;
};

/// The downward-closed set generated by G: all points dominated by some
/// generator.
DownSet generate(const GeneratorSet& g);

/// G <= H iff generate(G) is a subset of generate(H); decided through the
/// generator criterion, not by materializing either downset.
bool leq_gen(const GeneratorSet& g, const GeneratorSet& h);

/// When G is not <= H, the lex-least generator of G dominated by no
/// generator of H; nullopt when G <= H.
std::optional<Point> not_leq_witness(const GeneratorSet& g,
                                     const GeneratorSet& h);

struct BadnessResult {
  bool is_bad = false;
  /// Least (i, j) with seq[i] <= seq[j] when not bad.
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

/// A sequence is bad when no earlier element is <= a later one.
BadnessResult is_bad_sequence(std::span<const GeneratorSet> seq);

/// All downward-closed subsets of {0..bound}^dim, each exactly once,
/// ordered by size then lexicographic point list.
std::vector<DownSet> enumerate_downsets(std::size_t dim, Nat bound,
                                        Budget& budget);

/// Text format "[(2,0),(0,2)]". An empty set "[]" needs the ambient
/// dimension passed explicitly.
GeneratorSet parse_generator_set(std::string_view text,
                                 std::optional<std::size_t> dim = {});
std::string to_string(const GeneratorSet& g);
std::string to_string(const Point& p);

}  // namespace wpo

#endif
