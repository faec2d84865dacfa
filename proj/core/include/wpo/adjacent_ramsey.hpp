#ifndef WPO_ADJACENT_RAMSEY_HPP
#define WPO_ADJACENT_RAMSEY_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wpo/downset.hpp"
#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

/// A total coloring C : {0..R}^{d+1} -> N^r stored as a flat table.
class Coloring {
 public:
  /// Zero-filled table.
  Coloring(unsigned d, unsigned r, Nat bound);
  static Coloring from_function(
      unsigned d, unsigned r, Nat bound,
      const std::function<std::vector<Nat>(std::span<const Nat>)>& fn);

  unsigned d() const noexcept { return d_; }
  unsigned arity() const noexcept { return d_ + 1; }
  unsigned width() const noexcept { return r_; }
  Nat bound() const noexcept { return bound_; }

  std::span<const Nat> at(std::span<const Nat> tuple) const;
  void set(std::span<const Nat> tuple, std::span<const Nat> value);

  bool operator==(const Coloring&) const = default;

 private:
  std::size_t index_of(std::span<const Nat> tuple) const;

  unsigned d_;
  unsigned r_;
  Nat bound_;
  std::vector<Nat> table_;
};

/// x_1 < ... < x_{d+2} with C(x_1..x_{d+1}) <= C(x_2..x_{d+2})
/// coordinatewise.
struct AscentWitness {
  std::vector<Nat> xs;
};

/// Every table entry's max component is <= f(max argument).
bool is_f_limited(const Coloring& c, const std::function<Nat(Nat)>& f);

/// Lexicographically least ascent witness in the box, if any.
std::optional<AscentWitness> find_adjacent_ascent(const Coloring& c);

/// The reduction behind "bad sequence -> ascent-free coloring": for i < j,
/// C(i, j) is the first generator of seq[i] dominated by no generator of
/// seq[j]; cells with i >= j are zero-filled and never examined by the
/// ascent search. pre: seq nonempty and bad.
Coloring badseq_to_coloring(std::span<const GeneratorSet> seq);

/// An f-limited coloring of {0..bound}^{d+1} without any ascent witness,
/// if one exists (colors at non-increasing tuples are left zero).
std::optional<Coloring> find_no_ascent_coloring(
    unsigned d, unsigned r, const std::function<Nat(Nat)>& f, Nat bound,
    Budget& budget);

/// Least R <= r_cap such that every f-limited coloring of {0..R}^{d+1}
/// admits an ascent witness; nullopt when none below the cap.
std::optional<Nat> find_min_R(unsigned d, unsigned r,
                              const std::function<Nat(Nat)>& f, Nat r_cap,
                              Budget& budget);

}  // namespace wpo

#endif
