#ifndef WPO_PH_HPP
#define WPO_PH_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wpo/adjacent_ramsey.hpp"
#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

/// A coloring of increasing arity-tuples from the interval [lo, hi] with
/// colors {0..colors-1}; stored flat via combinatorial ranking.
class SetColoring {
 public:
  SetColoring(unsigned arity, Nat lo, Nat hi, unsigned colors);
  static SetColoring from_function(
      unsigned arity, Nat lo, Nat hi, unsigned colors,
      const std::function<unsigned(std::span<const Nat>)>& fn);

  unsigned arity() const noexcept { return arity_; }
  Nat lo() const noexcept { return lo_; }
  Nat hi() const noexcept { return hi_; }
  unsigned colors() const noexcept { return colors_; }
  /// Number of points in the interval.
  Nat universe_size() const noexcept { return hi_ - lo_ + 1; }

  unsigned at(std::span<const Nat> tuple) const;
  void set(std::span<const Nat> tuple, unsigned color);

  bool operator==(const SetColoring&) const = default;

 private:
  std::size_t rank_of(std::span<const Nat> tuple) const;

  unsigned arity_;
  Nat lo_;
  Nat hi_;
  unsigned colors_;
  std::vector<unsigned> table_;
};

/// C constant on all arity-subsets of H (vacuously true for |H| < arity).
/// H must be strictly increasing and within [lo, hi].
bool is_homogeneous(const SetColoring& c, std::span<const Nat> h);

/// Consecutive windows get equal colors:
/// C(h_i..h_{i+arity-1}) = C(h_{i+1}..h_{i+arity}) for every window pair;
/// vacuously true for |H| <= arity.
bool is_adjacent_homogeneous(const SetColoring& c, std::span<const Nat> h);

enum class PhMode { homogeneous, adjacent, adjacent_strong };

struct HomogeneousWitness {
  std::vector<Nat> elements;
  PhMode mode = PhMode::homogeneous;
};

/// Least witness in (size, lex) order with the mode's size condition:
/// homogeneous/adjacent need |H| > f(min H), adjacent_strong needs
/// |H| > f(h_k). Vacuous sets are excluded: homogeneous witnesses need
/// |H| >= arity, adjacent ones |H| >= arity + 1.
std::optional<HomogeneousWitness> find_ph_witness(
    const SetColoring& c, const std::function<Nat(Nat)>& f, PhMode mode,
    Nat k, Budget& budget);

/// The z-prefix certifying the relativized bit at one tuple: the least
/// z_0 < ... < z_{k-1} in [lo, tuple_0 - 1] making z ++ tuple
/// adjacent-homogeneous for c; nullopt when none exists.
std::optional<std::vector<Nat>> find_z_prefix(const SetColoring& c, Nat k,
                                              std::span<const Nat> tuple,
                                              Budget& budget);

/// Doubles the color space: new color = 2*C(tuple) + relativized bit.
SetColoring build_relativized(const SetColoring& c, Nat k, Budget& budget);

/// The descent coloring of an arity-(d+1) vector coloring: on each
/// increasing (d+2)-tuple of [a, a + bound], color 0 when the two shifted
/// windows ascend in C, otherwise 1 + least strictly descending component.
SetColoring build_descent(const Coloring& c, Nat a);

/// f(x) = max over {0..x}^{d+1} of the max component of C; C is f-limited
/// for this f by construction. Entry x of the result is f(x).
std::vector<Nat> derive_growth(const Coloring& c);

}  // namespace wpo

#endif
