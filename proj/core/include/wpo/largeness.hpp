#ifndef WPO_LARGENESS_HPP
#define WPO_LARGENESS_HPP

#include <functional>
#include <span>
#include <vector>

#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

/// A finite set of naturals kept strictly increasing.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<Nat> elements);
  static FiniteSet interval(Nat lo, Nat hi);  // {lo, ..., hi}, lo <= hi

  std::span<const Nat> elements() const noexcept { return elements_; }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::vector<Nat> elements_;
};

struct LargenessStep {
  Nat consumed;
  Ordinal after;
};

/// The descent alpha -> alpha[a_0] -> ... ; ordinals strictly decrease
/// until 0 and then stay 0 (the 0[n] = 0 convention applies here only).
struct LargenessTrace {
  std::vector<LargenessStep> steps;
};

struct LargenessResult {
  bool is_large = false;
  LargenessTrace trace;
};

/// A = {a_0 < ... < a_b} is alpha-large iff alpha[a_0]...[a_b] = 0.
/// pre: A nonempty.
LargenessResult is_alpha_large(const Ordinal& alpha, const FiniteSet& a);

/// Smallest b >= start with {f(start), ..., f(b)} alpha-large, found by the
/// descent alpha_{i+1} = alpha_i[f(start+i)]. f must be strictly increasing
/// on the probed range; alpha must be nonzero.
Nat find_alpha_large_interval(const Ordinal& alpha,
                              const std::function<Nat(Nat)>& f, Nat start,
                              Budget& budget);

/// Hardy hierarchy: H_0(n) = n, H_{a+1}(n) = H_a(n+1), H_l(n) = H_{l[n]}(n).
Nat hardy(const Ordinal& alpha, Nat n, Budget& budget);

}  // namespace wpo

#endif
