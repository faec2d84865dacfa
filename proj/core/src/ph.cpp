#include "wpo/ph.hpp"

#include <algorithm>

namespace wpo {

namespace {

// C(n, k) table large enough for desk-scale universes
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

SetColoring::SetColoring(unsigned arity, Nat lo, Nat hi, unsigned colors)
    : arity_(arity), lo_(lo), hi_(hi), colors_(colors) {
  if (arity == 0) throw domain_error("arity must be >= 1");
  if (colors == 0) throw domain_error("color count must be >= 1");
  if (lo > hi) throw domain_error("empty interval");
  table_.assign(binomial(universe_size(), arity), 0);
}

SetColoring SetColoring::from_function(
    unsigned arity, Nat lo, Nat hi, unsigned colors,
    const std::function<unsigned(std::span<const Nat>)>& fn) {
  SetColoring c(arity, lo, hi, colors);
  if (c.universe_size() < arity) return c;
  std::vector<Nat> tuple(arity);
  for (unsigned i = 0; i < arity; ++i) tuple[i] = lo + i;
  while (true) {
    c.set(tuple, fn(tuple));
    std::size_t i = arity;
    while (i-- > 0) {
      if (tuple[i] < hi - (arity - 1 - i)) {
        ++tuple[i];
        for (std::size_t j = i + 1; j < arity; ++j) tuple[j] = tuple[j - 1] + 1;
        break;
      }
      if (i == 0) return c;
    }
  }
}

std::size_t SetColoring::rank_of(std::span<const Nat> tuple) const {
  if (tuple.size() != arity_) throw domain_error("tuple arity mismatch");
  std::size_t rank = 0;
  Nat previous = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < lo_ || tuple[i] > hi_)
      throw domain_error("tuple element out of the interval");
    if (i > 0 && tuple[i] <= previous)
      throw domain_error("tuple must be strictly increasing");
    previous = tuple[i];
    rank += binomial(tuple[i] - lo_, i + 1);  // colex rank
  }
  return rank;
}

unsigned SetColoring::at(std::span<const Nat> tuple) const {
  return table_[rank_of(tuple)];
}

void SetColoring::set(std::span<const Nat> tuple, unsigned color) {
  if (color >= colors_) throw domain_error("color out of range");
  table_[rank_of(tuple)] = color;
}

namespace {

void validate_subset(const SetColoring& c, std::span<const Nat> h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < c.lo() || h[i] > c.hi())
      throw domain_error("H is not within the coloring interval");
    if (i > 0 && h[i] <= h[i - 1])
      throw domain_error("H must be strictly increasing");
  }
}

// all arity-subsets of h share one color
bool constant_on_subsets(const SetColoring& c, std::span<const Nat> h) {
  const unsigned e = c.arity();
  if (h.size() < e) return true;
  std::vector<std::size_t> idx(e);
  for (unsigned i = 0; i < e; ++i) idx[i] = i;
  std::vector<Nat> tuple(e);
  std::optional<unsigned> color;
  while (true) {
    for (unsigned i = 0; i < e; ++i) tuple[i] = h[idx[i]];
    unsigned value = c.at(tuple);
    if (!color) color = value;
    else if (*color != value) return false;
    std::size_t i = e;
    bool advanced = false;
    while (i-- > 0) {
      if (idx[i] < h.size() - (e - i)) {
        ++idx[i];
        for (std::size_t j = i + 1; j < e; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

}  // namespace

bool is_homogeneous(const SetColoring& c, std::span<const Nat> h) {
  validate_subset(c, h);
  return constant_on_subsets(c, h);
}

bool is_adjacent_homogeneous(const SetColoring& c, std::span<const Nat> h) {
  validate_subset(c, h);
  const unsigned e = c.arity();
  if (h.size() <= e) return true;
  for (std::size_t i = 0; i + e < h.size(); ++i)
    if (c.at(h.subspan(i, e)) != c.at(h.subspan(i + 1, e))) return false;
  return true;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const SetColoring& c, const std::function<Nat(Nat)>& f,
                PhMode mode, Nat k, Budget& budget)
      : c_(c), f_(f), mode_(mode), k_(k), budget_(budget) {}

  std::optional<HomogeneousWitness> run() {
    Nat min_size = mode_ == PhMode::homogeneous ? c_.arity() : c_.arity() + 1;
    if (mode_ == PhMode::adjacent_strong) min_size = std::max(min_size, k_ + 1);
    for (Nat size = min_size; size <= c_.universe_size(); ++size) {
      target_ = size;
      prefix_.clear();
      if (extend()) return HomogeneousWitness{prefix_, mode_};
    }
    return std::nullopt;
  }

 private:
  // incremental consistency of the newest element
  bool prefix_ok() const {
    const unsigned e = c_.arity();
    std::span<const Nat> h(prefix_);
    if (mode_ == PhMode::homogeneous) {
      if (h.size() < e) return true;
      // compare every new e-subset (those containing the new element)
      // against the color of the first complete one
      std::vector<Nat> first(h.begin(), h.begin() + e);
      unsigned reference = c_.at(first);
      std::vector<std::size_t> idx(e - 1);
      for (unsigned i = 0; i + 1 < e; ++i) idx[i] = i;
      std::vector<Nat> tuple(e);
      tuple[e - 1] = h.back();
      while (true) {
        for (unsigned i = 0; i + 1 < e; ++i) tuple[i] = h[idx[i]];
        if (c_.at(tuple) != reference) return false;
        std::size_t i = idx.size();
        bool advanced = false;
        while (i-- > 0) {
          if (idx[i] < h.size() - 1 - (e - 1 - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j)
              idx[j] = idx[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (idx.empty() || !advanced) break;
      }
      return true;
    }
    // adjacent modes: only the newest window pair needs checking
    if (h.size() < e + 1) return true;
    auto left = h.subspan(h.size() - e - 1, e);
    auto right = h.subspan(h.size() - e, e);
    return c_.at(left) == c_.at(right);
  }

  bool size_condition_met() const {
    if (mode_ == PhMode::adjacent_strong)
      return target_ > f_(prefix_[k_]);
    return target_ > f_(prefix_.front());
  }

  // elements in increasing order; fails fast on the mode's size condition
  bool extend() {
    if (prefix_.size() == target_) return true;
    const std::size_t position = prefix_.size();
    Nat first = prefix_.empty() ? c_.lo() : prefix_.back() + 1;
    Nat last = c_.hi() - (target_ - position - 1);  // room for the rest
    for (Nat x = first; x <= last; ++x) {
      budget_.charge();
      prefix_.push_back(x);
      bool viable = prefix_ok();
      if (viable && mode_ == PhMode::adjacent_strong && position == k_)
        viable = size_condition_met();
      if (viable && mode_ != PhMode::adjacent_strong && position == 0)
        viable = size_condition_met();
      if (viable && extend()) return true;
      prefix_.pop_back();
    }
    return false;
  }

  const SetColoring& c_;
  const std::function<Nat(Nat)>& f_;
  PhMode mode_;
  Nat k_;
  Budget& budget_;
  Nat target_ = 0;
  std::vector<Nat> prefix_;
};

}  // namespace

std::optional<HomogeneousWitness> find_ph_witness(
    const SetColoring& c, const std::function<Nat(Nat)>& f, PhMode mode,
    Nat k, Budget& budget) {
  if (mode == PhMode::adjacent_strong && k >= c.universe_size())
    throw domain_error("k exceeds the interval size");
  return WitnessSearch(c, f, mode, k, budget).run();
}

std::optional<std::vector<Nat>> find_z_prefix(const SetColoring& c, Nat k,
                                              std::span<const Nat> tuple,
                                              Budget& budget) {
  if (k == 0) throw domain_error("prefix length k must be >= 1");
  validate_subset(c, tuple);
  if (tuple.front() < c.lo() + k) return std::nullopt;  // no room below
  std::vector<Nat> z(k);
  for (Nat i = 0; i < k; ++i) z[i] = c.lo() + i;
  std::vector<Nat> combined(k + tuple.size());
  while (true) {
    budget.charge();
    std::copy(z.begin(), z.end(), combined.begin());
    std::copy(tuple.begin(), tuple.end(), combined.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_adjacent_homogeneous(c, combined)) return z;
    // next combination below tuple.front()
    const Nat top = tuple.front() - 1;
    std::size_t i = z.size();
    bool advanced = false;
    while (i-- > 0) {
      if (z[i] < top - (k - 1 - i)) {
        ++z[i];
        for (std::size_t j = i + 1; j < z.size(); ++j) z[j] = z[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
}

SetColoring build_relativized(const SetColoring& c, Nat k, Budget& budget) {
  if (k == 0) throw domain_error("prefix length k must be >= 1");
  SetColoring out(c.arity(), c.lo(), c.hi(), 2 * c.colors());
  if (c.universe_size() < c.arity()) return out;
  const unsigned e = c.arity();
  std::vector<Nat> tuple(e);
  for (unsigned i = 0; i < e; ++i) tuple[i] = c.lo() + i;
  while (true) {
    unsigned bit = find_z_prefix(c, k, tuple, budget).has_value() ? 1 : 0;
    out.set(tuple, 2 * c.at(tuple) + bit);
    std::size_t i = e;
    bool advanced = false;
    while (i-- > 0) {
      if (tuple[i] < c.hi() - (e - 1 - i)) {
        ++tuple[i];
        for (std::size_t j = i + 1; j < e; ++j) tuple[j] = tuple[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

SetColoring build_descent(const Coloring& c, Nat a) {
  const unsigned out_arity = c.arity() + 1;  // d+2
  SetColoring out(out_arity, a, a + c.bound(), c.width() + 1);
  if (out.universe_size() < out_arity) return out;
  std::vector<Nat> tuple(out_arity);
  for (unsigned i = 0; i < out_arity; ++i) tuple[i] = a + i;
  std::vector<Nat> left(c.arity()), right(c.arity());
  while (true) {
    for (unsigned i = 0; i < c.arity(); ++i) {
      left[i] = tuple[i] - a;
      right[i] = tuple[i + 1] - a;
    }
    auto u = c.at(left);
    auto v = c.at(right);
    unsigned color = 0;
    for (unsigned i = 0; i < c.width(); ++i)
      if (u[i] > v[i]) {
        color = 1 + i;  // least strictly descending component
        break;
      }
    out.set(tuple, color);
    std::size_t i = out_arity;
    bool advanced = false;
    while (i-- > 0) {
      if (tuple[i] < a + c.bound() - (out_arity - 1 - i)) {
        ++tuple[i];
        for (std::size_t j = i + 1; j < out_arity; ++j)
          tuple[j] = tuple[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

std::vector<Nat> derive_growth(const Coloring& c) {
  std::vector<Nat> growth(c.bound() + 1, 0);
  std::vector<Nat> tuple(c.arity(), 0);
  while (true) {
    auto value = c.at(tuple);
    Nat max_component = *std::max_element(value.begin(), value.end());
    Nat max_argument = *std::max_element(tuple.begin(), tuple.end());
    if (max_component > growth[max_argument]) growth[max_argument] = max_component;
    std::size_t t = tuple.size();
    bool advanced = false;
    while (t-- > 0) {
      if (tuple[t] < c.bound()) {
        ++tuple[t];
        std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(t) + 1, tuple.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  for (std::size_t x = 1; x < growth.size(); ++x)
    growth[x] = std::max(growth[x], growth[x - 1]);
  return growth;
}

}  // namespace wpo
