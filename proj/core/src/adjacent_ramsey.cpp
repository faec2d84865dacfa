#include "wpo/adjacent_ramsey.hpp"

#include <algorithm>
#include <cassert>

namespace wpo {

namespace {

// first increasing (length)-tuple in {0..bound}, or empty if none fits
std::vector<Nat> first_increasing(unsigned length, Nat bound) {
  if (bound + 1 < length) return {};
  std::vector<Nat> t(length);
  for (unsigned i = 0; i < length; ++i) t[i] = i;
  return t;
}

// lex successor among strictly increasing tuples in {0..bound}
bool next_increasing(std::vector<Nat>& t, Nat bound) {
  const std::size_t n = t.size();
  for (std::size_t i = n; i-- > 0;) {
    if (t[i] < bound - (n - 1 - i)) {
      ++t[i];
      for (std::size_t j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool vec_leq(std::span<const Nat> a, std::span<const Nat> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Coloring::Coloring(unsigned d, unsigned r, Nat bound)
    : d_(d), r_(r), bound_(bound) {
  if (r == 0) throw domain_error("range width must be >= 1");
  std::size_t cells = 1;
  for (unsigned i = 0; i <= d; ++i) cells *= static_cast<std::size_t>(bound + 1);
  table_.assign(cells * r, 0);
}

Coloring Coloring::from_function(
    unsigned d, unsigned r, Nat bound,
    const std::function<std::vector<Nat>(std::span<const Nat>)>& fn) {
  Coloring c(d, r, bound);
  std::vector<Nat> tuple(d + 1, 0);
  while (true) {
    std::vector<Nat> value = fn(tuple);
    c.set(tuple, value);
    std::size_t t = tuple.size();
    while (t > 0 && tuple[t - 1] == bound) {
      tuple[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
    ++tuple[t - 1];
  }
  return c;
}

std::size_t Coloring::index_of(std::span<const Nat> tuple) const {
  if (tuple.size() != arity()) throw domain_error("tuple arity mismatch");
  std::size_t index = 0;
  for (Nat x : tuple) {
    if (x > bound_) throw domain_error("tuple coordinate out of the box");
    index = index * (bound_ + 1) + static_cast<std::size_t>(x);
  }
  return index * r_;
}

std::span<const Nat> Coloring::at(std::span<const Nat> tuple) const {
  return {table_.data() + index_of(tuple), r_};
}

void Coloring::set(std::span<const Nat> tuple, std::span<const Nat> value) {
  if (value.size() != r_) throw domain_error("color width mismatch");
  std::copy(value.begin(), value.end(), table_.begin() + static_cast<std::ptrdiff_t>(index_of(tuple)));
}

bool is_f_limited(const Coloring& c, const std::function<Nat(Nat)>& f) {
  std::vector<Nat> tuple(c.arity(), 0);
  while (true) {
    auto value = c.at(tuple);
    Nat max_component = *std::max_element(value.begin(), value.end());
    Nat max_argument = *std::max_element(tuple.begin(), tuple.end());
    if (max_component > f(max_argument)) return false;
    std::size_t t = tuple.size();
    while (t > 0 && tuple[t - 1] == c.bound()) {
      tuple[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
    ++tuple[t - 1];
  }
  return true;
}

std::optional<AscentWitness> find_adjacent_ascent(const Coloring& c) {
  std::vector<Nat> xs = first_increasing(c.arity() + 1, c.bound());
  if (xs.empty()) return std::nullopt;
  do {
    std::span<const Nat> whole(xs);
    if (vec_leq(c.at(whole.first(c.arity())), c.at(whole.last(c.arity()))))
      return AscentWitness{xs};
  } while (next_increasing(xs, c.bound()));
  return std::nullopt;
}

Coloring badseq_to_coloring(std::span<const GeneratorSet> seq) {
  if (seq.empty()) throw domain_error("sequence must be nonempty");
  auto badness = is_bad_sequence(seq);
  if (!badness.is_bad)
    throw domain_error(
        "sequence is not bad: element " +
        std::to_string(badness.violating_pair->first) + " <= element " +
        std::to_string(badness.violating_pair->second));
  const unsigned k = static_cast<unsigned>(seq.front().dim());
  Coloring c(1, k, seq.size() - 1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      std::optional<Point> witness = not_leq_witness(seq[i], seq[j]);
      assert(witness.has_value());
      std::vector<Nat> tuple{static_cast<Nat>(i), static_cast<Nat>(j)};
      c.set(tuple, witness->coords);
    }
  }
  return c;
}

namespace {

// Backtracking assignment over increasing tuples in lex order; a partial
// assignment is pruned as soon as it contains an ascent.
class NoAscentSearch {
 public:
  NoAscentSearch(unsigned d, unsigned r, const std::function<Nat(Nat)>& f,
                 Nat bound, Budget& budget)
      : d_(d), r_(r), bound_(bound), budget_(budget), coloring_(d, r, bound) {
    std::vector<Nat> t = first_increasing(d + 1, bound);
    if (!t.empty()) {
      do {
        tuples_.push_back(t);
        limits_.push_back(f(t.back()));  // t.back() is the max coordinate
      } while (next_increasing(t, bound));
    }
  }

  std::optional<Coloring> run() {
    if (assign(0)) return coloring_;
    return std::nullopt;
  }

 private:
  bool creates_ascent(std::size_t index) const {
    const std::vector<Nat>& t = tuples_[index];
    // candidate left parts: (x, t_0, ..., t_{d-1}) for x < t_0
    std::vector<Nat> left(d_ + 1);
    std::copy(t.begin(), t.end() - 1, left.begin() + 1);
    for (Nat x = 0; x < t.front(); ++x) {
      left[0] = x;
      if (vec_leq(coloring_.at(left), coloring_.at(t))) return true;
    }
    return false;
  }

  bool assign(std::size_t index) {
    if (index == tuples_.size()) return true;
    const Nat limit = limits_[index];
    std::vector<Nat> value(r_, 0);
    while (true) {
      budget_.charge();
      coloring_.set(tuples_[index], value);
      if (!creates_ascent(index) && assign(index + 1)) return true;
      std::size_t t = value.size();
      while (t > 0 && value[t - 1] == limit) {
        value[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
      ++value[t - 1];
    }
    std::vector<Nat> zero(r_, 0);
    coloring_.set(tuples_[index], zero);
    return false;
  }

  unsigned d_;
  unsigned r_;
  Nat bound_;
  Budget& budget_;
  Coloring coloring_;
  std::vector<std::vector<Nat>> tuples_;
  std::vector<Nat> limits_;
};

}  // namespace

std::optional<Coloring> find_no_ascent_coloring(
    unsigned d, unsigned r, const std::function<Nat(Nat)>& f, Nat bound,
    Budget& budget) {
  return NoAscentSearch(d, r, f, bound, budget).run();
}

std::optional<Nat> find_min_R(unsigned d, unsigned r,
                              const std::function<Nat(Nat)>& f, Nat r_cap,
                              Budget& budget) {
  for (Nat R = d + 1; R <= r_cap; ++R)
    if (!find_no_ascent_coloring(d, r, f, R, budget).has_value()) return R;
  return std::nullopt;
}

}  // namespace wpo
