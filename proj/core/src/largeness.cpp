#include "wpo/largeness.hpp"

#include <utility>

namespace wpo {

FiniteSet::FiniteSet(std::vector<Nat> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
    if (elements_[i] >= elements_[i + 1])
      throw domain_error("finite set elements must be strictly increasing");
}

FiniteSet FiniteSet::interval(Nat lo, Nat hi) {
  if (lo > hi) throw domain_error("empty interval");
  std::vector<Nat> elements;
  elements.reserve(hi - lo + 1);
  for (Nat x = lo; x <= hi; ++x) elements.push_back(x);
  return FiniteSet(std::move(elements));
}

LargenessResult is_alpha_large(const Ordinal& alpha, const FiniteSet& a) {
  if (a.empty()) throw domain_error("alpha-largeness needs a nonempty set");
  LargenessResult result;
  Ordinal current = alpha;
  for (Nat element : a.elements()) {
    if (!current.is_zero()) current = current.fundamental(element);
    result.trace.steps.push_back(LargenessStep{element, current});
  }
  result.is_large = current.is_zero();
  return result;
}

Nat find_alpha_large_interval(const Ordinal& alpha,
                              const std::function<Nat(Nat)>& f, Nat start,
                              Budget& budget) {
  if (alpha.is_zero())
    throw domain_error("descent needs a nonzero starting ordinal");
  Ordinal current = alpha;
  Nat index = start;
  Nat previous = 0;
  while (true) {
    budget.charge();
    Nat value = f(index);
    if (index > start && value <= previous)
      throw domain_error("f is not strictly increasing on the probed range");
    previous = value;
    current = current.fundamental(value);
    if (current.is_zero()) return index;
    ++index;
  }
}

Nat hardy(const Ordinal& alpha, Nat n, Budget& budget) {
  Ordinal current = alpha;
  while (!current.is_zero()) {
    budget.charge();
    if (current.classify() == OrdinalClass::successor) {
      current = current.predecessor();
      ++n;
    } else {
      current = current.fundamental(n);
    }
  }
  return n;
}

}  // namespace wpo
