#include "wpo/embedding.hpp"

#include <algorithm>
#include <cassert>

namespace wpo {

Point ordinal_digits(const Ordinal& beta, unsigned k) {
  Point digits{std::vector<Nat>(k + 1, 0)};
  for (const auto& m : beta.monomials()) {
    if (!m.exponent.is_finite() || m.exponent.finite_value() > k)
      throw domain_error("ordinal " + to_string(beta) + " is not below w^" +
                         std::to_string(k + 1));
    digits.coords[k - m.exponent.finite_value()] = m.coefficient;
  }
  return digits;
}

GeneratorSet embed_ordinal(const Ordinal& alpha, unsigned k) {
  std::vector<Point> points;
  points.reserve(alpha.monomials().size());
  Nat position = 0;
  for (const auto& m : alpha.monomials()) {
    Point digits = ordinal_digits(m.exponent, k);
    Point p;
    p.coords.reserve(k + 3);
    p.coords.push_back(position++);
    p.coords.push_back(m.coefficient);
    p.coords.insert(p.coords.end(), digits.coords.begin(), digits.coords.end());
    points.push_back(std::move(p));
  }
  GeneratorSet result(k + 3, std::move(points));
  assert(result.size() == alpha.monomials().size());
  return result;
}

bool reflection_holds(const Ordinal& a, const Ordinal& b, unsigned k) {
  if (!leq_gen(embed_ordinal(a, k), embed_ordinal(b, k))) return true;
  return a <= b;
}

std::vector<Ordinal> enumerate_digit_ordinals(unsigned k, Nat max_digit) {
  std::vector<Ordinal> result;
  std::vector<Nat> digits(k + 1, 0);
  while (true) {
    Ordinal beta;
    for (unsigned i = 0; i <= k; ++i)
      beta = beta + Ordinal::monomial(Ordinal(k - i), digits[i]);
    result.push_back(beta);
    std::size_t t = digits.size();
    while (t > 0 && digits[t - 1] == max_digit) {
      digits[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
    ++digits[t - 1];
  }
  return result;
}

std::vector<Ordinal> enumerate_cnf_pool(unsigned k, const CnfPoolSpec& spec,
                                        Budget& budget) {
  std::vector<Ordinal> exponents = enumerate_digit_ordinals(k, spec.max_digit);
  std::sort(exponents.begin(), exponents.end(),
            [](const Ordinal& a, const Ordinal& b) { return b < a; });

  std::vector<Ordinal> pool;
  pool.emplace_back();  // zero

  // descending exponent combinations of each size, coefficient odometer
  std::vector<std::size_t> combo;
  auto emit_with_coefficients = [&](const std::vector<std::size_t>& chosen) {
    std::vector<Nat> coeffs(chosen.size(), 1);
    while (true) {
      budget.charge();
      Ordinal alpha;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        alpha = alpha + Ordinal::monomial(exponents[chosen[i]], coeffs[i]);
      pool.push_back(std::move(alpha));
      std::size_t t = coeffs.size();
      while (t > 0 && coeffs[t - 1] == spec.max_coeff) {
        coeffs[t - 1] = 1;
        --t;
      }
      if (t == 0) break;
      ++coeffs[t - 1];
    }
  };
  auto extend = [&](auto&& self, std::size_t next_index) -> void {
    if (!combo.empty()) emit_with_coefficients(combo);
    if (combo.size() == spec.max_monomials) return;
    for (std::size_t i = next_index; i < exponents.size(); ++i) {
      combo.push_back(i);
      self(self, i + 1);
      combo.pop_back();
    }
  };
  extend(extend, 0);
  return pool;
}

}  // namespace wpo
