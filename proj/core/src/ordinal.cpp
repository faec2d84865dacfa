#include "wpo/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace wpo {

namespace {

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > UINT64_MAX / a) throw domain_error("coefficient overflow");
  return a * b;
}

Nat checked_add(Nat a, Nat b) {
  if (b > UINT64_MAX - a) throw domain_error("coefficient overflow");
  return a + b;
}

[[maybe_unused]] bool strictly_decreasing(
    const std::vector<Ordinal::Monomial>& ms) {
  for (std::size_t i = 0; i + 1 < ms.size(); ++i)
    if (!(ms[i].exponent > ms[i + 1].exponent)) return false;
  return std::all_of(ms.begin(), ms.end(),
                     [](const auto& m) { return m.coefficient >= 1; });
}

}  // namespace

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(Nat n) {
  if (n > 0) monomials_.push_back(Monomial{Ordinal(), n});
}

Ordinal::Ordinal(std::vector<Monomial> ms) : monomials_(std::move(ms)) {
  assert(strictly_decreasing(monomials_));
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent) {
  return monomial(exponent, 1);
}

Ordinal Ordinal::monomial(const Ordinal& exponent, Nat coefficient) {
  if (coefficient == 0) return Ordinal();
  std::vector<Monomial> ms;
  ms.push_back(Monomial{exponent, coefficient});
  return Ordinal(std::move(ms));
}

bool Ordinal::is_zero() const noexcept { return monomials_.empty(); }

bool Ordinal::is_finite() const noexcept {
  return monomials_.empty() ||
         (monomials_.size() == 1 && monomials_[0].exponent.is_zero());
}

Nat Ordinal::finite_value() const {
  if (!is_finite()) throw domain_error("ordinal is not finite");
  return monomials_.empty() ? 0 : monomials_[0].coefficient;
}

const std::vector<Ordinal::Monomial>& Ordinal::monomials() const noexcept {
  return monomials_;
}

OrdinalClass Ordinal::classify() const noexcept {
  if (monomials_.empty()) return OrdinalClass::zero;
  return monomials_.back().exponent.is_zero() ? OrdinalClass::successor
                                              : OrdinalClass::limit;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const noexcept {
  const auto& a = monomials_;
  const auto& b = rhs.monomials_;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = a[i].exponent <=> b[i].exponent; c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool Ordinal::operator==(const Ordinal& rhs) const noexcept {
  return (*this <=> rhs) == 0;
}

Ordinal Ordinal::operator+(const Ordinal& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return rhs;
  const Ordinal& lead = rhs.monomials_.front().exponent;
  std::vector<Monomial> ms;
  std::size_t i = 0;
  while (i < monomials_.size() && monomials_[i].exponent > lead)
    ms.push_back(monomials_[i++]);
  ms.insert(ms.end(), rhs.monomials_.begin(), rhs.monomials_.end());
  if (i < monomials_.size() && monomials_[i].exponent == lead)
    ms[i].coefficient = checked_add(ms[i].coefficient,
                                    monomials_[i].coefficient);
  return Ordinal(std::move(ms));
}

Ordinal Ordinal::times(Nat n) const {
  if (n == 0 || is_zero()) return Ordinal();
  std::vector<Monomial> ms = monomials_;
  ms.front().coefficient = checked_mul(ms.front().coefficient, n);
  return Ordinal(std::move(ms));
}

Ordinal Ordinal::predecessor() const {
  if (classify() != OrdinalClass::successor)
    throw domain_error("predecessor requires a successor ordinal");
  std::vector<Monomial> ms = monomials_;
  if (ms.back().coefficient > 1)
    --ms.back().coefficient;
  else
    ms.pop_back();
  return Ordinal(std::move(ms));
}

Ordinal Ordinal::fundamental(Nat n) const {
  if (is_zero())
    throw domain_error("fundamental sequence of 0 is undefined");
  std::vector<Monomial> ms = monomials_;
  const Monomial last = ms.back();
  ms.pop_back();
  const Ordinal& beta = last.exponent;
  const Nat c = last.coefficient;
  switch (beta.classify()) {
    case OrdinalClass::zero:
      if (c > 1) ms.push_back(Monomial{beta, c - 1});
      break;
    case OrdinalClass::successor:
      if (c > 1) ms.push_back(Monomial{beta, c - 1});
      if (n > 0) ms.push_back(Monomial{beta.predecessor(), n});
      break;
    case OrdinalClass::limit:
      if (c > 1) ms.push_back(Monomial{beta, c - 1});
      ms.push_back(Monomial{beta.fundamental(n), 1});
      break;
  }
  return Ordinal(std::move(ms));
}

Ordinal omega_tower(unsigned height) {
  if (height > kMaxTowerHeight)
    throw budget_error("tower height " + std::to_string(height) +
                       " exceeds the desk-scale cap of " +
                       std::to_string(kMaxTowerHeight));
  Ordinal t(1);
  for (unsigned i = 0; i < height; ++i) t = Ordinal::omega_pow(t);
  return t;
}

Ordinal omega_tower_of(unsigned height, const Ordinal& a) {
  if (height == 0) throw domain_error("omega_tower_of requires height >= 1");
  if (height > kMaxTowerHeight)
    throw budget_error("tower height " + std::to_string(height) +
                       " exceeds the desk-scale cap of " +
                       std::to_string(kMaxTowerHeight));
  Ordinal t = a;
  for (unsigned i = 0; i < height; ++i) t = Ordinal::omega_pow(t);
  return t;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal result = parse_sum();
    skip_spaces();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return result;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool peek_is(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  Nat parse_nat() {
    skip_spaces();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("expected a natural number", pos_);
    Nat value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Nat digit = static_cast<Nat>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10)
        throw parse_error("natural number too large", pos_);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  // Returns (exponent, coefficient); coefficient 0 only for a literal "0".
  std::pair<Ordinal, Nat> parse_monomial() {
    skip_spaces();
    if (pos_ >= text_.size())
      throw parse_error("expected a monomial", pos_);
    if (text_[pos_] == 'w') {
      ++pos_;
      Ordinal exponent(1);
      if (consume('^')) exponent = parse_exponent();
      Nat coefficient = 1;
      if (consume('*')) {
        std::size_t coeff_pos = pos_;
        coefficient = parse_nat();
        if (coefficient == 0)
          throw parse_error("zero coefficient", coeff_pos);
      }
      return {exponent, coefficient};
    }
    return {Ordinal(), parse_nat()};
  }

  Ordinal parse_exponent() {
    skip_spaces();
    if (consume('(')) {
      Ordinal inner = parse_sum();
      if (!consume(')'))
        throw parse_error("expected ')'", pos_);
      return inner;
    }
    return Ordinal(parse_nat());
  }

  Ordinal parse_sum() {
    std::vector<std::pair<Ordinal, Nat>> parts;
    std::vector<std::size_t> positions;
    do {
      skip_spaces();
      positions.push_back(pos_);
      parts.push_back(parse_monomial());
    } while (consume('+'));

    if (parts.size() == 1 && parts[0].second == 0 && parts[0].first.is_zero())
      return Ordinal();

    Ordinal result;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& [exponent, coefficient] = parts[i];
      if (coefficient == 0)
        throw parse_error("zero coefficient", positions[i]);
      if (i > 0 && !(parts[i - 1].first > exponent))
        throw parse_error("exponents not strictly decreasing", positions[i]);
      result = result + Ordinal::monomial(exponent, coefficient);
    }
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(std::ostream& os, const Ordinal& a) {
  if (a.is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const auto& m : a.monomials()) {
    if (!first) os << '+';
    first = false;
    if (m.exponent.is_zero()) {
      os << m.coefficient;
      continue;
    }
    os << 'w';
    if (!(m.exponent == Ordinal(1))) {
      os << '^';
      if (m.exponent.is_finite()) {
        os << m.exponent.finite_value();
      } else {
        os << '(';
        print(os, m.exponent);
        os << ')';
      }
    }
    if (m.coefficient != 1) os << '*' << m.coefficient;
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  return OrdinalParser(text).parse();
}

std::string to_string(const Ordinal& a) {
  std::ostringstream oss;
  print(oss, a);
  return oss.str();
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  print(os, a);
  return os;
}

}  // namespace wpo
