#ifndef WPO_ORDINAL_HPP
#define WPO_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wpo/errors.hpp"

namespace wpo {

using Nat = std::uint64_t;

enum class OrdinalClass { zero, successor, limit };

/// An ordinal below epsilon_0 in strict Cantor Normal Form: a finite sum
/// w^e_0*c_0 + ... + w^e_n*c_n with e_0 > e_1 > ... > e_n and all c_i >= 1.
/// The empty sum is 0. Values are immutable; every operation returns a new
/// ordinal and is safe to call concurrently.
class Ordinal {
 public:
  struct Monomial;

  Ordinal();          // zero
  Ordinal(Nat n);     // finite ordinal, intentionally implicit
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  /// w^exponent (a single monomial with coefficient 1).
  static Ordinal omega_pow(const Ordinal& exponent);
  /// w^exponent * coefficient; coefficient 0 gives 0.
  static Ordinal monomial(const Ordinal& exponent, Nat coefficient);

  bool is_zero() const noexcept;
  /// True for 0 and for plain naturals w^0*c.
  bool is_finite() const noexcept;
  Nat finite_value() const;  // pre: is_finite()

  const std::vector<Monomial>& monomials() const noexcept;
  OrdinalClass classify() const noexcept;

  /// Ordinal addition; left monomials below the leading exponent of rhs
  /// are absorbed.
  Ordinal operator+(const Ordinal& rhs) const;
  /// Ordinal times a natural: multiplies the leading coefficient.
  Ordinal times(Nat n) const;
  /// The n-th member a[n] of the pinned fundamental sequence of a != 0.
  /// For successors, a[n] is the predecessor regardless of n. Rules:
  /// write a = g + w^b*c with trailing monomial w^b*c. Then
  ///   b = 0:     a[n] = g + (c-1)
  ///   b = d+1:   a[n] = g + w^b*(c-1) + w^d*n
  ///   b limit:   a[n] = g + w^b*(c-1) + w^(b[n])
  Ordinal fundamental(Nat n) const;
  /// pre: classify() == successor.
  Ordinal predecessor() const;

  std::strong_ordering operator<=>(const Ordinal& rhs) const noexcept;
  bool operator==(const Ordinal& rhs) const noexcept;

 private:
  explicit Ordinal(std::vector<Monomial> ms);

  std::vector<Monomial> monomials_;
};

struct Ordinal::Monomial {
  Ordinal exponent;
  Nat coefficient = 0;
};

/// w_n: w_0 = 1, w_1 = w, w_{n+1} = w^(w_n). Heights above the desk-scale
/// cap are rejected with budget_error.
Ordinal omega_tower(unsigned height);
/// w_n(a): w_1(a) = w^a, w_{n+1}(a) = w^(w_n(a)); height >= 1.
Ordinal omega_tower_of(unsigned height, const Ordinal& a);

inline constexpr unsigned kMaxTowerHeight = 8;

/// Parses the ASCII ordinal grammar:
///   ordinal  := "0" | monomial ("+" monomial)*
///   monomial := "w^" exp ("*" nat)? | "w" ("*" nat)? | nat
///   exp      := nat | "(" ordinal ")"
/// The input must already be in strict CNF order (strictly decreasing
/// exponents, no zero coefficients); violations raise parse_error with the
/// offending position.
Ordinal parse_ordinal(std::string_view text);

/// Canonical printer; omits "*1" and "^1", prints finite exponents bare and
/// larger exponents parenthesized. parse_ordinal(to_string(a)) == a.
std::string to_string(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace wpo

#endif
