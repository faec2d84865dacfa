#ifndef WPO_EMBEDDING_HPP
#define WPO_EMBEDDING_HPP

#include <vector>

#include "wpo/downset.hpp"
#include "wpo/errors.hpp"
#include "wpo/ordinal.hpp"

namespace wpo {

/// Base-omega digits (b_0, ..., b_k) of beta = w^k*b_0 + ... + w^0*b_k,
/// most significant first, zero digits included. pre: beta < w^{k+1}.
Point ordinal_digits(const Ordinal& beta, unsigned k);

/// Embeds alpha < w^(w^{k+1}) as an antichain in N^{k+3}: one point
/// (i, a_i) ++ digits(beta_i) per CNF monomial w^(beta_i)*a_i, in monomial
/// order. Domination between embeddings reflects ordinal order.
GeneratorSet embed_ordinal(const Ordinal& alpha, unsigned k);

/// Checks the reflection implication for one pair:
/// embed(a) <= embed(b) implies a <= b.
bool reflection_holds(const Ordinal& a, const Ordinal& b, unsigned k);

/// All beta < w^{k+1} whose digits are <= max_digit, in digit-odometer
/// order (least significant digit fastest).
std::vector<Ordinal> enumerate_digit_ordinals(unsigned k, Nat max_digit);

struct CnfPoolSpec {
  unsigned max_monomials = 2;
  Nat max_digit = 2;  // bound on exponent digits
  Nat max_coeff = 2;  // bound on monomial coefficients
};

/// All alpha < w^(w^{k+1}) with at most max_monomials monomials, exponent
/// digits <= max_digit and coefficients <= max_coeff; deterministic order.
std::vector<Ordinal> enumerate_cnf_pool(unsigned k, const CnfPoolSpec& spec,
                                        Budget& budget);

}  // namespace wpo

#endif
