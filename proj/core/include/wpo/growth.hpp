#ifndef WPO_GROWTH_HPP
#define WPO_GROWTH_HPP

#include <functional>
#include <string>

#include "wpo/ordinal.hpp"

namespace wpo {

/// A named monotone map N -> N, so experiment records can cite the bound
/// they ran under.
struct GrowthFn {
  std::string name;
  std::function<Nat(Nat)> fn;
};

/// Named growth maps: "id", "succ", "const:N", "plus:N", "times:N".
GrowthFn parse_growth(const std::string& spec);

}  // namespace wpo

#endif
