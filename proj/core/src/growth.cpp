#include "wpo/growth.hpp"

#include <charconv>

#include "wpo/errors.hpp"

namespace wpo {

namespace {

Nat parse_argument(const std::string& spec, std::size_t colon) {
  Nat value = 0;
  const char* first = spec.data() + colon + 1;
  const char* last = spec.data() + spec.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw domain_error("bad growth argument in '" + spec + "'");
  return value;
}

}  // namespace

GrowthFn parse_growth(const std::string& spec) {
  if (spec == "id") return {spec, [](Nat x) { return x; }};
  if (spec == "succ") return {spec, [](Nat x) { return x + 1; }};
  std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    Nat n = parse_argument(spec, colon);
    if (head == "const") return {spec, [n](Nat) { return n; }};
    if (head == "plus") return {spec, [n](Nat x) { return x + n; }};
    if (head == "times") return {spec, [n](Nat x) { return x * n; }};
  }
  throw domain_error("unknown growth function '" + spec +
                     "' (want id, succ, const:N, plus:N or times:N)");
}

}  // namespace wpo
