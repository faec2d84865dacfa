#include "wpo/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace wpo {

Partition Partition::empty(std::size_t dim) { return Partition(dim, {}); }

Partition::Partition(std::size_t dim, std::map<Point, Nat> parts)
    : dim_(dim), parts_(std::move(parts)) {
  if (dim == 0) throw domain_error("partition dimension must be >= 1");
  for (const auto& [index, part] : parts_) {
    if (index.dim() != dim)
      throw domain_error("support index dimension mismatch");
    if (part == 0) throw domain_error("parts must be strictly positive");
    for (std::size_t t = 0; t < dim; ++t) {
      if (index.coords[t] == 0) continue;
      Point pred = index;
      --pred.coords[t];
      auto it = parts_.find(pred);
      if (it == parts_.end())
        throw domain_error("support is not downward closed at " +
                           to_string(index));
      if (it->second < part)
        throw domain_error("parts must be antitone: part at " +
                           to_string(pred) + " is smaller than at " +
                           to_string(index));
    }
  }
}

Nat Partition::value() const noexcept {
  Nat sum = 0;
  for (const auto& [index, part] : parts_) sum += part;
  return sum;
}

bool leq_t(const Partition& n, const Partition& m) {
  if (n.dim() != m.dim())
    throw domain_error("dimension mismatch: " + std::to_string(n.dim()) +
                       " vs " + std::to_string(m.dim()));
  for (const auto& [index, part] : n.parts()) {
    auto it = m.parts().find(index);
    Nat other = it == m.parts().end() ? 0 : it->second;
    if (part > other) return false;
  }
  return true;
}

GeneratorSet to_downset(const Partition& n) {
  std::vector<Point> generators;
  generators.reserve(n.parts().size());
  for (const auto& [index, part] : n.parts()) {
    Point p;
    p.coords.reserve(n.dim() + 1);
    p.coords.push_back(part - 1);
    p.coords.insert(p.coords.end(), index.coords.begin(), index.coords.end());
    generators.push_back(std::move(p));
  }
  return GeneratorSet(n.dim() + 1, std::move(generators));
}

Partition from_downset(const DownSet& x) {
  if (x.dim() < 2)
    throw domain_error("translation needs ambient dimension >= 2");
  std::map<Point, Nat> parts;
  for (const auto& p : x.points()) {
    Point index{std::vector<Nat>(p.coords.begin() + 1, p.coords.end())};
    Nat height = p.coords.front() + 1;
    auto [it, inserted] = parts.emplace(std::move(index), height);
    if (!inserted && it->second < height) it->second = height;
  }
  return Partition(x.dim() - 1, std::move(parts));
}

namespace {

// Canonical generation of finite downsets in N^dim by size: points join in
// increasing lex order, so each downset appears exactly once.
void size_bounded_dfs(std::size_t dim, Nat max_size,
                      std::vector<Point>& current,
                      std::vector<std::vector<Point>>& out, Budget& budget) {
  budget.charge();
  out.push_back(current);
  if (current.size() == max_size) return;

  // addable candidates: origin, or an existing point bumped in one
  // coordinate, with all immediate predecessors present
  std::vector<Point> candidates;
  if (current.empty()) {
    candidates.push_back(Point{std::vector<Nat>(dim, 0)});
  } else {
    for (const auto& base : current) {
      for (std::size_t t = 0; t < dim; ++t) {
        Point next = base;
        ++next.coords[t];
        if (next <= current.back()) continue;  // keeps generation canonical
        if (std::binary_search(current.begin(), current.end(), next)) continue;
        bool addable = true;
        for (std::size_t s = 0; s < dim && addable; ++s) {
          if (next.coords[s] == 0) continue;
          Point pred = next;
          --pred.coords[s];
          if (!std::binary_search(current.begin(), current.end(), pred))
            addable = false;
        }
        if (addable) candidates.push_back(std::move(next));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
  }

  for (const auto& c : candidates) {
    current.push_back(c);
    size_bounded_dfs(dim, max_size, current, out, budget);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t dim, Nat max_value,
                                            Budget& budget) {
  if (dim == 0) throw domain_error("partition dimension must be >= 1");
  std::vector<std::vector<Point>> downsets;
  std::vector<Point> current;
  size_bounded_dfs(dim + 1, max_value, current, downsets, budget);

  std::vector<Partition> result;
  result.reserve(downsets.size());
  for (auto& pts : downsets)
    result.push_back(from_downset(DownSet::from_points(dim + 1, std::move(pts))));
  std::sort(result.begin(), result.end(),
            [](const Partition& a, const Partition& b) {
              Nat va = a.value(), vb = b.value();
              if (va != vb) return va < vb;
              return a < b;
            });
  return result;
}

std::string to_string_1d(const Partition& p) {
  if (p.dim() != 1) throw domain_error("text format is for 1-dim partitions");
  if (p.is_empty()) return "0";
  std::ostringstream oss;
  bool first = true;
  for (const auto& [index, part] : p.parts()) {
    if (!first) oss << '+';
    first = false;
    oss << part;
  }
  return oss.str();
}

Partition parse_partition_1d(std::string_view text) {
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_nat = [&]() -> Nat {
    skip_spaces();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a natural number", pos);
    Nat value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<Nat>(text[pos] - '0');
      ++pos;
    }
    return value;
  };

  std::vector<Nat> summands;
  summands.push_back(parse_nat());
  skip_spaces();
  while (pos < text.size() && text[pos] == '+') {
    ++pos;
    summands.push_back(parse_nat());
    skip_spaces();
  }
  if (pos != text.size()) throw parse_error("unexpected trailing input", pos);

  if (summands.size() == 1 && summands[0] == 0) return Partition::empty(1);
  std::map<Point, Nat> parts;
  for (std::size_t i = 0; i < summands.size(); ++i)
    parts.emplace(Point{{static_cast<Nat>(i)}}, summands[i]);
  return Partition(1, std::move(parts));
}

}  // namespace wpo
