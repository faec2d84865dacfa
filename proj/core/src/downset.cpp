#include "wpo/downset.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace wpo {

namespace {

void require_dim(const Point& p, std::size_t dim) {
  if (p.dim() != dim)
    throw domain_error("point dimension " + std::to_string(p.dim()) +
                       " does not match ambient dimension " +
                       std::to_string(dim));
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw domain_error("dimension mismatch: " + std::to_string(a) + " vs " +
                       std::to_string(b));
}

}  // namespace

bool leq_point(const Point& p, const Point& q) {
  require_same_dim(p.dim(), q.dim());
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] > q.coords[i]) return false;
  return true;
}

GeneratorSet::GeneratorSet(std::size_t dim, std::vector<Point> generators)
    : dim_(dim) {
  if (dim == 0) throw domain_error("ambient dimension must be >= 1");
  for (const auto& p : generators) require_dim(p, dim);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size() && !dominated; ++j)
      if (i != j && leq_point(generators[i], generators[j]) &&
          generators[i] != generators[j])
        dominated = true;
    if (!dominated) gens_.push_back(generators[i]);
  }
}

DownSet::DownSet(std::size_t dim, std::vector<Point> sorted)
    : dim_(dim), points_(std::move(sorted)) {}

DownSet DownSet::from_points(std::size_t dim, std::vector<Point> points) {
  if (dim == 0) throw domain_error("ambient dimension must be >= 1");
  for (const auto& p : points) require_dim(p, dim);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  DownSet result(dim, std::move(points));
  // closure check through immediate predecessors
  for (const auto& p : result.points_) {
    for (std::size_t t = 0; t < dim; ++t) {
      if (p.coords[t] == 0) continue;
      Point pred = p;
      --pred.coords[t];
      if (!result.contains(pred))
        throw domain_error("set is not downward closed: missing " +
                           to_string(pred) + " below " + to_string(p));
    }
  }
  return result;
}

bool DownSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool DownSet::subset_of(const DownSet& other) const {
  require_same_dim(dim_, other.dim_);
  return std::includes(other.points_.begin(), other.points_.end(),
                       points_.begin(), points_.end());
}

GeneratorSet DownSet::maxima() const {
  std::vector<Point> maximal;
  for (const auto& p : points_) {
    bool dominated = false;
    for (const auto& q : points_)
      if (p != q && leq_point(p, q)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(p);
  }
  return GeneratorSet(dim_, std::move(maximal));
}

DownSet generate(const GeneratorSet& g) {
  std::set<Point> points;
  for (const auto& gen : g.generators()) {
    // odometer over the box [0, gen]
    Point p{std::vector<Nat>(g.dim(), 0)};
    while (true) {
      points.insert(p);
      std::size_t t = g.dim();
      while (t > 0 && p.coords[t - 1] == gen.coords[t - 1]) {
        p.coords[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
      ++p.coords[t - 1];
    }
  }
  return DownSet::from_points(
      g.dim(), std::vector<Point>(points.begin(), points.end()));
}

std::optional<Point> not_leq_witness(const GeneratorSet& g,
                                     const GeneratorSet& h) {
  require_same_dim(g.dim(), h.dim());
  for (const auto& m : g.generators()) {
    bool dominated = false;
    for (const auto& mp : h.generators())
      if (leq_point(m, mp)) {
        dominated = true;
        break;
      }
    if (!dominated) return m;
  }
  return std::nullopt;
}

bool leq_gen(const GeneratorSet& g, const GeneratorSet& h) {
  return !not_leq_witness(g, h).has_value();
}

BadnessResult is_bad_sequence(std::span<const GeneratorSet> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (leq_gen(seq[i], seq[j]))
        return BadnessResult{false, std::make_pair(i, j)};
  return BadnessResult{true, std::nullopt};
}

namespace {

// Membership DFS over box points in lex order; a point may join only when
// all its immediate predecessors already did.
void downset_dfs(std::size_t dim, const std::vector<Point>& box,
                 std::size_t index, std::vector<Point>& current,
                 std::vector<std::vector<Point>>& out, Budget& budget) {
  budget.charge();
  if (index == box.size()) {
    out.push_back(current);
    return;
  }
  downset_dfs(dim, box, index + 1, current, out, budget);  // exclude
  const Point& p = box[index];
  for (std::size_t t = 0; t < dim; ++t) {
    if (p.coords[t] == 0) continue;
    Point pred = p;
    --pred.coords[t];
    if (!std::binary_search(current.begin(), current.end(), pred)) return;
  }
  current.push_back(p);
  downset_dfs(dim, box, index + 1, current, out, budget);
  current.pop_back();
}

}  // namespace

std::vector<DownSet> enumerate_downsets(std::size_t dim, Nat bound,
                                        Budget& budget) {
  if (dim == 0) throw domain_error("ambient dimension must be >= 1");
  std::vector<Point> box;
  Point p{std::vector<Nat>(dim, 0)};
  while (true) {
    box.push_back(p);
    std::size_t t = dim;
    while (t > 0 && p.coords[t - 1] == bound) {
      p.coords[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
    ++p.coords[t - 1];
  }
  std::sort(box.begin(), box.end());

  std::vector<std::vector<Point>> subsets;
  std::vector<Point> current;
  downset_dfs(dim, box, 0, current, subsets, budget);

  std::vector<DownSet> result;
  result.reserve(subsets.size());
  for (auto& pts : subsets)
    result.push_back(DownSet::from_points(dim, std::move(pts)));
  std::sort(result.begin(), result.end(),
            [](const DownSet& a, const DownSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return result;
}

namespace {

class PointSetParser {
 public:
  explicit PointSetParser(std::string_view text) : text_(text) {}

  std::vector<Point> parse() {
    expect('[');
    std::vector<Point> points;
    if (!peek_is(']')) {
      do {
        points.push_back(parse_point());
      } while (consume(','));
    }
    expect(']');
    skip_spaces();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return points;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
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

  void expect(char c) {
    if (!consume(c))
      throw parse_error(std::string("expected '") + c + "'", pos_);
  }

  Nat parse_nat() {
    skip_spaces();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("expected a natural number", pos_);
    Nat value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<Nat>(text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  Point parse_point() {
    expect('(');
    Point p;
    do {
      p.coords.push_back(parse_nat());
    } while (consume(','));
    expect(')');
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorSet parse_generator_set(std::string_view text,
                                 std::optional<std::size_t> dim) {
  std::vector<Point> points = PointSetParser(text).parse();
  if (points.empty()) {
    if (!dim)
      throw domain_error(
          "empty generator set needs an explicit ambient dimension");
    return GeneratorSet(*dim, {});
  }
  std::size_t inferred = points.front().dim();
  if (dim && *dim != inferred)
    throw domain_error("point dimension does not match requested dimension");
  return GeneratorSet(inferred, std::move(points));
}

std::string to_string(const Point& p) {
  std::ostringstream oss;
  oss << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i > 0) oss << ',';
    oss << p.coords[i];
  }
  oss << ')';
  return oss.str();
}

std::string to_string(const GeneratorSet& g) {
  std::ostringstream oss;
  oss << '[';
  bool first = true;
  for (const auto& p : g.generators()) {
    if (!first) oss << ',';
    first = false;
    oss << to_string(p);
  }
  oss << ']';
  return oss.str();
}

}  // namespace wpo
