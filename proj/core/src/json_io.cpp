#include "wpo/json_io.hpp"

#include <algorithm>

namespace wpo {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw domain_error("bad JSON: " + what);
}

std::vector<Nat> nat_array(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<Nat> values;
  values.reserve(j.size());
  for (const auto& v : j) {
    require(v.is_number_unsigned(), what + " must hold naturals");
    values.push_back(v.get<Nat>());
  }
  return values;
}

}  // namespace

json to_json(const Point& p) { return json(p.coords); }

json to_json(const GeneratorSet& g) {
  json points = json::array();
  for (const auto& p : g.generators()) points.push_back(to_json(p));
  return points;
}

GeneratorSet generator_set_from_json(const json& j,
                                     std::optional<std::size_t> dim) {
  require(j.is_array(), "generator set must be an array of points");
  std::vector<Point> points;
  for (const auto& entry : j)
    points.push_back(Point{nat_array(entry, "point")});
  if (points.empty()) {
    require(dim.has_value(), "empty generator set needs a dimension");
    return GeneratorSet(*dim, {});
  }
  std::size_t inferred = points.front().dim();
  if (dim) require(*dim == inferred, "point dimension mismatch");
  return GeneratorSet(inferred, std::move(points));
}

json to_json(const Partition& p) {
  json parts = json::array();
  for (const auto& [index, part] : p.parts())
    parts.push_back(json{{"idx", index.coords}, {"n", part}});
  return json{{"dim", p.dim()}, {"parts", parts}};
}

Partition partition_from_json(const json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("parts"),
          "partition needs dim and parts");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::map<Point, Nat> parts;
  for (const auto& entry : j.at("parts")) {
    require(entry.contains("idx") && entry.contains("n"),
            "partition part needs idx and n");
    Point index{nat_array(entry.at("idx"), "idx")};
    bool inserted =
        parts.emplace(std::move(index), entry.at("n").get<Nat>()).second;
    require(inserted, "duplicate partition index");
  }
  return Partition(dim, std::move(parts));
}

json to_json(const LargenessTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back(json{{"consumed", step.consumed},
                         {"ordinal", to_string(step.after)}});
  return steps;
}

json to_json(const Coloring& c) {
  json entries = json::array();
  std::vector<Nat> tuple(c.arity(), 0);
  while (true) {
    auto value = c.at(tuple);
    entries.push_back(json{{"x", tuple},
                           {"c", std::vector<Nat>(value.begin(), value.end())}});
    std::size_t t = tuple.size();
    while (t > 0 && tuple[t - 1] == c.bound()) {
      tuple[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
    ++tuple[t - 1];
  }
  return json{{"d", c.d()}, {"r", c.width()}, {"R", c.bound()},
              {"entries", entries}};
}

Coloring coloring_from_json(const json& j) {
  require(j.is_object() && j.contains("d") && j.contains("r") &&
              j.contains("R"),
          "coloring needs d, r and R");
  Coloring c(j.at("d").get<unsigned>(), j.at("r").get<unsigned>(),
             j.at("R").get<Nat>());
  if (!j.contains("entries")) return c;
  for (const auto& entry : j.at("entries")) {
    require(entry.contains("x") && entry.contains("c"),
            "coloring entry needs x and c");
    std::vector<Nat> tuple = nat_array(entry.at("x"), "x");
    std::vector<Nat> value = nat_array(entry.at("c"), "c");
    c.set(tuple, value);
  }
  return c;
}

json to_json(const SetColoring& c) {
  json entries = json::array();
  if (c.universe_size() >= c.arity()) {
    std::vector<Nat> tuple(c.arity());
    for (unsigned i = 0; i < c.arity(); ++i) tuple[i] = c.lo() + i;
    while (true) {
      entries.push_back(json{{"x", tuple}, {"c", c.at(tuple)}});
      std::size_t i = tuple.size();
      bool advanced = false;
      while (i-- > 0) {
        if (tuple[i] < c.hi() - (c.arity() - 1 - i)) {
          ++tuple[i];
          for (std::size_t t = i + 1; t < tuple.size(); ++t)
            tuple[t] = tuple[t - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return json{{"e", c.arity()},
              {"c", c.colors()},
              {"interval", json::array({c.lo(), c.hi()})},
              {"entries", entries}};
}

SetColoring set_coloring_from_json(const json& j) {
  require(j.is_object() && j.contains("e") && j.contains("c") &&
              j.contains("interval"),
          "set coloring needs e, c and interval");
  const auto& interval = j.at("interval");
  require(interval.is_array() && interval.size() == 2, "bad interval");
  SetColoring c(j.at("e").get<unsigned>(), interval[0].get<Nat>(),
                interval[1].get<Nat>(), j.at("c").get<unsigned>());
  if (!j.contains("entries")) return c;
  for (const auto& entry : j.at("entries")) {
    require(entry.contains("x") && entry.contains("c"),
            "set coloring entry needs x and c");
    std::vector<Nat> tuple = nat_array(entry.at("x"), "x");
    c.set(tuple, entry.at("c").get<unsigned>());
  }
  return c;
}

json to_json(const ExperimentRecord& record) {
  json witness;
  if (const auto* parts =
          std::get_if<std::vector<Partition>>(&record.witness)) {
    witness = json::array();
    for (const auto& p : *parts) witness.push_back(to_json(p));
  } else if (const auto* sets =
                 std::get_if<std::vector<GeneratorSet>>(&record.witness)) {
    witness = json::array();
    for (const auto& g : *sets) witness.push_back(to_json(g));
  } else {
    witness = nullptr;
  }
  return json{{"experiment", record.experiment},
              {"k", record.k},
              {"l", record.l},
              {"growth", record.growth},
              {"budget", record.budget},
              {"seed", record.seed},
              {"length", record.length},
              {"exhausted", record.exhausted},
              {"nodes", record.nodes},
              {"wall_ms", record.wall_ms},
              {"witness", witness}};
}

json to_json(const SweepReport& report) {
  return json{{"pool_size", report.pool_size},
              {"exponent_pool_size", report.exponent_pool_size},
              {"pairs_checked", report.pairs_checked},
              {"reflection_violations", report.reflection_violations},
              {"antichain_failures", report.antichain_failures},
              {"digit_pairs_checked", report.digit_pairs_checked},
              {"digit_violations", report.digit_violations}};
}

}  // namespace wpo
