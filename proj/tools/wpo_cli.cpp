// wpo: ordinal / downset / partition toolbox with exhaustive micro-searches.
// Exit codes: 0 success, 1 input error, 2 budget exhaustion.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpo/adjacent_ramsey.hpp"
#include "wpo/downset.hpp"
#include "wpo/embedding.hpp"
#include "wpo/experiments.hpp"
#include "wpo/json_io.hpp"
#include "wpo/largeness.hpp"
#include "wpo/partition.hpp"
#include "wpo/ph.hpp"

namespace {

using wpo::json;
using wpo::Nat;

struct GlobalOptions {
  std::uint64_t budget = wpo::kDefaultBudget;
  std::string out_path;
  std::string format = "text";
};

std::string csv_cell(const json& value) {
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void emit(const GlobalOptions& options, const json& record) {
  if (options.format == "json") {
    std::cout << record.dump() << '\n';
  } else if (options.format == "csv") {
    std::string header, row;
    for (const auto& [key, value] : record.items()) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += key;
      row += csv_cell(value);
    }
    std::cout << header << '\n' << row << '\n';
  } else {
    for (const auto& [key, value] : record.items()) {
      if (key == "command") continue;
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  }
  if (!options.out_path.empty()) {
    std::ofstream out(options.out_path, std::ios::app);
    if (!out) throw wpo::domain_error("cannot open " + options.out_path);
    out << record.dump() << '\n';
  }
}

// JSON argument: inline text, "-" for stdin, or a file path.
json read_json_argument(const std::string& arg) {
  if (arg == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return json::parse(buffer.str());
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw wpo::domain_error("cannot open " + arg);
  json j;
  in >> j;
  return j;
}

wpo::Partition read_partition(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{')
    return wpo::partition_from_json(json::parse(arg));
  return wpo::parse_partition_1d(arg);
}

wpo::FiniteSet read_finite_set(const std::string& arg) {
  std::string cleaned;
  for (char c : arg)
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  std::vector<Nat> elements;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw wpo::parse_error("empty set element", 0);
    elements.push_back(std::stoull(item));
  }
  return wpo::FiniteSet(std::move(elements));
}

int exit_code_for(const wpo::ExperimentRecord& record) {
  return record.exhausted ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNF ordinals, downsets of N^k, k-dimensional partitions and "
               "the searches connecting them"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--budget", global.budget, "step budget for searches")
      ->capture_default_str();
  app.add_option("--out", global.out_path, "append the JSON result line here");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  int exit_code = 0;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& description) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  // ---- ord ----------------------------------------------------------
  CLI::App* ord = app.add_subcommand("ord", "ordinal arithmetic");
  ord->require_subcommand(1);
  ord->fallthrough();

  {
    auto* cmd = leaf(ord, "eval", "parse and print the canonical form");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "ordinal expression")->required();
    cmd->callback([&, expr] {
      wpo::Ordinal a = wpo::parse_ordinal(*expr);
      const char* kind = a.classify() == wpo::OrdinalClass::zero ? "zero"
                         : a.classify() == wpo::OrdinalClass::successor
                             ? "successor"
                             : "limit";
      emit(global, json{{"command", "ord eval"},
                        {"input", *expr},
                        {"canonical", to_string(a)},
                        {"class", kind}});
    });
  }
  {
    auto* cmd = leaf(ord, "compare", "compare two ordinals");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmd->add_option("a", *a)->required();
    cmd->add_option("b", *b)->required();
    cmd->callback([&, a, b] {
      auto order = wpo::parse_ordinal(*a) <=> wpo::parse_ordinal(*b);
      const char* result =
          order < 0 ? "less" : (order > 0 ? "greater" : "equal");
      emit(global, json{{"command", "ord compare"},
                        {"a", *a},
                        {"b", *b},
                        {"result", result}});
    });
  }
  {
    auto* cmd = leaf(ord, "fund", "fundamental sequence member a[n]");
    auto expr = std::make_shared<std::string>();
    auto n = std::make_shared<Nat>(0);
    cmd->add_option("expr", *expr)->required();
    cmd->add_option("n", *n)->required();
    cmd->callback([&, expr, n] {
      emit(global,
           json{{"command", "ord fund"},
                {"input", *expr},
                {"n", *n},
                {"result", to_string(wpo::parse_ordinal(*expr).fundamental(*n))}});
    });
  }
  {
    auto* cmd = leaf(ord, "hardy", "Hardy hierarchy value H_a(n)");
    auto expr = std::make_shared<std::string>();
    auto n = std::make_shared<Nat>(0);
    cmd->add_option("expr", *expr)->required();
    cmd->add_option("n", *n)->required();
    cmd->callback([&, expr, n] {
      wpo::Budget budget(global.budget);
      Nat value = wpo::hardy(wpo::parse_ordinal(*expr), *n, budget);
      emit(global, json{{"command", "ord hardy"},
                        {"input", *expr},
                        {"n", *n},
                        {"result", value},
                        {"steps", budget.used()}});
    });
  }
  {
    auto* cmd = leaf(ord, "large", "alpha-largeness of a finite set");
    auto expr = std::make_shared<std::string>();
    auto set_text = std::make_shared<std::string>();
    cmd->add_option("expr", *expr)->required();
    cmd->add_option("set", *set_text, "e.g. 2,3,4 or {2,3,4}")->required();
    cmd->callback([&, expr, set_text] {
      auto result = wpo::is_alpha_large(wpo::parse_ordinal(*expr),
                                        read_finite_set(*set_text));
      emit(global, json{{"command", "ord large"},
                        {"input", *expr},
                        {"set", *set_text},
                        {"large", result.is_large},
                        {"trace", to_json(result.trace)}});
    });
  }

  // ---- downset ------------------------------------------------------
  CLI::App* downset = app.add_subcommand("downset", "generator sets and downsets");
  downset->require_subcommand(1);
  downset->fallthrough();

  {
    auto* cmd = leaf(downset, "leq", "inclusion of generated downsets");
    auto g = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto dim = std::make_shared<std::size_t>(0);
    cmd->add_option("lhs", *g, "e.g. [(1,1)]")->required();
    cmd->add_option("rhs", *h)->required();
    cmd->add_option("--dim", *dim, "ambient dimension for empty sets");
    cmd->callback([&, g, h, dim] {
      std::optional<std::size_t> d;
      if (*dim > 0) d = *dim;
      wpo::GeneratorSet gs = wpo::parse_generator_set(*g, d);
      wpo::GeneratorSet hs = wpo::parse_generator_set(*h, d ? d : gs.dim());
      auto witness = wpo::not_leq_witness(gs, hs);
      emit(global, json{{"command", "downset leq"},
                        {"g", to_string(gs)},
                        {"h", to_string(hs)},
                        {"leq", !witness.has_value()},
                        {"witness",
                         witness ? to_json(*witness) : json(nullptr)}});
    });
  }
  {
    auto* cmd = leaf(downset, "canon", "canonical antichain of a generator set");
    auto g = std::make_shared<std::string>();
    cmd->add_option("g", *g)->required();
    cmd->callback([&, g] {
      wpo::GeneratorSet gs = wpo::parse_generator_set(*g);
      emit(global, json{{"command", "downset canon"},
                        {"canonical", to_string(gs)},
                        {"generators", to_json(gs)}});
    });
  }
  {
    auto* cmd = leaf(downset, "enum", "enumerate downsets of a box");
    auto dim = std::make_shared<std::size_t>(1);
    auto bound = std::make_shared<Nat>(1);
    cmd->add_option("--dim", *dim)->required();
    cmd->add_option("--bound", *bound)->required();
    cmd->callback([&, dim, bound] {
      wpo::Budget budget(global.budget);
      auto all = wpo::enumerate_downsets(*dim, *bound, budget);
      json sets = json::array();
      for (const auto& ds : all) {
        json points = json::array();
        for (const auto& p : ds.points()) points.push_back(to_json(p));
        sets.push_back(points);
      }
      emit(global, json{{"command", "downset enum"},
                        {"dim", *dim},
                        {"bound", *bound},
                        {"count", all.size()},
                        {"downsets", sets}});
    });
  }

  // ---- part ---------------------------------------------------------
  CLI::App* part = app.add_subcommand("part", "k-dimensional partitions");
  part->require_subcommand(1);
  part->fallthrough();

  {
    auto* cmd = leaf(part, "value", "value v(N)");
    auto p = std::make_shared<std::string>();
    cmd->add_option("partition", *p, "\"3+2\" or JSON")->required();
    cmd->callback([&, p] {
      emit(global, json{{"command", "part value"},
                        {"value", read_partition(*p).value()}});
    });
  }
  {
    auto* cmd = leaf(part, "leq", "pointwise partition order");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    cmd->add_option("n", *p)->required();
    cmd->add_option("m", *q)->required();
    cmd->callback([&, p, q] {
      emit(global,
           json{{"command", "part leq"},
                {"leq", wpo::leq_t(read_partition(*p), read_partition(*q))}});
    });
  }
  {
    auto* cmd = leaf(part, "to-downset", "stacked-solid generator set");
    auto p = std::make_shared<std::string>();
    cmd->add_option("partition", *p)->required();
    cmd->callback([&, p] {
      wpo::GeneratorSet g = wpo::to_downset(read_partition(*p));
      emit(global, json{{"command", "part to-downset"},
                        {"generators", to_json(g)},
                        {"text", to_string(g)}});
    });
  }
  {
    auto* cmd = leaf(part, "from-downset", "column heights of a generated downset");
    auto g = std::make_shared<std::string>();
    cmd->add_option("generators", *g, "generator set of the downset")->required();
    cmd->callback([&, g] {
      wpo::DownSet x = wpo::generate(wpo::parse_generator_set(*g));
      wpo::Partition p = wpo::from_downset(x);
      json record{{"command", "part from-downset"},
                  {"partition", to_json(p)}};
      if (p.dim() == 1) record["text"] = to_string_1d(p);
      emit(global, record);
    });
  }
  {
    auto* cmd = leaf(part, "enum", "enumerate partitions up to a value");
    auto dim = std::make_shared<std::size_t>(1);
    auto max_value = std::make_shared<Nat>(3);
    cmd->add_option("--dim", *dim)->required();
    cmd->add_option("--max-value", *max_value)->required();
    cmd->callback([&, dim, max_value] {
      wpo::Budget budget(global.budget);
      auto all = wpo::enumerate_partitions(*dim, *max_value, budget);
      json list = json::array();
      for (const auto& p : all) list.push_back(to_json(p));
      emit(global, json{{"command", "part enum"},
                        {"dim", *dim},
                        {"max_value", *max_value},
                        {"count", all.size()},
                        {"partitions", list}});
    });
  }

  // ---- embed --------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "embed", "embed an ordinal below w^(w^(k+1)) into N^(k+3)");
    cmd->fallthrough();
    auto k = std::make_shared<unsigned>(0);
    auto expr = std::make_shared<std::string>();
    cmd->add_option("--k", *k, "digit width parameter")->required();
    cmd->add_option("--ordinal", *expr)->required();
    cmd->callback([&, k, expr] {
      wpo::GeneratorSet g = wpo::embed_ordinal(wpo::parse_ordinal(*expr), *k);
      emit(global, json{{"command", "embed"},
                        {"k", *k},
                        {"ordinal", *expr},
                        {"generators", to_json(g)},
                        {"text", to_string(g)}});
    });
  }

  // ---- ar -----------------------------------------------------------
  CLI::App* ar = app.add_subcommand("ar", "adjacent Ramsey searches");
  ar->require_subcommand(1);
  ar->fallthrough();

  {
    auto* cmd = leaf(ar, "search", "least adjacent ascent of a coloring");
    auto input = std::make_shared<std::string>();
    cmd->add_option("coloring", *input, "JSON file, inline JSON or -")->required();
    cmd->callback([&, input] {
      wpo::Coloring c = wpo::coloring_from_json(read_json_argument(*input));
      auto witness = wpo::find_adjacent_ascent(c);
      emit(global, json{{"command", "ar search"},
                        {"witness", witness ? json(witness->xs) : json(nullptr)}});
    });
  }
  {
    auto* cmd = leaf(ar, "reduce", "coloring of a bad generator-set sequence");
    auto sequence = std::make_shared<std::string>();
    cmd->add_option("sequence", *sequence,
                    "';'-separated generator sets, e.g. [(2,0)];[(1,1)]")
        ->required();
    cmd->callback([&, sequence] {
      std::vector<wpo::GeneratorSet> seq;
      std::stringstream ss(*sequence);
      std::string text;
      while (std::getline(ss, text, ';'))
        seq.push_back(wpo::parse_generator_set(text));
      wpo::Coloring c = wpo::badseq_to_coloring(seq);
      json record = to_json(c);
      record["command"] = "ar reduce";
      emit(global, record);
    });
  }
  {
    auto* cmd = leaf(ar, "min-r", "least R forcing an ascent for f-limited colorings");
    auto d = std::make_shared<unsigned>(0);
    auto r = std::make_shared<unsigned>(1);
    auto growth = std::make_shared<std::string>("id");
    auto cap = std::make_shared<Nat>(8);
    cmd->add_option("--d", *d)->capture_default_str();
    cmd->add_option("--r", *r)->capture_default_str();
    cmd->add_option("--growth", *growth, "id|succ|const:N|plus:N|times:N")
        ->capture_default_str();
    cmd->add_option("--cap", *cap, "largest R to try")->capture_default_str();
    cmd->callback([&, d, r, growth, cap] {
      wpo::GrowthFn f = wpo::parse_growth(*growth);
      wpo::Budget budget(global.budget);
      auto min_r = wpo::find_min_R(*d, *r, f.fn, *cap, budget);
      emit(global, json{{"command", "ar min-r"},
                        {"d", *d},
                        {"r", *r},
                        {"growth", f.name},
                        {"cap", *cap},
                        {"min_R", min_r ? json(*min_r) : json(nullptr)},
                        {"steps", budget.used()}});
    });
  }

  // ---- ph -----------------------------------------------------------
  CLI::App* ph = app.add_subcommand("ph", "Paris-Harrington style searches");
  ph->require_subcommand(1);
  ph->fallthrough();

  {
    auto* cmd = leaf(ph, "search", "least homogeneous witness with a size condition");
    auto input = std::make_shared<std::string>();
    auto mode_name = std::make_shared<std::string>("homogeneous");
    auto growth = std::make_shared<std::string>("id");
    auto k = std::make_shared<Nat>(0);
    cmd->add_option("coloring", *input, "set coloring JSON")->required();
    cmd->add_option("--mode", *mode_name)
        ->check(CLI::IsMember({"homogeneous", "adjacent", "adjacent-strong"}))
        ->capture_default_str();
    cmd->add_option("--growth", *growth)->capture_default_str();
    cmd->add_option("--k", *k, "index for adjacent-strong")->capture_default_str();
    cmd->callback([&, input, mode_name, growth, k] {
      wpo::SetColoring c =
          wpo::set_coloring_from_json(read_json_argument(*input));
      wpo::PhMode mode = *mode_name == "homogeneous" ? wpo::PhMode::homogeneous
                         : *mode_name == "adjacent"
                             ? wpo::PhMode::adjacent
                             : wpo::PhMode::adjacent_strong;
      wpo::GrowthFn f = wpo::parse_growth(*growth);
      wpo::Budget budget(global.budget);
      auto witness = wpo::find_ph_witness(c, f.fn, mode, *k, budget);
      emit(global,
           json{{"command", "ph search"},
                {"mode", *mode_name},
                {"growth", f.name},
                {"witness", witness ? json(witness->elements) : json(nullptr)},
                {"steps", budget.used()}});
    });
  }
  {
    auto* cmd = leaf(ph, "relativize", "combine a coloring with its prefix bit");
    auto input = std::make_shared<std::string>();
    auto k = std::make_shared<Nat>(1);
    cmd->add_option("coloring", *input)->required();
    cmd->add_option("--k", *k, "prefix length")->capture_default_str();
    cmd->callback([&, input, k] {
      wpo::SetColoring c =
          wpo::set_coloring_from_json(read_json_argument(*input));
      wpo::Budget budget(global.budget);
      json record = to_json(wpo::build_relativized(c, *k, budget));
      record["command"] = "ph relativize";
      emit(global, record);
    });
  }
  {
    auto* cmd = leaf(ph, "descend", "descent coloring of a vector coloring");
    auto input = std::make_shared<std::string>();
    auto a = std::make_shared<Nat>(0);
    cmd->add_option("coloring", *input, "coloring JSON")->required();
    cmd->add_option("--a", *a, "interval shift")->capture_default_str();
    cmd->callback([&, input, a] {
      wpo::Coloring c = wpo::coloring_from_json(read_json_argument(*input));
      json record = to_json(wpo::build_descent(c, *a));
      record["command"] = "ph descend";
      emit(global, record);
    });
  }
  {
    auto* cmd = leaf(ph, "growth", "pointwise max growth of a coloring");
    auto input = std::make_shared<std::string>();
    cmd->add_option("coloring", *input)->required();
    cmd->callback([&, input] {
      wpo::Coloring c = wpo::coloring_from_json(read_json_argument(*input));
      emit(global, json{{"command", "ph growth"},
                        {"growth", wpo::derive_growth(c)}});
    });
  }

  // ---- exp ----------------------------------------------------------
  CLI::App* exp = app.add_subcommand("exp", "miniaturization experiments");
  exp->require_subcommand(1);
  exp->fallthrough();

  {
    auto* cmd = leaf(exp, "bad-partitions", "longest bad partition sequence");
    auto k = std::make_shared<std::size_t>(1);
    auto l = std::make_shared<Nat>(0);
    auto growth = std::make_shared<std::string>("id");
    cmd->add_option("--k", *k)->capture_default_str();
    cmd->add_option("--l", *l)->capture_default_str();
    cmd->add_option("--growth", *growth)->capture_default_str();
    cmd->callback([&, k, l, growth] {
      wpo::ExperimentRecord record = wpo::run_bad_partitions(
          *k, *l, wpo::parse_growth(*growth), global.budget);
      json j = to_json(record);
      j["command"] = "exp bad-partitions";
      emit(global, j);
      exit_code = exit_code_for(record);
    });
  }
  {
    auto* cmd = leaf(exp, "bad-downsets", "longest bad downset sequence");
    auto k = std::make_shared<std::size_t>(1);
    auto l = std::make_shared<Nat>(0);
    auto growth = std::make_shared<std::string>("id");
    cmd->add_option("--k", *k)->capture_default_str();
    cmd->add_option("--l", *l)->capture_default_str();
    cmd->add_option("--growth", *growth)->capture_default_str();
    cmd->callback([&, k, l, growth] {
      wpo::ExperimentRecord record = wpo::run_bad_downsets(
          *k, *l, wpo::parse_growth(*growth), global.budget);
      json j = to_json(record);
      j["command"] = "exp bad-downsets";
      emit(global, j);
      exit_code = exit_code_for(record);
    });
  }
  {
    auto* cmd = leaf(exp, "sweep", "batch embedding reflection check");
    auto k = std::make_shared<unsigned>(0);
    auto spec = std::make_shared<wpo::CnfPoolSpec>();
    cmd->add_option("--k", *k)->capture_default_str();
    cmd->add_option("--max-monomials", spec->max_monomials)->capture_default_str();
    cmd->add_option("--max-digit", spec->max_digit)->capture_default_str();
    cmd->add_option("--max-coeff", spec->max_coeff)->capture_default_str();
    cmd->callback([&, k, spec] {
      wpo::Budget budget(global.budget);
      wpo::SweepReport report = wpo::embedding_sweep(*k, *spec, budget);
      json j = to_json(report);
      j["command"] = "exp sweep";
      j["k"] = *k;
      j["ok"] = report.reflection_violations == 0 &&
                report.antichain_failures == 0 && report.digit_violations == 0;
      emit(global, j);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const wpo::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
