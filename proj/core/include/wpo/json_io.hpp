#ifndef WPO_JSON_IO_HPP
#define WPO_JSON_IO_HPP

#include <optional>

#include "json.hpp"
#include "wpo/adjacent_ramsey.hpp"
#include "wpo/downset.hpp"
#include "wpo/experiments.hpp"
#include "wpo/largeness.hpp"
#include "wpo/partition.hpp"
#include "wpo/ph.hpp"

namespace wpo {

using json = nlohmann::json;

// points and generator sets: arrays of arrays, e.g. [[2,0],[0,2]]
json to_json(const Point& p);
json to_json(const GeneratorSet& g);
GeneratorSet generator_set_from_json(const json& j,
                                     std::optional<std::size_t> dim = {});

// partitions: {"dim":k,"parts":[{"idx":[...],"n":...},...]}, lex index order
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// largeness traces: [{"consumed":2,"ordinal":"2"},...]
json to_json(const LargenessTrace& trace);

// colorings: {"d":...,"r":...,"R":...,"entries":[{"x":[...],"c":[...]},...]}
json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

// set colorings mirror colorings with an interval:
// {"e":...,"c":...,"interval":[a,R],"entries":[{"x":[...],"c":...},...]}
json to_json(const SetColoring& c);
SetColoring set_coloring_from_json(const json& j);

json to_json(const ExperimentRecord& record);
json to_json(const SweepReport& report);

}  // namespace wpo

#endif
