#pragma once

#include <string>
#include <vector>

#include "chromasym/engine.hpp"
#include "chromasym/partition.hpp"

namespace chromasym {

// One entry of the config's "maps" array: the channel maps applied to the
// lower member of each pair in scope (the upper member keeps identity,
// which preserves its colors).
struct MapRule {
    PairScope scope;
    ChannelMaps maps;
};

struct DistortConfig {
    GroupElement element = GroupElement::Rot;
    PartitionSpec partition = GridSpec{};
    std::vector<MapRule> rules;
    int tolerance = 1;
};

struct ConfigParseResult {
    DistortConfig config;
    std::vector<std::string> errors;  // all validation failures, not just the first

    bool ok() const { return errors.empty(); }
};

ConfigParseResult parse_config(const std::string& text);
std::string serialize_config(const DistortConfig& cfg);

// Builds the assignment a config prescribes for a given partition.
Assignment assignment_from_config(const DistortConfig& cfg, const Partition& part);

}  // namespace chromasym
