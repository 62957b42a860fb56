#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "scs/graph.hpp"

namespace scs {

enum class RuleId {
	DisconnectedOrCutVertex = 1,
	Clique,
	StableNeighborhood,
	Simplicial,
	ComparableNeighborhood,
	CliqueModule,
	VcMarking,
	TcPairMarking,
	SimpleComponent,
	ShrinkCliqueComponents,
	ClusterComponentMarking,
	CoClusterShrinkStableSet,
	CoClusterReduceStableSets,
};

/// "rr1" .. "rr13".
std::string_view rule_name(RuleId r);
std::optional<RuleId> parse_rule_name(std::string_view s);

/// One rule application. `deleted` holds ids of the graph the pipeline was
/// started on, not of the intermediate graph the rule saw.
struct TraceEvent {
	RuleId rule{};
	VertexSet deleted;
	std::optional<bool> decision;

	bool operator==(const TraceEvent &) const = default;
};

using RuleTrace = std::vector<TraceEvent>;

} // namespace scs
