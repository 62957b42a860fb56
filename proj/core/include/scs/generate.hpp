#pragma once

#include <cstdint>

#include "scs/graph.hpp"
#include "scs/witness.hpp"

namespace scs {

struct GeneratorConfig {
	WitnessKind kind = WitnessKind::VertexCover;
	int x_size = 3;
	int outside = 20;
	double edge_prob = 0.5;   // between X and the rest
	double x_edge_prob = -1;  // inside X; negative means edge_prob
	std::uint64_t seed = 1;
	int max_group = 5;        // largest cluster or linear-forest path
	int parts = 0;            // co-cluster stable sets; 0 picks a random count
	int min_attach = 0;       // every outside vertex gets at least this many X-neighbors
	bool shuffle = true;      // randomly relabel vertices
};

struct PlantedInstance {
	Graph graph;
	Witness witness;
};

/// Random graph whose witness X is valid for cfg.kind by construction. The
/// same config always produces the same instance.
///
/// G - X is a stable set (VertexCover), cliques of true twins (TwinCover),
/// random cliques (ModCluster), one clique (ModClique), a join of stable sets
/// (ModCoCluster), random paths (ModLinearForest), one path (ModPath), or a
/// random graph with every outside vertex attached to X (DominatingSet).
PlantedInstance generate_planted(const GeneratorConfig &cfg);

} // namespace scs
