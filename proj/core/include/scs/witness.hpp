#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "scs/graph.hpp"

namespace scs {

/// Which structural parameter a witness set X certifies.
enum class WitnessKind {
	VertexCover,     // G - X is edgeless
	TwinCover,       // every edge of G - X joins true twins of G
	ModCluster,      // G - X is a disjoint union of cliques
	ModClique,       // G - X is one clique
	ModCoCluster,    // G - X is a join of stable sets
	ModLinearForest, // G - X is a disjoint union of paths
	ModPath,         // G - X is a single path
	DominatingSet,   // N[X] = V(G)
};

/// Short tags used in instance files: vc tc cluster clique cocluster linforest path ds.
std::string_view kind_tag(WitnessKind k);
std::optional<WitnessKind> parse_kind_tag(std::string_view tag);

struct Witness {
	WitnessKind kind = WitnessKind::VertexCover;
	VertexSet vertices;

	bool operator==(const Witness &) const = default;
};

bool validate_witness(const Graph &g, std::span<const Vertex> x, WitnessKind kind);

inline bool validate_witness(const Graph &g, const Witness &w) {
	return validate_witness(g, w.vertices, w.kind);
}

/// Parts of G - X viewed as a join of stable sets: the components of the
/// complement of G - X, in g's ids. Empty when G - X is empty.
std::vector<VertexSet> cocluster_parts(const Graph &g, std::span<const Vertex> x);

} // namespace scs
