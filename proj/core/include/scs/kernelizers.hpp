#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scs/graph.hpp"
#include "scs/rules.hpp"
#include "scs/trace.hpp"
#include "scs/witness.hpp"

namespace scs {

/// Which vertices each tuple over X caused to be marked. A tuple with no
/// eligible vertex (or group) is recorded with an empty mark list.
struct MarkingLedger {
	struct Entry {
		std::vector<Vertex> tuple; // ordered, repetition allowed
		int pass = 1;              // 1..4 for the cluster rule, 1 otherwise
		VertexSet marked;
	};
	std::vector<Entry> entries;

	VertexSet marked() const;
};

// Marking passes, exposed for inspection. `x` is the sorted witness set.

/// One vertex per (x1, x2, x3) in X^3 among `eligible`, adjacent to all three.
MarkingLedger mark_vc_triples(const Graph &g, const VertexSet &x, const VertexSet &eligible);

/// One size-two component of g - X per (x1, x2) in X^2, fully adjacent to both.
MarkingLedger mark_tc_pairs(const Graph &g, const VertexSet &x);

/// The four passes over the clique components of g - X.
MarkingLedger mark_cluster_components(const Graph &g, const VertexSet &x);

/// One vertex of stable set `part` per (x1, x2) in X^2, adjacent to both.
MarkingLedger mark_cocluster_part(const Graph &g, const VertexSet &x, const VertexSet &part);

// Marking and structure rules. Each validates the witness for the structure
// it needs and throws std::invalid_argument otherwise.

/// With a TwinCover witness only the isolated vertices of g - X take part.
RuleResult rr7_vc_marking(const Graph &g, const Witness &x);
RuleResult rr8_tc_pair_marking(const Graph &g, const Witness &x);
RuleResult rr9_simple_component(const Graph &g, const Witness &x);
RuleResult rr10_shrink_clique_components(const Graph &g, const Witness &x);
RuleResult rr11_cluster_component_marking(const Graph &g, const Witness &x);
RuleResult rr12_cocluster_shrink_stable_set(const Graph &g, const Witness &x);
RuleResult rr13_cocluster_reduce_stable_sets(const Graph &g, const Witness &x);

struct ReductionOutcome {
	std::optional<bool> decision;
	Graph graph;
	Witness witness;
	VertexSet origin; // origin[i] = input id of output vertex i
	RuleTrace trace;

	bool decided() const { return decision.has_value(); }
};

struct KernelizeOptions {
	/// Replays runs of clique shrinking steps without rebuilding the graph
	/// after each one. Off gives the plain one-step-at-a-time loop; the
	/// result and trace are the same either way.
	bool incremental = true;
};

/// Runs the kind's rule schedule to exhaustion, restarting from rule 1 after
/// every change, and checks the kind's size bound on the result.
///
///   VertexCover   rr1-rr3, rr7
///   TwinCover     rr1-rr3, rr6, rr7 (isolated vertices of G - X), rr8
///   ModCluster    rr1-rr4, rr9, rr10, rr11
///   ModClique     same as ModCluster
///   ModCoCluster  rr1-rr3, rr12, rr13; rr7 while G - X is one stable set
ReductionOutcome kernelize(const Graph &g, const Witness &x, const KernelizeOptions &opts = {});

/// Upper bound on |V(G')| for a fully reduced instance with |X'| = x_size.
/// For ModCoCluster the bound depends on how many stable sets G' - X' joins.
std::uint64_t kernel_vertex_bound(WitnessKind kind, std::uint64_t x_size, std::size_t cocluster_parts = 0);

/// Checks the structural bounds a fully reduced instance must satisfy
/// (per-component and per-part limits as well as the total vertex bound).
bool satisfies_kernel_bounds(const Graph &g, const Witness &x);

} // namespace scs
