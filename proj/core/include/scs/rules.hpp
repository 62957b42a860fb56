#pragma once

#include <optional>

#include "scs/graph.hpp"
#include "scs/trace.hpp"

namespace scs {

/// Outcome of a single rule invocation.
struct RuleResult {
	enum class Kind { NotApplicable, Decided, Reduced };

	Kind kind = Kind::NotApplicable;
	bool answer = false; // meaningful for Decided
	Graph graph;         // Reduced: the induced subgraph on the survivors
	VertexSet deleted;   // Reduced: ids in the input graph

	static RuleResult not_applicable() { return {}; }
	static RuleResult decided(bool yes) { return {Kind::Decided, yes, {}, {}}; }
	static RuleResult reduced(const Graph &g, VertexSet deleted);

	bool applicable() const { return kind != Kind::NotApplicable; }
};

// Each rule checks only its own condition. The safeness arguments assume the
// earlier rules are exhausted; run_generic_fixpoint and the kernelizers
// enforce that order.

/// Yes if g (n >= 2) is disconnected or has a cut vertex.
RuleResult rr1_disconnected_or_cutvertex(const Graph &g);

/// No if g is a clique, including n <= 1.
RuleResult rr2_clique(const Graph &g);

/// Yes if some vertex has a stable (or at most one-vertex) neighborhood.
RuleResult rr3_stable_neighborhood(const Graph &g);

/// Deletes the lowest simplicial vertex.
RuleResult rr4_simplicial(const Graph &g);

/// Deletes v for the first ordered pair (u, v), u != v, with N(v) a subset of N(u).
RuleResult rr5_comparable_neighborhood(const Graph &g);

/// Deletes the smallest vertex of the smallest clique-module triple.
RuleResult rr6_clique_module(const Graph &g);

/// Result of running rules 1..6 to exhaustion.
struct GenericFixpoint {
	std::optional<bool> decision;
	Graph graph;      // final graph (the last graph seen when decided)
	VertexSet origin; // origin[i] = input id of final vertex i
	RuleTrace trace;
};

GenericFixpoint run_generic_fixpoint(const Graph &g);

} // namespace scs
