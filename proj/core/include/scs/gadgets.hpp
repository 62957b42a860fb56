#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scs/graph.hpp"
#include "scs/set_system.hpp"
#include "scs/witness.hpp"

namespace scs {

// Set-system transformations. Each preserves the yes/no answer.

/// Hitting set (with k) to multicolored hitting set. Element (u, i) gets id
/// u * k + (i - 1) and color i. For k >= n the answer is decided directly
/// and a constant-size instance with the same answer is returned.
SetSystem hs_to_mhs(const SetSystem &sys);

/// Multicolored hitting set to hitting set: adds every color class as a set.
SetSystem mhs_to_hs(const SetSystem &sys);

/// Multicolored hitting set to set splitting over n + 2 elements, where
/// element n is r and element n + 1 is b. An empty color class yields a
/// fixed no-instance on the same n + 2 elements.
SetSystem mhs_to_set_splitting(const SetSystem &sys);

/// What a gadget vertex stands for. Indices are 1-based, matching the file
/// formats: `set` is the position of the set in the input, `index` the
/// position of an element inside its set or of a connector vertex.
struct Role {
	enum class Kind {
		S,
		A1,
		A2,
		B1,
		B2,
		ElemA,    // index = element
		ElemB,    // index = element
		L,        // set, index
		LPrime,   // set, index
		R,        // set, index
		RPrime,   // set, index
		C,        // index
		D,        // index
		P,
		Q,
		EndpointU, // set = input graph, index = vertex in that graph
		EndpointV, // set = input graph, index = vertex in that graph
		Member,    // set = input graph, index = vertex in that graph
		Filler,    // vertex of a fixed yes/no instance
	};
	Kind kind = Kind::Filler;
	int set = 0;
	int index = 0;

	bool operator==(const Role &) const = default;
};

/// Tags such as "s", "elem_a(3)", "L'(2,1)", "endpoint_u(4,7)", "filler".
std::string role_tag(const Role &r);
std::optional<Role> parse_role_tag(std::string_view tag);

struct GadgetLayout {
	std::vector<Role> roles; // one per vertex
	std::optional<Witness> witness; // absent for compositions
	std::optional<SetSystem> source_system;
	/// For compositions: input positions (0-based) of the graphs that were kept.
	std::vector<int> source_graphs;

	/// Vertex holding role r, if any.
	std::optional<Vertex> vertex_of(const Role &r) const;
};

struct Gadget {
	Graph graph;
	GadgetLayout layout;
};

/// Fixed instances used when a transformation can decide the answer itself.
/// Both carry the witness X = {0}, valid for ModLinearForest and ModPath.
Gadget trivial_yes_instance(); // two isolated vertices
Gadget trivial_no_instance();  // triangle

/// Set splitting to stable cutset with a witness X (specials and element
/// vertices, |X| = 5 + 2n) whose removal leaves a linear forest. Sets with at
/// most one element yield the trivial no-instance.
Gadget set_splitting_to_scs(const SetSystem &sys);

/// Joins the set paths into one path through new connector vertices. The
/// witness kind becomes ModPath with the same X.
Gadget extend_to_single_path(const Gadget &g);

/// OR-composition: a disconnected input is returned as is; cliques are
/// dropped; the rest are joined by two new adjacent vertices p, q attached to
/// the lexicographically smallest edge of every kept graph. Throws
/// std::invalid_argument on an empty list.
Gadget or_compose(std::span<const Graph> graphs);

} // namespace scs
