#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scs/graph.hpp"

namespace scs {

/// Connected components, each sorted, listed by minimum vertex.
std::vector<VertexSet> connected_components(const Graph &g);

/// Components of g - removed, reported in g's vertex ids.
std::vector<VertexSet> components_without(const Graph &g, std::span<const Vertex> removed);

/// Component index per vertex (-1 for vertices in `removed`).
std::vector<int> component_labels(const Graph &g, std::span<const Vertex> removed = {});

/// Graphs on at most one vertex count as connected.
bool is_connected(const Graph &g);

VertexSet articulation_points(const Graph &g);

enum class SubsetClass { Stable, Clique, Both, Neither };

std::string_view to_string(SubsetClass c);

SubsetClass classify_subset(const Graph &g, std::span<const Vertex> s);
bool is_stable(const Graph &g, std::span<const Vertex> s);
bool is_clique(const Graph &g, std::span<const Vertex> s);

/// The whole vertex set is a clique (n <= 1 included).
bool is_complete(const Graph &g);

/// N(S) = union of neighborhoods minus S itself.
VertexSet neighborhood(const Graph &g, std::span<const Vertex> s);

/// N(u) \ M == N(v) \ M for all u, v in M.
bool is_module(const Graph &g, std::span<const Vertex> m);

/// Classes of the twin relation (true or false twins), sorted by minimum vertex.
std::vector<VertexSet> twin_partition(const Graph &g);

/// Classes of the true-twin relation N[u] = N[v].
std::vector<VertexSet> true_twin_classes(const Graph &g);

/// Lexicographically smallest triple that is a clique module, if any.
///
/// A triple is a clique module exactly when its members are pairwise true
/// twins, so the answer is the three smallest members of some true-twin class.
std::optional<std::array<Vertex, 3>> find_clique_module_triplet(const Graph &g);

} // namespace scs
