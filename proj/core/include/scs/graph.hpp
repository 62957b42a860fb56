#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scs {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted ascending; every query that returns a set
/// returns it sorted. Instances are immutable once built, so a Graph can be
/// shared between threads without synchronization.
class Graph {
public:
	Graph() = default;
	explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

	/// Strict constructor: throws std::invalid_argument on self-loops,
	/// duplicate edges, or endpoints outside [0, n).
	static Graph from_edges(int n, std::span<const Edge> edges);

	int num_vertices() const { return static_cast<int>(adj_.size()); }
	std::size_t num_edges() const { return m_; }

	std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
	int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
	bool adjacent(Vertex u, Vertex v) const;

	/// All edges as (u, v) with u < v, lexicographically sorted.
	std::vector<Edge> edges() const;

	/// Subgraph induced by `keep` (sorted). Vertex keep[i] becomes vertex i.
	Graph induced(std::span<const Vertex> keep) const;

	/// g - removed, renumbered so that relative order is preserved.
	Graph without(std::span<const Vertex> removed) const;

	/// Complement graph.
	Graph complement() const;

	bool operator==(const Graph &) const = default;

private:
	friend class GraphBuilder;
	std::vector<std::vector<Vertex>> adj_;
	std::size_t m_ = 0;
};

/// Lenient incremental builder used by generators and gadget constructions.
/// Repeated edges collapse to one; self-loops are rejected.
class GraphBuilder {
public:
	explicit GraphBuilder(int n = 0) : adj_(static_cast<std::size_t>(n)) {}

	Vertex add_vertex();
	int num_vertices() const { return static_cast<int>(adj_.size()); }
	void add_edge(Vertex u, Vertex v);
	void add_clique(std::span<const Vertex> vs);
	Graph build() const;

private:
	std::vector<std::vector<Vertex>> adj_;
};

/// Vertices 0..n-1 minus `removed` (both sorted).
VertexSet complement_set(int n, std::span<const Vertex> removed);

/// Union / intersection / difference of sorted sets.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);

/// Sorts and removes duplicates.
VertexSet normalized(VertexSet s);

std::string format_set(std::span<const Vertex> s, int offset = 0);

} // namespace scs
