#include "scs/witness.hpp"

#include <algorithm>
#include <array>

#include "scs/structure.hpp"

namespace scs {

namespace {

constexpr std::array<std::pair<WitnessKind, std::string_view>, 8> kTags{{
	{WitnessKind::VertexCover, "vc"},
	{WitnessKind::TwinCover, "tc"},
	{WitnessKind::ModCluster, "cluster"},
	{WitnessKind::ModClique, "clique"},
	{WitnessKind::ModCoCluster, "cocluster"},
	{WitnessKind::ModLinearForest, "linforest"},
	{WitnessKind::ModPath, "path"},
	{WitnessKind::DominatingSet, "ds"},
}};

bool is_cluster(const Graph &h) {
	for(const auto &c : connected_components(h))
		if(!is_clique(h, c))
			return false;
	return true;
}

bool is_linear_forest(const Graph &h) {
	for(Vertex v = 0; v < h.num_vertices(); ++v)
		if(h.degree(v) > 2)
			return false;
	// max degree two: acyclic iff every component has one edge fewer than vertices
	for(const auto &c : connected_components(h)) {
		std::size_t deg_sum = 0;
		for(Vertex v : c)
			deg_sum += h.degree(v);
		if(deg_sum / 2 != c.size() - 1)
			return false;
	}
	return true;
}

bool is_twin_cover(const Graph &g, std::span<const Vertex> x) {
	std::vector<char> in_x(g.num_vertices(), 0);
	for(Vertex v : x)
		in_x[v] = 1;
	for(auto [u, v] : g.edges()) {
		if(in_x[u] || in_x[v])
			continue;
		// N[u] = N[v] for adjacent u, v means N(u) - v = N(v) - u
		if(g.degree(u) != g.degree(v))
			return false;
		auto nu = g.neighbors(u), nv = g.neighbors(v);
		VertexSet a, b;
		std::remove_copy(nu.begin(), nu.end(), std::back_inserter(a), v);
		std::remove_copy(nv.begin(), nv.end(), std::back_inserter(b), u);
		if(a != b)
			return false;
	}
	return true;
}

} // namespace

std::string_view kind_tag(WitnessKind k) {
	for(auto [kind, tag] : kTags)
		if(kind == k)
			return tag;
	return "?";
}

std::optional<WitnessKind> parse_kind_tag(std::string_view tag) {
	for(auto [kind, t] : kTags)
		if(t == tag)
			return kind;
	return std::nullopt;
}

std::vector<VertexSet> cocluster_parts(const Graph &g, std::span<const Vertex> x) {
	VertexSet rest = complement_set(g.num_vertices(), x);
	Graph h = g.induced(rest).complement();
	auto parts = connected_components(h);
	for(auto &p : parts)
		for(auto &v : p)
			v = rest[v];
	return parts;
}

bool validate_witness(const Graph &g, std::span<const Vertex> x, WitnessKind kind) {
	for(Vertex v : x)
		if(v < 0 || v >= g.num_vertices())
			return false;
	if(!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end())
		return false;

	if(kind == WitnessKind::DominatingSet) {
		std::vector<char> dominated(g.num_vertices(), 0);
		for(Vertex v : x) {
			dominated[v] = 1;
			for(Vertex w : g.neighbors(v))
				dominated[w] = 1;
		}
		return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
	}
	if(kind == WitnessKind::TwinCover)
		return is_twin_cover(g, x);

	Graph rest = g.without(x);
	switch(kind) {
	case WitnessKind::VertexCover:
		return rest.num_edges() == 0;
	case WitnessKind::ModCluster:
		return is_cluster(rest);
	case WitnessKind::ModClique:
		return is_complete(rest);
	case WitnessKind::ModCoCluster:
		for(const auto &part : cocluster_parts(g, x))
			if(!is_stable(g, part))
				return false;
		return true;
	case WitnessKind::ModLinearForest:
		return is_linear_forest(rest);
	case WitnessKind::ModPath:
		return is_linear_forest(rest) && connected_components(rest).size() <= 1;
	default:
		return false;
	}
}

} // namespace scs
