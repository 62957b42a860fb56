#include "scs/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace scs {

std::vector<int> component_labels(const Graph &g, std::span<const Vertex> removed) {
	int n = g.num_vertices();
	std::vector<int> label(n, -2);
	for(Vertex r : removed)
		label[r] = -1;
	int next = 0;
	std::vector<Vertex> stack;
	for(Vertex s = 0; s < n; ++s) {
		if(label[s] != -2)
			continue;
		label[s] = next;
		stack.push_back(s);
		while(!stack.empty()) {
			Vertex u = stack.back();
			stack.pop_back();
			for(Vertex w : g.neighbors(u)) {
				if(label[w] == -2) {
					label[w] = next;
					stack.push_back(w);
				}
			}
		}
		++next;
	}
	return label;
}

std::vector<VertexSet> components_without(const Graph &g, std::span<const Vertex> removed) {
	auto label = component_labels(g, removed);
	int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
	std::vector<VertexSet> comps(std::max(count, 0));
	for(Vertex v = 0; v < g.num_vertices(); ++v)
		if(label[v] >= 0)
			comps[label[v]].push_back(v);
	// labels are handed out in order of the smallest unvisited vertex
	return comps;
}

std::vector<VertexSet> connected_components(const Graph &g) {
	return components_without(g, {});
}

bool is_connected(const Graph &g) {
	return connected_components(g).size() <= 1;
}

VertexSet articulation_points(const Graph &g) {
	int n = g.num_vertices();
	std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
	std::vector<std::size_t> edge_pos(n, 0);
	std::vector<char> is_cut(n, 0);
	int timer = 0;
	std::vector<Vertex> stack;
	for(Vertex root = 0; root < n; ++root) {
		if(disc[root] >= 0)
			continue;
		int root_children = 0;
		disc[root] = low[root] = timer++;
		stack.push_back(root);
		while(!stack.empty()) {
			Vertex u = stack.back();
			auto nb = g.neighbors(u);
			if(edge_pos[u] < nb.size()) {
				Vertex w = nb[edge_pos[u]++];
				if(disc[w] < 0) {
					parent[w] = u;
					disc[w] = low[w] = timer++;
					if(u == root)
						++root_children;
					stack.push_back(w);
				} else if(w != parent[u]) {
					low[u] = std::min(low[u], disc[w]);
				}
			} else {
				stack.pop_back();
				Vertex p = parent[u];
				if(p >= 0) {
					low[p] = std::min(low[p], low[u]);
					if(p != root && low[u] >= disc[p])
						is_cut[p] = 1;
				}
			}
		}
		if(root_children >= 2)
			is_cut[root] = 1;
	}
	VertexSet out;
	for(Vertex v = 0; v < n; ++v)
		if(is_cut[v])
			out.push_back(v);
	return out;
}

std::string_view to_string(SubsetClass c) {
	switch(c) {
	case SubsetClass::Stable: return "stable";
	case SubsetClass::Clique: return "clique";
	case SubsetClass::Both: return "both";
	case SubsetClass::Neither: return "neither";
	}
	return "?";
}

bool is_stable(const Graph &g, std::span<const Vertex> s) {
	for(std::size_t i = 0; i < s.size(); ++i)
		for(std::size_t j = i + 1; j < s.size(); ++j)
			if(g.adjacent(s[i], s[j]))
				return false;
	return true;
}

bool is_clique(const Graph &g, std::span<const Vertex> s) {
	for(std::size_t i = 0; i < s.size(); ++i) {
		if(g.degree(s[i]) + 1 < static_cast<int>(s.size()))
			return false;
		for(std::size_t j = i + 1; j < s.size(); ++j)
			if(!g.adjacent(s[i], s[j]))
				return false;
	}
	return true;
}

SubsetClass classify_subset(const Graph &g, std::span<const Vertex> s) {
	if(s.size() <= 1)
		return SubsetClass::Both;
	if(is_stable(g, s))
		return SubsetClass::Stable;
	if(is_clique(g, s))
		return SubsetClass::Clique;
	return SubsetClass::Neither;
}

bool is_complete(const Graph &g) {
	std::size_t n = static_cast<std::size_t>(g.num_vertices());
	return n <= 1 || g.num_edges() == n * (n - 1) / 2;
}

VertexSet neighborhood(const Graph &g, std::span<const Vertex> s) {
	VertexSet out;
	for(Vertex v : s)
		out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
	out = normalized(std::move(out));
	return set_difference(out, s);
}

bool is_module(const Graph &g, std::span<const Vertex> m) {
	if(m.size() <= 1)
		return true;
	VertexSet ref = set_difference(g.neighbors(m[0]), m);
	for(std::size_t i = 1; i < m.size(); ++i)
		if(set_difference(g.neighbors(m[i]), m) != ref)
			return false;
	return true;
}

namespace {

struct DisjointSets {
	std::vector<int> parent;
	explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x) {
		while(parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(int a, int b) {
		a = find(a);
		b = find(b);
		if(a != b)
			parent[std::max(a, b)] = std::min(a, b);
	}
};

std::vector<VertexSet> collect_classes(DisjointSets &ds, int n) {
	std::vector<VertexSet> by_root(n);
	for(Vertex v = 0; v < n; ++v)
		by_root[ds.find(v)].push_back(v);
	std::vector<VertexSet> out;
	for(auto &c : by_root)
		if(!c.empty())
			out.push_back(std::move(c));
	// roots are class minima, so by_root is already ordered by minimum
	return out;
}

VertexSet closed_neighborhood(const Graph &g, Vertex v) {
	VertexSet c(g.neighbors(v).begin(), g.neighbors(v).end());
	c.insert(std::lower_bound(c.begin(), c.end(), v), v);
	return c;
}

} // namespace

std::vector<VertexSet> true_twin_classes(const Graph &g) {
	int n = g.num_vertices();
	DisjointSets ds(n);
	std::map<VertexSet, Vertex> seen;
	for(Vertex v = 0; v < n; ++v) {
		auto [it, fresh] = seen.emplace(closed_neighborhood(g, v), v);
		if(!fresh)
			ds.unite(it->second, v);
	}
	return collect_classes(ds, n);
}

std::vector<VertexSet> twin_partition(const Graph &g) {
	int n = g.num_vertices();
	DisjointSets ds(n);
	std::map<VertexSet, Vertex> open_seen, closed_seen;
	for(Vertex v = 0; v < n; ++v) {
		VertexSet open(g.neighbors(v).begin(), g.neighbors(v).end());
		auto [it, fresh] = open_seen.emplace(std::move(open), v);
		if(!fresh)
			ds.unite(it->second, v);
		auto [jt, fresh2] = closed_seen.emplace(closed_neighborhood(g, v), v);
		if(!fresh2)
			ds.unite(jt->second, v);
	}
	return collect_classes(ds, n);
}

std::optional<std::array<Vertex, 3>> find_clique_module_triplet(const Graph &g) {
	std::optional<std::array<Vertex, 3>> best;
	for(const auto &cls : true_twin_classes(g)) {
		if(cls.size() < 3)
			continue;
		std::array<Vertex, 3> t{cls[0], cls[1], cls[2]};
		if(!best || t < *best)
			best = t;
	}
	return best;
}

} // namespace scs
