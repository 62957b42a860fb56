#include "scs/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scs {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
	if(n < 0)
		throw std::invalid_argument("negative vertex count");
	Graph g(n);
	for(auto [u, v] : edges) {
		if(u < 0 || v < 0 || u >= n || v >= n)
			throw std::invalid_argument("edge endpoint out of range");
		if(u == v)
			throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
		g.adj_[u].push_back(v);
		g.adj_[v].push_back(u);
	}
	for(auto &nb : g.adj_) {
		std::sort(nb.begin(), nb.end());
		if(std::adjacent_find(nb.begin(), nb.end()) != nb.end())
			throw std::invalid_argument("duplicate edge");
	}
	g.m_ = edges.size();
	return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
	const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
	Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
	return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(m_);
	for(Vertex u = 0; u < num_vertices(); ++u)
		for(Vertex v : adj_[u])
			if(u < v)
				out.emplace_back(u, v);
	return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
	std::vector<Vertex> index(adj_.size(), -1);
	for(std::size_t i = 0; i < keep.size(); ++i)
		index[keep[i]] = static_cast<Vertex>(i);
	Graph h(static_cast<int>(keep.size()));
	std::size_t twice_m = 0;
	for(std::size_t i = 0; i < keep.size(); ++i) {
		auto &out = h.adj_[i];
		for(Vertex w : adj_[keep[i]])
			if(index[w] >= 0)
				out.push_back(index[w]);
		// keep is sorted, so the image of a sorted list stays sorted
		twice_m += out.size();
	}
	h.m_ = twice_m / 2;
	return h;
}

Graph Graph::without(std::span<const Vertex> removed) const {
	return induced(complement_set(num_vertices(), removed));
}

Graph Graph::complement() const {
	int n = num_vertices();
	Graph h(n);
	std::size_t twice_m = 0;
	for(Vertex u = 0; u < n; ++u) {
		auto it = adj_[u].begin();
		for(Vertex v = 0; v < n; ++v) {
			while(it != adj_[u].end() && *it < v)
				++it;
			if(v != u && (it == adj_[u].end() || *it != v))
				h.adj_[u].push_back(v);
		}
		twice_m += h.adj_[u].size();
	}
	h.m_ = twice_m / 2;
	return h;
}

Vertex GraphBuilder::add_vertex() {
	adj_.emplace_back();
	return static_cast<Vertex>(adj_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
	if(u == v)
		throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
	if(u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
		throw std::invalid_argument("edge endpoint out of range");
	adj_[u].push_back(v);
	adj_[v].push_back(u);
}

void GraphBuilder::add_clique(std::span<const Vertex> vs) {
	for(std::size_t i = 0; i < vs.size(); ++i)
		for(std::size_t j = i + 1; j < vs.size(); ++j)
			add_edge(vs[i], vs[j]);
}

Graph GraphBuilder::build() const {
	Graph g;
	g.adj_ = adj_;
	std::size_t twice_m = 0;
	for(auto &nb : g.adj_) {
		std::sort(nb.begin(), nb.end());
		nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
		twice_m += nb.size();
	}
	g.m_ = twice_m / 2;
	return g;
}

VertexSet complement_set(int n, std::span<const Vertex> removed) {
	VertexSet out;
	out.reserve(static_cast<std::size_t>(n) - std::min<std::size_t>(removed.size(), n));
	auto it = removed.begin();
	for(Vertex v = 0; v < n; ++v) {
		while(it != removed.end() && *it < v)
			++it;
		if(it == removed.end() || *it != v)
			out.push_back(v);
	}
	return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
	VertexSet out;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
	VertexSet out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
	VertexSet out;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet normalized(VertexSet s) {
	std::sort(s.begin(), s.end());
	s.erase(std::unique(s.begin(), s.end()), s.end());
	return s;
}

std::string format_set(std::span<const Vertex> s, int offset) {
	std::ostringstream os;
	for(std::size_t i = 0; i < s.size(); ++i) {
		if(i)
			os << ' ';
		os << s[i] + offset;
	}
	return os.str();
}

} // namespace scs
