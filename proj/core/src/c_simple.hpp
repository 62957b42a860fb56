#pragma once

// Shared by the oracle and the kernelizers; not installed.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scs/graph.hpp"

namespace scs::detail {

/// Decides whether clique C (sorted, given as `c`) has a C-simple cutset and
/// returns the first candidate S that is one, in the order N(C), N(C - c[0]),
/// N(C - c[1]), ... `hits` lists (outside neighbor, position in C) pairs and
/// is sorted here. `n` is the vertex count of the graph; `g` is only asked for
/// adjacency between outside neighbors. `connected` is called only when
/// |C| = 1.
template <class Connected>
std::optional<VertexSet> c_simple_candidate(const Graph &g, int n, std::span<const Vertex> c,
                                            std::vector<std::pair<Vertex, int>> &hits, Connected &&connected) {
	std::size_t size = c.size();
	std::sort(hits.begin(), hits.end());

	struct Outside {
		Vertex v;
		int count;
		int owner; // the only neighbor in C when count == 1
	};
	std::vector<Outside> t;
	for(auto [w, i] : hits) {
		if(t.empty() || t.back().v != w)
			t.push_back({w, 0, i});
		++t.back().count;
	}
	auto find_t = [&](Vertex w) {
		auto it = std::lower_bound(t.begin(), t.end(), w, [](const Outside &o, Vertex x) { return o.v < x; });
		return it != t.end() && it->v == w ? &*it : nullptr;
	};

	// edges inside N(C)
	std::vector<std::pair<const Outside *, const Outside *>> inner;
	for(const auto &a : t) {
		if(t.size() * t.size() <= static_cast<std::size_t>(g.degree(a.v)) * 4) {
			for(const auto &b : t)
				if(a.v < b.v && g.adjacent(a.v, b.v))
					inner.emplace_back(&a, &b);
		} else {
			for(Vertex w : g.neighbors(a.v))
				if(w > a.v)
					if(const Outside *b = find_t(w))
						inner.emplace_back(&a, b);
		}
	}

	if(size > 0 && inner.empty() && static_cast<std::size_t>(n) > t.size() + size) {
		VertexSet s;
		for(const auto &o : t)
			s.push_back(o.v);
		return s;
	}

	// per position in C: neighbors in N(C) seen by another C vertex, and private neighbors
	std::vector<int> shared(size, 0), owned(size, 0);
	for(auto [w, i] : hits) {
		const Outside *o = find_t(w);
		if(o->count >= 2)
			++shared[i];
		else
			++owned[i];
	}
	auto covers = [&](int i) {
		return std::all_of(inner.begin(), inner.end(), [&](const auto &e) {
			return (e.first->count == 1 && e.first->owner == i) || (e.second->count == 1 && e.second->owner == i);
		});
	};
	std::vector<char> allowed(size, inner.empty() ? 1 : 0);
	if(!inner.empty())
		for(const Outside *o : {inner.front().first, inner.front().second})
			if(o->count == 1 && !allowed[o->owner] && covers(o->owner))
				allowed[o->owner] = 1;

	for(std::size_t i = 0; i < size; ++i) {
		if(size == 1) {
			// C - v is empty, so S is empty
			if(!connected())
				return VertexSet{};
			break;
		}
		if(shared[i] != 0 || !allowed[i])
			continue;
		std::size_t s_size = 1 + t.size() - owned[i];
		if(static_cast<std::size_t>(n) <= s_size + size - 1)
			continue;
		VertexSet s{c[i]};
		for(const auto &o : t)
			if(!(o.count == 1 && o.owner == static_cast<int>(i)))
				s.push_back(o.v);
		std::sort(s.begin(), s.end());
		return s;
	}
	return std::nullopt;
}

} // namespace scs::detail
