#include "scs/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace scs {

namespace {

/// Splits `count` consecutive ids starting at `first` into groups of random
/// size in [1, max_size].
std::vector<VertexSet> random_groups(Vertex first, int count, int max_size, std::mt19937_64 &rng) {
	std::vector<VertexSet> groups;
	Vertex v = first;
	while(count > 0) {
		int size = std::uniform_int_distribution<int>(1, std::max(1, std::min(max_size, count)))(rng);
		VertexSet grp(size);
		std::iota(grp.begin(), grp.end(), v);
		groups.push_back(std::move(grp));
		v += size;
		count -= size;
	}
	return groups;
}

/// Splits into exactly `parts` nonempty groups of random sizes.
std::vector<VertexSet> random_partition(Vertex first, int count, int parts, std::mt19937_64 &rng) {
	std::vector<int> label(count);
	for(int i = 0; i < count; ++i)
		label[i] = i < parts ? i : std::uniform_int_distribution<int>(0, parts - 1)(rng);
	std::vector<VertexSet> groups(parts);
	for(int i = 0; i < count; ++i)
		groups[label[i]].push_back(first + i);
	return groups;
}

} // namespace

PlantedInstance generate_planted(const GeneratorConfig &cfg) {
	if(cfg.x_size < 0 || cfg.outside < 0)
		throw std::invalid_argument("sizes must be nonnegative");
	if(cfg.kind == WitnessKind::DominatingSet && cfg.x_size == 0 && cfg.outside > 0)
		throw std::invalid_argument("an empty set dominates nothing");
	std::mt19937_64 rng(cfg.seed);
	std::bernoulli_distribution coin(std::clamp(cfg.edge_prob, 0.0, 1.0));
	int k = cfg.x_size, n = k + cfg.outside;
	GraphBuilder b(n);

	std::bernoulli_distribution x_coin(std::clamp(cfg.x_edge_prob < 0 ? cfg.edge_prob : cfg.x_edge_prob, 0.0, 1.0));
	for(Vertex u = 0; u < k; ++u)
		for(Vertex v = u + 1; v < k; ++v)
			if(x_coin(rng))
				b.add_edge(u, v);

	// outside structure; each group shares its X-neighborhood when twins are required
	std::vector<VertexSet> groups;
	Vertex first = k;
	int outside = cfg.outside;
	switch(cfg.kind) {
	case WitnessKind::VertexCover:
	case WitnessKind::DominatingSet:
		groups = random_groups(first, outside, 1, rng);
		break;
	case WitnessKind::TwinCover:
	case WitnessKind::ModCluster:
		groups = random_groups(first, outside, cfg.max_group, rng);
		for(const auto &grp : groups)
			b.add_clique(grp);
		break;
	case WitnessKind::ModClique: {
		VertexSet all(outside);
		std::iota(all.begin(), all.end(), first);
		b.add_clique(all);
		groups = random_groups(first, outside, 1, rng);
		break;
	}
	case WitnessKind::ModCoCluster: {
		int parts = cfg.parts;
		if(parts <= 0) {
			int cap = std::max(1, std::min(outside, 6));
			parts = std::uniform_int_distribution<int>(1, cap)(rng);
		}
		parts = std::min(parts, std::max(outside, 1));
		auto sets = outside > 0 ? random_partition(first, outside, parts, rng) : std::vector<VertexSet>{};
		for(std::size_t i = 0; i < sets.size(); ++i)
			for(std::size_t j = i + 1; j < sets.size(); ++j)
				for(Vertex u : sets[i])
					for(Vertex v : sets[j])
						b.add_edge(u, v);
		groups = random_groups(first, outside, 1, rng);
		break;
	}
	case WitnessKind::ModLinearForest:
	case WitnessKind::ModPath: {
		std::vector<VertexSet> paths;
		if(cfg.kind == WitnessKind::ModLinearForest)
			paths = random_groups(first, outside, std::max(cfg.max_group, 1), rng);
		else if(outside > 0) {
			paths.emplace_back(outside);
			std::iota(paths[0].begin(), paths[0].end(), first);
		}
		for(const auto &path : paths)
			for(std::size_t i = 1; i < path.size(); ++i)
				b.add_edge(path[i - 1], path[i]);
		groups = random_groups(first, outside, 1, rng);
		break;
	}
	}

	int attach = std::min(cfg.min_attach, k);
	if(cfg.kind == WitnessKind::DominatingSet)
		attach = std::max(attach, std::min(1, k));
	auto draw_x_neighbors = [&]() {
		VertexSet xs;
		for(Vertex x = 0; x < k; ++x)
			if(coin(rng))
				xs.push_back(x);
		while(static_cast<int>(xs.size()) < attach) {
			Vertex x = std::uniform_int_distribution<int>(0, k - 1)(rng);
			if(!std::binary_search(xs.begin(), xs.end(), x))
				xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x);
		}
		return xs;
	};
	bool twins = cfg.kind == WitnessKind::TwinCover;
	for(const auto &grp : groups) {
		VertexSet xs = draw_x_neighbors();
		for(Vertex v : grp) {
			for(Vertex x : xs)
				b.add_edge(v, x);
			if(!twins)
				xs = draw_x_neighbors();
		}
	}
	if(cfg.kind == WitnessKind::DominatingSet) {
		// random edges among outside vertices as well
		for(Vertex u = k; u < n; ++u)
			for(Vertex v = u + 1; v < n; ++v)
				if(coin(rng))
					b.add_edge(u, v);
	}
	Graph g = b.build();

	VertexSet x(k);
	std::iota(x.begin(), x.end(), 0);
	if(!cfg.shuffle)
		return {std::move(g), {cfg.kind, std::move(x)}};

	std::vector<Vertex> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::shuffle(perm.begin(), perm.end(), rng);
	std::vector<Edge> edges;
	for(auto [u, v] : g.edges())
		edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
	std::sort(edges.begin(), edges.end());
	VertexSet px;
	for(Vertex v : x)
		px.push_back(perm[v]);
	return {Graph::from_edges(n, edges), {cfg.kind, normalized(std::move(px))}};
}

} // namespace scs
