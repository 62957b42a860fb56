#include "naive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "scs/rules.hpp"
#include "scs/structure.hpp"

namespace scs::testing {

namespace {

bool disconnected_without(const Graph &g, std::uint32_t s_mask) {
	int n = g.num_vertices();
	int start = -1, remaining = 0;
	for(int v = 0; v < n; ++v)
		if(!(s_mask >> v & 1)) {
			++remaining;
			if(start < 0)
				start = v;
		}
	if(remaining < 2)
		return false;
	std::vector<char> seen(n, 0);
	std::vector<int> stack{start};
	seen[start] = 1;
	int reached = 1;
	while(!stack.empty()) {
		int u = stack.back();
		stack.pop_back();
		for(Vertex w : g.neighbors(u))
			if(!seen[w] && !(s_mask >> w & 1)) {
				seen[w] = 1;
				++reached;
				stack.push_back(w);
			}
	}
	return reached < remaining;
}

bool stable_mask(const Graph &g, std::uint32_t s_mask) {
	for(int v = 0; v < g.num_vertices(); ++v)
		if(s_mask >> v & 1)
			for(Vertex w : g.neighbors(v))
				if(s_mask >> w & 1)
					return false;
	return true;
}

std::optional<int> naive_search(const Graph &g, bool minimize) {
	int n = g.num_vertices();
	if(n > 24)
		throw std::invalid_argument("naive enumeration is limited to 24 vertices");
	std::optional<int> best;
	for(std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
		int size = std::popcount(s);
		if(best && size >= *best)
			continue;
		if(stable_mask(g, s) && disconnected_without(g, s)) {
			best = size;
			if(!minimize)
				return best;
		}
	}
	return best;
}

} // namespace

bool naive_has_stable_cutset(const Graph &g) {
	return naive_search(g, false).has_value();
}

std::optional<int> naive_min_stable_cutset_size(const Graph &g) {
	return naive_search(g, true);
}

std::vector<std::uint8_t> canonical_form(const Graph &g) {
	int n = g.num_vertices();
	if(n > 11)
		throw std::invalid_argument("canonical form is limited to 11 vertices");
	// invariant: degree, then sorted neighbor degrees
	std::vector<std::vector<int>> inv(n);
	for(int v = 0; v < n; ++v) {
		inv[v].push_back(g.degree(v));
		std::vector<int> nd;
		for(Vertex w : g.neighbors(v))
			nd.push_back(g.degree(w));
		std::sort(nd.begin(), nd.end());
		inv[v].insert(inv[v].end(), nd.begin(), nd.end());
	}
	std::vector<int> order(n);
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b] || (inv[a] == inv[b] && a < b); });
	std::vector<std::pair<int, int>> blocks; // [begin, end) of equal invariants
	for(int i = 0; i < n;) {
		int j = i;
		while(j < n && inv[order[j]] == inv[order[i]])
			++j;
		blocks.emplace_back(i, j);
		i = j;
	}
	std::uint64_t best = 0;
	bool have = false;
	while(true) {
		std::uint64_t code = 0;
		for(int i = 0; i < n; ++i)
			for(int j = i + 1; j < n; ++j)
				code = code << 1 | (g.adjacent(order[i], order[j]) ? 1 : 0);
		if(!have || code > best) {
			best = code;
			have = true;
		}
		// odometer over the permutations of every block
		std::size_t b = 0;
		for(; b < blocks.size(); ++b) {
			auto [lo, hi] = blocks[b];
			if(std::next_permutation(order.begin() + lo, order.begin() + hi))
				break;
		}
		if(b == blocks.size())
			break;
	}
	std::vector<std::uint8_t> out{static_cast<std::uint8_t>(n)};
	for(int i = 0; i < 8; ++i)
		out.push_back(static_cast<std::uint8_t>(best >> (8 * i)));
	return out;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
	if(n < 0 || n > 8)
		throw std::invalid_argument("nonisomorphic_graphs supports 0 <= n <= 8");
	if(n == 0)
		return {Graph(0)};
	std::vector<Graph> out;
	std::set<std::vector<std::uint8_t>> seen;
	for(const Graph &h : nonisomorphic_graphs(n - 1)) {
		auto base = h.edges();
		for(std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
			auto edges = base;
			for(int v = 0; v < n - 1; ++v)
				if(mask >> v & 1)
					edges.emplace_back(v, n - 1);
			Graph g = Graph::from_edges(n, edges);
			if(seen.insert(canonical_form(g)).second)
				out.push_back(std::move(g));
		}
	}
	return out;
}

Graph random_graph(int n, double p, std::mt19937_64 &rng) {
	std::bernoulli_distribution coin(p);
	std::vector<Edge> edges;
	for(int u = 0; u < n; ++u)
		for(int v = u + 1; v < n; ++v)
			if(coin(rng))
				edges.emplace_back(u, v);
	return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, int m, std::mt19937_64 &rng) {
	// random spanning tree, then extra random edges up to m
	GraphBuilder b(n);
	std::set<Edge> used;
	for(int v = 1; v < n; ++v) {
		int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
		b.add_edge(u, v);
		used.emplace(u, v);
	}
	long long max_m = static_cast<long long>(n) * (n - 1) / 2;
	m = static_cast<int>(std::min<long long>(m, max_m));
	while(static_cast<int>(used.size()) < m) {
		int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
		int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
		if(u == v)
			continue;
		Edge e{std::min(u, v), std::max(u, v)};
		if(used.insert(e).second)
			b.add_edge(e.first, e.second);
	}
	return b.build();
}

Graph relabel(const Graph &g, const std::vector<Vertex> &perm) {
	std::vector<Edge> edges;
	for(auto [u, v] : g.edges())
		edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
	std::sort(edges.begin(), edges.end());
	return Graph::from_edges(g.num_vertices(), edges);
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng) {
	std::vector<Vertex> p(n);
	std::iota(p.begin(), p.end(), 0);
	std::shuffle(p.begin(), p.end(), rng);
	return p;
}

std::optional<std::array<Vertex, 3>> literal_clique_module_triplet(const Graph &g) {
	int n = g.num_vertices();
	for(int a = 0; a < n; ++a)
		for(int b = a + 1; b < n; ++b)
			for(int c = b + 1; c < n; ++c) {
				if(!g.adjacent(a, b) || !g.adjacent(a, c) || !g.adjacent(b, c))
					continue;
				bool module = true;
				for(int w = 0; w < n && module; ++w) {
					if(w == a || w == b || w == c)
						continue;
					bool x = g.adjacent(w, a), y = g.adjacent(w, b), z = g.adjacent(w, c);
					module = x == y && y == z;
				}
				if(module)
					return std::array<Vertex, 3>{a, b, c};
			}
	return std::nullopt;
}

ReductionOutcome reference_kernelize(const Graph &g, const Witness &x) {
	ReductionOutcome out;
	out.graph = g;
	out.witness = x;
	out.origin.resize(g.num_vertices());
	std::iota(out.origin.begin(), out.origin.end(), 0);

	auto apply = [&](RuleId id, const RuleResult &r) {
		if(!r.applicable())
			return false;
		if(r.kind == RuleResult::Kind::Decided) {
			out.decision = r.answer;
			out.trace.push_back({id, {}, r.answer});
			return true;
		}
		VertexSet deleted;
		for(Vertex v : r.deleted)
			deleted.push_back(out.origin[v]);
		VertexSet new_x, new_origin;
		for(Vertex v = 0, i = 0; v < out.graph.num_vertices(); ++v) {
			if(std::binary_search(r.deleted.begin(), r.deleted.end(), v))
				continue;
			if(std::binary_search(out.witness.vertices.begin(), out.witness.vertices.end(), v))
				new_x.push_back(i);
			new_origin.push_back(out.origin[v]);
			++i;
		}
		out.graph = r.graph;
		out.witness.vertices = new_x;
		out.origin = new_origin;
		out.trace.push_back({id, deleted, std::nullopt});
		return true;
	};

	while(!out.decision) {
		const Graph &h = out.graph;
		const VertexSet &xs = out.witness.vertices;
		bool changed = apply(RuleId::DisconnectedOrCutVertex, rr1_disconnected_or_cutvertex(h)) ||
		               apply(RuleId::Clique, rr2_clique(h)) ||
		               apply(RuleId::StableNeighborhood, rr3_stable_neighborhood(h));
		if(!changed) {
			switch(x.kind) {
			case WitnessKind::VertexCover:
				changed = apply(RuleId::VcMarking, rr7_vc_marking(h, {WitnessKind::VertexCover, xs}));
				break;
			case WitnessKind::TwinCover:
				changed = apply(RuleId::CliqueModule, rr6_clique_module(h)) ||
				          apply(RuleId::VcMarking, rr7_vc_marking(h, {WitnessKind::TwinCover, xs})) ||
				          apply(RuleId::TcPairMarking, rr8_tc_pair_marking(h, {WitnessKind::TwinCover, xs}));
				break;
			case WitnessKind::ModCluster:
			case WitnessKind::ModClique: {
				Witness w{WitnessKind::ModCluster, xs};
				changed = apply(RuleId::Simplicial, rr4_simplicial(h)) ||
				          apply(RuleId::SimpleComponent, rr9_simple_component(h, w)) ||
				          apply(RuleId::ShrinkCliqueComponents, rr10_shrink_clique_components(h, w)) ||
				          apply(RuleId::ClusterComponentMarking, rr11_cluster_component_marking(h, w));
				break;
			}
			case WitnessKind::ModCoCluster: {
				auto parts = cocluster_parts(h, xs);
				Witness w{WitnessKind::ModCoCluster, xs};
				if(parts.size() <= 1)
					changed = apply(RuleId::VcMarking, rr7_vc_marking(h, {WitnessKind::VertexCover, xs}));
				else
					changed = apply(RuleId::CoClusterShrinkStableSet, rr12_cocluster_shrink_stable_set(h, w)) ||
					          (parts.size() >= 4 &&
					           apply(RuleId::CoClusterReduceStableSets, rr13_cocluster_reduce_stable_sets(h, w)));
				break;
			}
			default:
				throw std::invalid_argument("no kernelizer for this kind");
			}
		}
		if(!changed)
			break;
	}
	return out;
}

Graph replay_trace(const Graph &g, const RuleTrace &trace) {
	VertexSet deleted;
	for(const auto &ev : trace)
		deleted.insert(deleted.end(), ev.deleted.begin(), ev.deleted.end());
	return g.without(normalized(std::move(deleted)));
}

} // namespace scs::testing
