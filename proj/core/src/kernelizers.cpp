#include "scs/kernelizers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "scs/oracle.hpp"
#include "scs/structure.hpp"

#include "c_simple.hpp"

namespace scs {

namespace {

using Mask = std::uint64_t;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
	if(a != 0 && b > kSaturated / a)
		return kSaturated;
	return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
	return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
	std::uint64_t r = 1;
	while(e-- > 0)
		r = sat_mul(r, base);
	return r;
}

void require(bool ok, const char *what) {
	if(!ok)
		throw std::invalid_argument(what);
}

void require_witness(const Graph &g, const VertexSet &x, WitnessKind structure) {
	require(validate_witness(g, x, structure), "invalid witness");
}

/// Vertices outside X with no neighbor outside X.
VertexSet isolated_outside(const Graph &g, const VertexSet &x) {
	std::vector<char> in_x(g.num_vertices(), 0);
	for(Vertex v : x)
		in_x[v] = 1;
	VertexSet out;
	for(Vertex v = 0; v < g.num_vertices(); ++v) {
		if(in_x[v])
			continue;
		auto nb = g.neighbors(v);
		if(std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return in_x[w] != 0; }))
			out.push_back(v);
	}
	return out;
}

bool adjacent_to_all(const Graph &g, Vertex v, std::span<const Vertex> xs) {
	return std::all_of(xs.begin(), xs.end(), [&](Vertex x) { return g.adjacent(v, x); });
}

/// Calls f(tuple) for every tuple in X^arity in lexicographic order.
template <class F>
void for_each_tuple(const VertexSet &x, int arity, F &&f) {
	if(x.empty())
		return;
	std::vector<std::size_t> idx(arity, 0);
	std::vector<Vertex> t(arity);
	while(true) {
		for(int i = 0; i < arity; ++i)
			t[i] = x[idx[i]];
		f(t);
		int i = arity - 1;
		while(i >= 0 && idx[i] + 1 == x.size())
			idx[i--] = 0;
		if(i < 0)
			return;
		++idx[i];
	}
}

/// Bitmask of X-neighbors (by position in X) for each vertex.
std::vector<Mask> x_masks(const Graph &g, const VertexSet &x) {
	require(x.size() <= 64, "marking supports at most 64 witness vertices");
	std::vector<Mask> m(g.num_vertices(), 0);
	for(std::size_t i = 0; i < x.size(); ++i)
		for(Vertex w : g.neighbors(x[i]))
			m[w] |= Mask{1} << i;
	return m;
}

/// Lexicographically smallest assignment of distinct vertices of `pool`
/// (sorted) to roles, role i needing all X-neighbors in need[i].
class GroupFinder {
public:
	GroupFinder(const std::vector<Mask> &xm, const VertexSet &pool, std::span<const Mask> need)
	    : need_(need.begin(), need.end()), cand_(need.size()) {
		for(std::size_t r = 0; r < need_.size(); ++r)
			for(Vertex v : pool)
				if((xm[v] & need_[r]) == need_[r])
					cand_[r].push_back(v);
	}

	std::optional<VertexSet> find() {
		chosen_.clear();
		if(!hall_ok(0))
			return std::nullopt;
		if(!extend(0))
			return std::nullopt;
		return chosen_;
	}

private:
	bool used(Vertex v) const { return std::find(chosen_.begin(), chosen_.end(), v) != chosen_.end(); }

	/// Hall's condition for roles [from, end) with the chosen vertices removed.
	bool hall_ok(std::size_t from) const {
		std::size_t k = need_.size() - from;
		for(unsigned sub = 1; sub < (1u << k); ++sub) {
			VertexSet uni;
			for(std::size_t i = 0; i < k; ++i)
				if(sub & (1u << i))
					for(Vertex v : cand_[from + i])
						if(!used(v))
							uni.push_back(v);
			uni = normalized(std::move(uni));
			if(uni.size() < static_cast<std::size_t>(std::popcount(sub)))
				return false;
		}
		return true;
	}

	bool extend(std::size_t r) {
		if(r == need_.size())
			return true;
		for(Vertex v : cand_[r]) {
			if(used(v))
				continue;
			chosen_.push_back(v);
			if(hall_ok(r + 1) && extend(r + 1))
				return true;
			chosen_.pop_back();
		}
		return false;
	}

	std::vector<Mask> need_;
	std::vector<VertexSet> cand_;
	VertexSet chosen_;
};

// Unchecked rule bodies. `x` is sorted and valid for the rule's structure.

RuleResult vc_marking(const Graph &g, const VertexSet &x, const VertexSet &eligible) {
	std::uint64_t k = x.size();
	if(eligible.size() <= sat_pow(k, 3))
		return RuleResult::not_applicable();
	VertexSet marked = mark_vc_triples(g, x, eligible).marked();
	return RuleResult::reduced(g, set_difference(eligible, marked));
}

std::vector<VertexSet> size_two_components(const Graph &g, const VertexSet &x) {
	std::vector<VertexSet> pairs;
	for(auto &c : components_without(g, x)) {
		require(c.size() <= 2, "component of G - X larger than two");
		if(c.size() == 2)
			pairs.push_back(std::move(c));
	}
	return pairs;
}

RuleResult tc_pair_marking(const Graph &g, const VertexSet &x) {
	auto pairs = size_two_components(g, x);
	std::uint64_t k = x.size();
	if(pairs.size() <= sat_pow(k, 2))
		return RuleResult::not_applicable();
	VertexSet marked = mark_tc_pairs(g, x).marked();
	for(const auto &c : pairs) {
		if(std::binary_search(marked.begin(), marked.end(), c[0]))
			continue;
		if(has_c_simple_cutset(g, c))
			return RuleResult::decided(true);
		return RuleResult::reduced(g, c);
	}
	throw std::logic_error("no unmarked size-two component above the marking threshold");
}

RuleResult simple_component(const Graph &g, const VertexSet &x) {
	bool connected = is_connected(g);
	for(const auto &c : components_without(g, x))
		if(has_c_simple_cutset(g, c, connected))
			return RuleResult::decided(true);
	return RuleResult::not_applicable();
}

/// Lowest-id vertex the clique shrinking rule may delete.
std::optional<Vertex> shrinkable_vertex(const Graph &g, const VertexSet &x) {
	std::vector<int> inside(g.num_vertices(), 0);
	std::vector<char> in_x(g.num_vertices(), 0);
	for(Vertex v : x)
		in_x[v] = 1;
	auto comps = components_without(g, x);
	Vertex best = std::numeric_limits<Vertex>::max();
	for(const auto &c : comps) {
		// for every x adjacent to C: |N(x) ∩ C|
		for(Vertex v : c)
			for(Vertex w : g.neighbors(v))
				if(in_x[w])
					inside[w] = 0;
		for(Vertex v : c)
			for(Vertex w : g.neighbors(v))
				if(in_x[w])
					++inside[w];
		for(Vertex v : c) {
			if(v >= best)
				break;
			bool ok = true;
			for(Vertex w : g.neighbors(v))
				if(in_x[w] && inside[w] - 1 < 2) {
					ok = false;
					break;
				}
			if(ok) {
				best = v;
				break;
			}
		}
	}
	if(best == std::numeric_limits<Vertex>::max())
		return std::nullopt;
	return best;
}

RuleResult shrink_clique_components(const Graph &g, const VertexSet &x) {
	auto v = shrinkable_vertex(g, x);
	return v ? RuleResult::reduced(g, {*v}) : RuleResult::not_applicable();
}

std::uint64_t cluster_component_threshold(std::uint64_t k) {
	return sat_add(sat_pow(k, 3), sat_mul(3, sat_pow(k, 4)));
}

/// Deletes the first component with no marked vertex, given marked flags.
RuleResult delete_unmarked_component(const Graph &g, const std::vector<VertexSet> &comps,
                                     const std::vector<char> &marked) {
	for(const auto &c : comps)
		if(std::none_of(c.begin(), c.end(), [&](Vertex v) { return marked[v] != 0; }))
			return RuleResult::reduced(g, c);
	throw std::logic_error("no unmarked component above the marking threshold");
}

std::vector<char> flags(int n, const VertexSet &s) {
	std::vector<char> f(n, 0);
	for(Vertex v : s)
		f[v] = 1;
	return f;
}

RuleResult cluster_component_marking(const Graph &g, const VertexSet &x) {
	auto comps = components_without(g, x);
	if(comps.size() <= cluster_component_threshold(x.size()))
		return RuleResult::not_applicable();
	return delete_unmarked_component(g, comps, flags(g.num_vertices(), mark_cluster_components(g, x).marked()));
}

const VertexSet *oversized_part(const std::vector<VertexSet> &parts, std::uint64_t k) {
	std::uint64_t limit = sat_pow(k, 2);
	for(const auto &p : parts)
		if(p.size() > limit)
			return &p;
	return nullptr;
}

/// Lowest unmarked vertex of the first oversized stable set.
std::optional<Vertex> cocluster_shrinkable(const Graph &g, const VertexSet &x, const std::vector<VertexSet> &parts) {
	const VertexSet *part = oversized_part(parts, x.size());
	if(!part)
		return std::nullopt;
	VertexSet marked = mark_cocluster_part(g, x, *part).marked();
	for(Vertex v : *part)
		if(!std::binary_search(marked.begin(), marked.end(), v))
			return v;
	throw std::logic_error("no unmarked vertex in an oversized stable set");
}

RuleResult cocluster_shrink(const Graph &g, const VertexSet &x, const std::vector<VertexSet> &parts) {
	auto v = cocluster_shrinkable(g, x, parts);
	return v ? RuleResult::reduced(g, {*v}) : RuleResult::not_applicable();
}

RuleResult cocluster_reduce(const Graph &g, const VertexSet &x, const std::vector<VertexSet> &parts) {
	std::vector<int> part_of(g.num_vertices(), -1);
	for(std::size_t i = 0; i < parts.size(); ++i)
		for(Vertex v : parts[i])
			part_of[v] = static_cast<int>(i);
	std::vector<int> touched(g.num_vertices(), 0);
	for(Vertex w : x) {
		std::vector<int> ps;
		for(Vertex u : g.neighbors(w))
			if(part_of[u] >= 0)
				ps.push_back(part_of[u]);
		std::sort(ps.begin(), ps.end());
		touched[w] = static_cast<int>(std::unique(ps.begin(), ps.end()) - ps.begin());
	}
	for(Vertex v = 0; v < g.num_vertices(); ++v) {
		if(part_of[v] < 0)
			continue;
		auto nb = g.neighbors(v);
		bool ok = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return part_of[w] >= 0 || touched[w] >= 3; });
		if(ok)
			return RuleResult::reduced(g, {v});
	}
	return RuleResult::not_applicable();
}

std::vector<VertexSet> checked_parts(const Graph &g, const VertexSet &x, std::size_t min_parts) {
	auto parts = cocluster_parts(g, x);
	require(parts.size() >= min_parts, min_parts == 2 ? "G - X is not a join of at least two stable sets"
	                                                  : "G - X is not a join of at least four stable sets");
	return parts;
}

const VertexSet &sorted_vertices(const Witness &w) {
	require(std::is_sorted(w.vertices.begin(), w.vertices.end()) &&
	            std::adjacent_find(w.vertices.begin(), w.vertices.end()) == w.vertices.end(),
	        "witness vertices must be sorted and distinct");
	return w.vertices;
}

bool is_kernel_kind(WitnessKind k) {
	switch(k) {
	case WitnessKind::VertexCover:
	case WitnessKind::TwinCover:
	case WitnessKind::ModCluster:
	case WitnessKind::ModClique:
	case WitnessKind::ModCoCluster:
		return true;
	default:
		return false;
	}
}

/// Mutable state of one pipeline run.
class Pipeline {
public:
	Pipeline(const Graph &g, const Witness &x, bool incremental) : kind_(x.kind), incremental_(incremental) {
		out_.graph = g;
		out_.witness = x;
		out_.origin.resize(g.num_vertices());
		std::iota(out_.origin.begin(), out_.origin.end(), 0);
	}

	ReductionOutcome run() {
		while(step()) {
		}
		if(!out_.decided() && !satisfies_kernel_bounds(out_.graph, out_.witness))
			throw std::logic_error("kernel size bound violated");
		return std::move(out_);
	}

private:
	const Graph &g() const { return out_.graph; }
	const VertexSet &x() const { return out_.witness.vertices; }

	/// Applies the first applicable rule. False at the fixpoint or on a decision.
	bool step() {
		if(try_rule(RuleId::DisconnectedOrCutVertex, rr1_disconnected_or_cutvertex(g())) ||
		   try_rule(RuleId::Clique, rr2_clique(g())) ||
		   try_rule(RuleId::StableNeighborhood, rr3_stable_neighborhood(g())))
			return !out_.decided();
		bool changed = false;
		switch(kind_) {
		case WitnessKind::VertexCover:
			changed = try_rule(RuleId::VcMarking, vc_marking(g(), x(), complement_set(g().num_vertices(), x())));
			break;
		case WitnessKind::TwinCover:
			changed = try_rule(RuleId::CliqueModule, rr6_clique_module(g())) ||
			          try_rule(RuleId::VcMarking, vc_marking(g(), x(), isolated_outside(g(), x()))) ||
			          try_rule(RuleId::TcPairMarking, tc_pair_marking(g(), x()));
			break;
		case WitnessKind::ModCluster:
		case WitnessKind::ModClique:
			changed = try_rule(RuleId::Simplicial, rr4_simplicial(g())) ||
			          try_rule(RuleId::SimpleComponent, simple_component(g(), x())) ||
			          shrink_cliques() || cluster_marking();
			break;
		case WitnessKind::ModCoCluster: {
			auto parts = cocluster_parts(g(), x());
			if(parts.size() <= 1)
				changed = try_rule(RuleId::VcMarking,
				                   vc_marking(g(), x(), complement_set(g().num_vertices(), x())));
			else
				changed = shrink_stable_sets(parts) ||
				          (parts.size() >= 4 &&
				           try_rule(RuleId::CoClusterReduceStableSets, cocluster_reduce(g(), x(), parts)));
			break;
		}
		default:
			break;
		}
		return changed && !out_.decided();
	}

	/// The cluster marking rule. Marks stay valid across consecutive
	/// applications: deleting an unmarked component never changes which group
	/// the earlier components offer for a tuple, so they are kept in input ids
	/// until some other rule changes the graph.
	bool cluster_marking() {
		auto comps = components_without(g(), x());
		if(comps.size() <= cluster_component_threshold(x().size())) {
			marked_origin_.reset();
			return false;
		}
		if(!marked_origin_) {
			marked_origin_ = VertexSet{};
			for(Vertex v : mark_cluster_components(g(), x()).marked())
				marked_origin_->push_back(out_.origin[v]);
		}
		std::vector<char> marked(g().num_vertices(), 0);
		for(Vertex v = 0; v < g().num_vertices(); ++v)
			marked[v] = std::binary_search(marked_origin_->begin(), marked_origin_->end(), out_.origin[v]);
		auto keep = std::move(marked_origin_);
		bool changed = try_rule(RuleId::ClusterComponentMarking, delete_unmarked_component(g(), comps, marked));
		marked_origin_ = std::move(keep);
		return changed;
	}

	/// The clique shrinking rule. A run of consecutive applications is
	/// replayed on the current graph with deletion marks, as long as each
	/// deletion can be shown cheaply to leave the earlier rules inapplicable;
	/// the trace is the same as applying the rule one step at a time.
	bool shrink_cliques() {
		auto first = shrinkable_vertex(g(), x());
		if(!first)
			return false;
		if(!incremental_)
			return try_rule(RuleId::ShrinkCliqueComponents, RuleResult::reduced(g(), {*first}));
		marked_origin_.reset();
		VertexSet run = shrink_run(*first);
		for(Vertex v : run)
			out_.trace.push_back({RuleId::ShrinkCliqueComponents, {out_.origin[v]}, std::nullopt});
		std::sort(run.begin(), run.end());
		replace_graph(run, g().without(run));
		return true;
	}

	/// Deletes `first` and keeps going while the next state is provably one
	/// where rr1-rr4 and rr9 do not apply and rr10 does. Returns the deleted
	/// vertices in order.
	VertexSet shrink_run(Vertex first) {
		const Graph &g0 = g();
		const VertexSet &xs = x();
		int n0 = g0.num_vertices();
		std::vector<char> in_x(n0, 0);
		for(Vertex w : xs)
			in_x[w] = 1;
		std::vector<int> label = component_labels(g0, xs);
		std::vector<VertexSet> comps = components_without(g0, xs);

		// X-neighbors of outside vertices, and X-neighbors of X vertices
		std::vector<VertexSet> xnb(n0);
		for(Vertex w : xs)
			for(Vertex u : g0.neighbors(w))
				xnb[u].push_back(w);
		auto pairwise_adjacent = [&](const VertexSet &s) {
			for(std::size_t i = 0; i < s.size(); ++i)
				for(std::size_t j = i + 1; j < s.size(); ++j)
					if(!g0.adjacent(s[i], s[j]))
						return false;
			return true;
		};
		std::vector<char> xnb_clique(n0, 0);
		for(Vertex u = 0; u < n0; ++u)
			xnb_clique[u] = pairwise_adjacent(xnb[u]);
		// X vertices seeing two components stay that way: a deletion never
		// takes an X vertex below two neighbors in a component it sees
		std::vector<char> spread(n0, 0);
		for(Vertex w : xs) {
			int seen = -1;
			for(Vertex u : g0.neighbors(w))
				if(!in_x[u]) {
					if(seen >= 0 && label[u] != seen)
						spread[w] = 1;
					seen = label[u];
				}
		}

		std::vector<char> deleted(n0, 0);
		std::vector<int> count(n0, 0);
		std::vector<VertexSet> live = comps;
		auto count_neighbors = [&](const VertexSet &c) {
			for(Vertex u : c)
				for(Vertex w : xnb[u])
					count[w] = 0;
			for(Vertex u : c)
				for(Vertex w : xnb[u])
					++count[w];
		};
		constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
		// expects count_neighbors(c) to be current
		auto eligible = [&](const VertexSet &c) {
			for(Vertex u : c)
				if(std::all_of(xnb[u].begin(), xnb[u].end(), [&](Vertex w) { return count[w] >= 3; }))
					return u;
			return kNone;
		};
		std::vector<Vertex> best(comps.size());
		for(std::size_t i = 0; i < comps.size(); ++i) {
			count_neighbors(comps[i]);
			best[i] = eligible(comps[i]);
		}

		VertexSet order;
		std::uint64_t n = n0, m = g0.num_edges();
		Vertex v = first;
		while(true) {
			int ci = label[v];
			VertexSet &c = live[ci];
			std::size_t before = c.size();
			deleted[v] = 1;
			order.push_back(v);
			c.erase(std::lower_bound(c.begin(), c.end(), v));
			n -= 1;
			m -= (before - 1) + xnb[v].size();

			// rr1: N(v) - u stays connected through C - v - u for every u, so
			// no cut vertex appears. rr3: every changed neighborhood keeps two
			// vertices of C - v.
			if(before < 4)
				break;
			if(m == n * (n - 1) / 2)
				break;
			// rr4: only neighbors of v changed
			count_neighbors(c);
			bool simplicial = std::any_of(c.begin(), c.end(), [&](Vertex u) {
				return xnb_clique[u] && std::all_of(xnb[u].begin(), xnb[u].end(),
				                                    [&](Vertex w) { return count[w] == static_cast<int>(c.size()); });
			});
			for(Vertex w : xnb[v]) {
				if(simplicial || spread[w] || !xnb_clique[w])
					continue;
				// N(w) - v lies in C and X: a clique iff each neighbor of w in C
				// sees all X-neighbors of w
				simplicial = std::all_of(c.begin(), c.end(), [&](Vertex u) {
					return !std::binary_search(xnb[u].begin(), xnb[u].end(), w) ||
					       std::includes(xnb[u].begin(), xnb[u].end(), xnb[w].begin(), xnb[w].end());
				});
			}
			if(simplicial)
				break;
			// rr9: other components only lose room outside S, so only C - v can change
			std::vector<std::pair<Vertex, int>> hits;
			for(std::size_t i = 0; i < c.size(); ++i)
				for(Vertex w : xnb[c[i]])
					hits.emplace_back(w, static_cast<int>(i));
			if(detail::c_simple_candidate(g0, static_cast<int>(n), c, hits, [] { return true; }))
				break;

			best[ci] = eligible(c);
			auto next = std::min_element(best.begin(), best.end());
			if(next == best.end() || *next == kNone)
				break;
			v = *next;
		}
		return order;
	}

	/// The co-cluster stable set rule, with runs replayed like shrink_cliques.
	bool shrink_stable_sets(const std::vector<VertexSet> &parts) {
		auto first = cocluster_shrinkable(g(), x(), parts);
		if(!first)
			return false;
		if(!incremental_ || x().size() > 64)
			return try_rule(RuleId::CoClusterShrinkStableSet, RuleResult::reduced(g(), {*first}));
		VertexSet run = stable_set_run(*first, parts);
		for(Vertex v : run)
			out_.trace.push_back({RuleId::CoClusterShrinkStableSet, {out_.origin[v]}, std::nullopt});
		std::sort(run.begin(), run.end());
		replace_graph(run, g().without(run));
		return true;
	}

	/// Deletes `first` and keeps going while the next state is provably one
	/// where rr1-rr3 do not apply, the stable sets stay the same minus the
	/// deleted vertices, and rr12 applies.
	VertexSet stable_set_run(Vertex first, const std::vector<VertexSet> &parts) {
		const Graph &g0 = g();
		const VertexSet &xs = x();
		int n0 = g0.num_vertices();
		std::size_t k = xs.size();
		std::uint64_t limit = sat_pow(k, 2);
		auto xm = x_masks(g0, xs);
		std::vector<int> part_of(n0, -1);
		for(std::size_t i = 0; i < parts.size(); ++i)
			for(Vertex v : parts[i])
				part_of[v] = static_cast<int>(i);

		// live neighbors of each X vertex (by position) per stable set
		std::vector<std::vector<int>> per_part(k, std::vector<int>(parts.size(), 0));
		std::vector<int> outside_deg(k, 0), parts_seen(k, 0);
		for(std::size_t i = 0; i < k; ++i)
			for(Vertex u : g0.neighbors(xs[i]))
				if(part_of[u] >= 0 && per_part[i][part_of[u]]++ == 0)
					++parts_seen[i];
		for(std::size_t i = 0; i < k; ++i)
			for(int c : per_part[i])
				outside_deg[i] += c;
		auto x_edge = [&](Vertex u) {
			for(Mask b = xm[u]; b; b &= b - 1)
				if(xm[xs[std::countr_zero(b)]] & xm[u])
					return true;
			return false;
		};

		std::vector<VertexSet> live = parts;
		std::uint64_t outside = n0 - k;
		VertexSet order;
		std::uint64_t n = n0, m = g0.num_edges();
		Vertex v = first;
		while(true) {
			int pi = part_of[v];
			VertexSet &p = live[pi];
			std::uint64_t rest = outside - p.size();
			order.push_back(v);
			p.erase(std::lower_bound(p.begin(), p.end(), v));
			--outside;
			--n;
			m -= rest + std::popcount(xm[v]);
			for(Mask b = xm[v]; b; b &= b - 1) {
				int i = std::countr_zero(b);
				--outside_deg[i];
				if(--per_part[i][pi] == 0)
					--parts_seen[i];
			}

			// rr1: P - v - u and the other sets minus u stay joined, and each
			// X-neighbor of v keeps an outside neighbor other than u
			if(p.size() < 2 || rest < 2)
				break;
			bool ok = true;
			for(Mask b = xm[v]; b && ok; b &= b - 1) {
				int i = std::countr_zero(b);
				// rr3 for X-neighbors: two stable sets in N(w) give an edge
				ok = outside_deg[i] >= 2 && parts_seen[i] >= 2;
			}
			if(!ok || m == n * (n - 1) / 2)
				break;
			// rr3 for the other sets: with three or more sets N(u) meets two of
			// them; with two, N(u) is P - v plus X-neighbors of u
			if(parts.size() == 2) {
				const VertexSet &q = live[1 - pi];
				ok = std::all_of(q.begin(), q.end(), [&](Vertex u) {
					if(x_edge(u))
						return true;
					for(Mask b = xm[u]; b; b &= b - 1)
						if(per_part[std::countr_zero(b)][pi] > 0)
							return true;
					return false;
				});
				if(!ok)
					break;
			}

			// rr12 on the new graph: sets are ordered by their lowest vertex
			const VertexSet *next = nullptr;
			for(const auto &q : live)
				if(q.size() > limit && (!next || q.front() < next->front()))
					next = &q;
			if(!next)
				break;
			// the marks depend only on the unordered pair of X positions
			std::vector<char> marked(next->size(), 0);
			for(std::size_t a = 0; a < k; ++a)
				for(std::size_t b = a; b < k; ++b) {
					Mask need = (Mask{1} << a) | (Mask{1} << b);
					for(std::size_t j = 0; j < next->size(); ++j)
						if((xm[(*next)[j]] & need) == need) {
							marked[j] = 1;
							break;
						}
				}
			auto free = std::find(marked.begin(), marked.end(), 0);
			if(free == marked.end())
				break;
			v = (*next)[free - marked.begin()];
		}
		return order;
	}

	bool try_rule(RuleId id, RuleResult r) {
		if(r.kind == RuleResult::Kind::NotApplicable)
			return false;
		marked_origin_.reset();
		if(r.kind == RuleResult::Kind::Decided) {
			out_.decision = r.answer;
			out_.trace.push_back({id, {}, r.answer});
			return true;
		}
		VertexSet deleted_orig;
		for(Vertex v : r.deleted)
			deleted_orig.push_back(out_.origin[v]);
		replace_graph(r.deleted, std::move(r.graph));
		out_.trace.push_back({id, std::move(deleted_orig), std::nullopt});
		return true;
	}

	/// Installs g - deleted (sorted) and renumbers the witness and origins.
	void replace_graph(const VertexSet &deleted, Graph h) {
		VertexSet survivors = complement_set(g().num_vertices(), deleted);
		VertexSet new_x;
		std::size_t j = 0;
		for(std::size_t i = 0; i < survivors.size(); ++i) {
			while(j < x().size() && x()[j] < survivors[i])
				++j;
			if(j < x().size() && x()[j] == survivors[i])
				new_x.push_back(static_cast<Vertex>(i));
		}
		VertexSet origin;
		for(Vertex v : survivors)
			origin.push_back(out_.origin[v]);
		out_.witness.vertices = std::move(new_x);
		out_.origin = std::move(origin);
		out_.graph = std::move(h);
	}

	WitnessKind kind_;
	bool incremental_;
	ReductionOutcome out_;
	std::optional<VertexSet> marked_origin_;
};

} // namespace

VertexSet MarkingLedger::marked() const {
	VertexSet all;
	for(const auto &e : entries)
		all.insert(all.end(), e.marked.begin(), e.marked.end());
	return normalized(std::move(all));
}

MarkingLedger mark_vc_triples(const Graph &g, const VertexSet &x, const VertexSet &eligible) {
	MarkingLedger ledger;
	std::map<VertexSet, VertexSet> seen; // distinct X-vertices of a tuple -> mark
	for_each_tuple(x, 3, [&](const std::vector<Vertex> &t) {
		VertexSet key = normalized(t);
		auto it = seen.find(key);
		if(it == seen.end()) {
			VertexSet mark;
			for(Vertex v : eligible)
				if(adjacent_to_all(g, v, key)) {
					mark.push_back(v);
					break;
				}
			it = seen.emplace(key, std::move(mark)).first;
		}
		ledger.entries.push_back({t, 1, it->second});
	});
	return ledger;
}

MarkingLedger mark_tc_pairs(const Graph &g, const VertexSet &x) {
	auto pairs = size_two_components(g, x);
	MarkingLedger ledger;
	for_each_tuple(x, 2, [&](const std::vector<Vertex> &t) {
		VertexSet mark;
		for(const auto &c : pairs)
			if(adjacent_to_all(g, c[0], t) && adjacent_to_all(g, c[1], t)) {
				mark = c;
				break;
			}
		ledger.entries.push_back({t, 1, std::move(mark)});
	});
	return ledger;
}

MarkingLedger mark_cluster_components(const Graph &g, const VertexSet &x) {
	MarkingLedger ledger;
	if(x.empty())
		return ledger;
	auto xm = x_masks(g, x);
	auto comps = components_without(g, x);
	VertexSet outside = complement_set(g.num_vertices(), x);
	auto bit = [&](Vertex v) {
		return Mask{1} << (std::lower_bound(x.begin(), x.end(), v) - x.begin());
	};

	std::map<Mask, VertexSet> single;
	for_each_tuple(x, 3, [&](const std::vector<Vertex> &t) {
		Mask need = bit(t[0]) | bit(t[1]) | bit(t[2]);
		auto it = single.find(need);
		if(it == single.end()) {
			VertexSet mark;
			for(Vertex v : outside)
				if((xm[v] & need) == need) {
					mark.push_back(v);
					break;
				}
			it = single.emplace(need, std::move(mark)).first;
		}
		ledger.entries.push_back({t, 1, it->second});
	});

	std::map<std::vector<Mask>, VertexSet> groups;
	auto group_for = [&](const std::vector<Mask> &roles) -> const VertexSet & {
		auto it = groups.find(roles);
		if(it != groups.end())
			return it->second;
		VertexSet found;
		for(const auto &c : comps) {
			if(c.size() < roles.size())
				continue;
			if(auto grp = GroupFinder(xm, c, roles).find()) {
				found = std::move(*grp);
				break;
			}
		}
		return groups.emplace(roles, std::move(found)).first->second;
	};
	for(int pass = 2; pass <= 4; ++pass) {
		for_each_tuple(x, 4, [&](const std::vector<Vertex> &t) {
			std::vector<Mask> roles;
			if(pass == 2)
				roles = {bit(t[0]) | bit(t[1]), bit(t[2]) | bit(t[3])};
			else if(pass == 3)
				roles = {bit(t[0]) | bit(t[1]), bit(t[2]), bit(t[3])};
			else
				roles = {bit(t[0]), bit(t[1]), bit(t[2]), bit(t[3])};
			ledger.entries.push_back({t, pass, group_for(roles)});
		});
	}
	return ledger;
}

MarkingLedger mark_cocluster_part(const Graph &g, const VertexSet &x, const VertexSet &part) {
	MarkingLedger ledger;
	for_each_tuple(x, 2, [&](const std::vector<Vertex> &t) {
		VertexSet mark;
		for(Vertex v : part)
			if(adjacent_to_all(g, v, t)) {
				mark.push_back(v);
				break;
			}
		ledger.entries.push_back({t, 1, std::move(mark)});
	});
	return ledger;
}

RuleResult rr7_vc_marking(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	if(w.kind == WitnessKind::TwinCover) {
		require_witness(g, x, WitnessKind::TwinCover);
		return vc_marking(g, x, isolated_outside(g, x));
	}
	require_witness(g, x, WitnessKind::VertexCover);
	return vc_marking(g, x, complement_set(g.num_vertices(), x));
}

RuleResult rr8_tc_pair_marking(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::TwinCover);
	return tc_pair_marking(g, x);
}

RuleResult rr9_simple_component(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::ModCluster);
	return simple_component(g, x);
}

RuleResult rr10_shrink_clique_components(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::ModCluster);
	return shrink_clique_components(g, x);
}

RuleResult rr11_cluster_component_marking(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::ModCluster);
	return cluster_component_marking(g, x);
}

RuleResult rr12_cocluster_shrink_stable_set(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::ModCoCluster);
	return cocluster_shrink(g, x, checked_parts(g, x, 2));
}

RuleResult rr13_cocluster_reduce_stable_sets(const Graph &g, const Witness &w) {
	const VertexSet &x = sorted_vertices(w);
	require_witness(g, x, WitnessKind::ModCoCluster);
	return cocluster_reduce(g, x, checked_parts(g, x, 4));
}

ReductionOutcome kernelize(const Graph &g, const Witness &x, const KernelizeOptions &opts) {
	require(is_kernel_kind(x.kind), "no kernelizer for this witness kind");
	sorted_vertices(x);
	require(validate_witness(g, x), "invalid witness");
	return Pipeline(g, x, opts.incremental).run();
}

std::uint64_t kernel_vertex_bound(WitnessKind kind, std::uint64_t k, std::size_t parts) {
	switch(kind) {
	case WitnessKind::VertexCover:
		return sat_add(k, sat_pow(k, 3));
	case WitnessKind::TwinCover:
		return sat_add(k, sat_add(sat_pow(k, 3), sat_mul(2, sat_pow(k, 2))));
	case WitnessKind::ModCluster:
		return sat_add(k, sat_mul(sat_mul(2, k), cluster_component_threshold(k)));
	case WitnessKind::ModClique:
		return sat_mul(3, k);
	case WitnessKind::ModCoCluster:
		if(parts >= 4)
			return sat_add(k, sat_mul(2, sat_pow(k, 3)));
		if(parts >= 2)
			return sat_add(k, sat_mul(3, sat_pow(k, 2)));
		return sat_add(k, sat_pow(k, 3));
	default:
		throw std::invalid_argument("no kernelizer for this witness kind");
	}
}

bool satisfies_kernel_bounds(const Graph &g, const Witness &w) {
	const VertexSet &x = w.vertices;
	std::uint64_t k = x.size();
	std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
	switch(w.kind) {
	case WitnessKind::VertexCover:
		return n <= kernel_vertex_bound(w.kind, k);
	case WitnessKind::TwinCover: {
		std::uint64_t isolated = 0, pairs = 0;
		for(const auto &c : components_without(g, x)) {
			if(c.size() > 2)
				return false;
			(c.size() == 1 ? isolated : pairs) += 1;
		}
		return isolated <= sat_pow(k, 3) && pairs <= sat_pow(k, 2) && n <= kernel_vertex_bound(w.kind, k);
	}
	case WitnessKind::ModCluster:
	case WitnessKind::ModClique: {
		auto comps = components_without(g, x);
		if(comps.size() > cluster_component_threshold(k))
			return false;
		for(const auto &c : comps)
			if(c.size() > sat_mul(2, k))
				return false;
		return n <= kernel_vertex_bound(w.kind, k);
	}
	case WitnessKind::ModCoCluster: {
		auto parts = cocluster_parts(g, x);
		if(parts.size() >= 2)
			for(const auto &p : parts)
				if(p.size() > sat_pow(k, 2))
					return false;
		return n <= kernel_vertex_bound(w.kind, k, parts.size());
	}
	default:
		return false;
	}
}

} // namespace scs
