#include "scs/rules.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>

#include "scs/structure.hpp"

namespace scs {

namespace {

constexpr std::array<std::string_view, 13> kRuleNames{
	"rr1", "rr2", "rr3", "rr4", "rr5", "rr6", "rr7", "rr8", "rr9", "rr10", "rr11", "rr12", "rr13",
};

/// True if some pair of vertices in N(v) is adjacent.
bool neighborhood_has_edge(const Graph &g, Vertex v, std::vector<int> &stamp, int tag) {
	auto nb = g.neighbors(v);
	for(Vertex w : nb)
		stamp[w] = tag;
	for(Vertex u : nb)
		for(Vertex w : g.neighbors(u))
			if(stamp[w] == tag)
				return true;
	return false;
}

bool neighborhood_is_clique(const Graph &g, Vertex v, std::vector<int> &stamp, int tag) {
	auto nb = g.neighbors(v);
	int need = static_cast<int>(nb.size()) - 1;
	for(Vertex u : nb)
		if(g.degree(u) < need)
			return false;
	for(Vertex w : nb)
		stamp[w] = tag;
	for(Vertex u : nb) {
		int inside = 0;
		for(Vertex w : g.neighbors(u))
			if(stamp[w] == tag)
				++inside;
		if(inside != need)
			return false;
	}
	return true;
}

} // namespace

std::string_view rule_name(RuleId r) {
	return kRuleNames[static_cast<std::size_t>(r) - 1];
}

std::optional<RuleId> parse_rule_name(std::string_view s) {
	for(std::size_t i = 0; i < kRuleNames.size(); ++i)
		if(kRuleNames[i] == s)
			return static_cast<RuleId>(i + 1);
	return std::nullopt;
}

RuleResult RuleResult::reduced(const Graph &g, VertexSet deleted) {
	RuleResult r;
	r.kind = Kind::Reduced;
	r.graph = g.without(deleted);
	r.deleted = std::move(deleted);
	return r;
}

RuleResult rr1_disconnected_or_cutvertex(const Graph &g) {
	if(g.num_vertices() < 2)
		return RuleResult::not_applicable();
	if(!is_connected(g) || !articulation_points(g).empty())
		return RuleResult::decided(true);
	return RuleResult::not_applicable();
}

RuleResult rr2_clique(const Graph &g) {
	return is_complete(g) ? RuleResult::decided(false) : RuleResult::not_applicable();
}

RuleResult rr3_stable_neighborhood(const Graph &g) {
	std::vector<int> stamp(g.num_vertices(), -1);
	for(Vertex v = 0; v < g.num_vertices(); ++v)
		if(g.degree(v) <= 1 || !neighborhood_has_edge(g, v, stamp, v))
			return RuleResult::decided(true);
	return RuleResult::not_applicable();
}

RuleResult rr4_simplicial(const Graph &g) {
	std::vector<int> stamp(g.num_vertices(), -1);
	for(Vertex v = 0; v < g.num_vertices(); ++v)
		if(neighborhood_is_clique(g, v, stamp, v))
			return RuleResult::reduced(g, {v});
	return RuleResult::not_applicable();
}

RuleResult rr5_comparable_neighborhood(const Graph &g) {
	int n = g.num_vertices();
	constexpr int kNone = std::numeric_limits<int>::max();
	std::pair<Vertex, Vertex> best{kNone, kNone};
	for(Vertex v = 0; v < n; ++v) {
		auto nv = g.neighbors(v);
		Vertex u_min = kNone;
		if(nv.empty()) {
			u_min = v == 0 ? (n > 1 ? 1 : kNone) : 0;
		} else {
			// u must be adjacent to every vertex of N(v); scan the smallest list
			Vertex pivot = *std::min_element(nv.begin(), nv.end(),
			                                 [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
			for(Vertex u : g.neighbors(pivot)) {
				if(u == v)
					continue;
				bool dominates = std::all_of(nv.begin(), nv.end(), [&](Vertex w) { return g.adjacent(u, w); });
				if(dominates) {
					u_min = u;
					break;
				}
			}
		}
		if(u_min != kNone && std::pair{u_min, v} < best)
			best = {u_min, v};
	}
	if(best.first == kNone)
		return RuleResult::not_applicable();
	return RuleResult::reduced(g, {best.second});
}

RuleResult rr6_clique_module(const Graph &g) {
	if(auto t = find_clique_module_triplet(g))
		return RuleResult::reduced(g, {(*t)[0]});
	return RuleResult::not_applicable();
}

GenericFixpoint run_generic_fixpoint(const Graph &g) {
	using RuleFn = RuleResult (*)(const Graph &);
	static constexpr std::array<std::pair<RuleId, RuleFn>, 6> kSchedule{{
		{RuleId::DisconnectedOrCutVertex, rr1_disconnected_or_cutvertex},
		{RuleId::Clique, rr2_clique},
		{RuleId::StableNeighborhood, rr3_stable_neighborhood},
		{RuleId::Simplicial, rr4_simplicial},
		{RuleId::ComparableNeighborhood, rr5_comparable_neighborhood},
		{RuleId::CliqueModule, rr6_clique_module},
	}};

	GenericFixpoint out;
	out.graph = g;
	out.origin.resize(g.num_vertices());
	std::iota(out.origin.begin(), out.origin.end(), 0);
	bool changed = true;
	while(changed) {
		changed = false;
		for(auto [id, rule] : kSchedule) {
			RuleResult r = rule(out.graph);
			if(r.kind == RuleResult::Kind::NotApplicable)
				continue;
			if(r.kind == RuleResult::Kind::Decided) {
				out.decision = r.answer;
				out.trace.push_back({id, {}, r.answer});
				return out;
			}
			VertexSet deleted_orig;
			for(Vertex v : r.deleted)
				deleted_orig.push_back(out.origin[v]);
			out.trace.push_back({id, std::move(deleted_orig), std::nullopt});
			out.origin = set_difference(out.origin, out.trace.back().deleted);
			out.graph = std::move(r.graph);
			changed = true;
			break;
		}
	}
	return out;
}

} // namespace scs
