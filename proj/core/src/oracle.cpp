#include "scs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "scs/structure.hpp"

#include "c_simple.hpp"

namespace scs {

namespace {

constexpr std::uint8_t kS = 1;
constexpr std::uint8_t kA = 2;
constexpr std::uint8_t kB = 4;

class LabelSearch {
public:
	LabelSearch(const Graph &g, const OracleOptions &opts, SearchStats &stats)
	    : g_(g), opts_(opts), stats_(stats), order_(g.num_vertices()) {
		std::iota(order_.begin(), order_.end(), 0);
		std::stable_sort(order_.begin(), order_.end(),
		                 [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
	}

	/// Any labeling with at most `s_limit` vertices in S.
	std::optional<CutsetCertificate> run(int s_limit) {
		int n = g_.num_vertices();
		if(n < 2)
			return std::nullopt;
		s_limit_ = s_limit;
		domain_.assign(n, kS | kA | kB);
		label_.assign(n, 0);
		can_a_ = can_b_ = n;
		num_s_ = num_sides_ = 0;
		trail_.clear();
		found_.reset();
		dfs(0, 0);
		return found_;
	}

private:
	struct TrailEntry {
		Vertex v;
		std::uint8_t domain;
		std::uint8_t label;
	};

	void set_domain(Vertex v, std::uint8_t d) {
		trail_.push_back({v, domain_[v], label_[v]});
		std::uint8_t removed = domain_[v] & ~d;
		if(removed & kA)
			--can_a_;
		if(removed & kB)
			--can_b_;
		domain_[v] = d;
	}

	void set_label(Vertex v, std::uint8_t l) {
		trail_.push_back({v, domain_[v], label_[v]});
		label_[v] = l;
		if(l == kS)
			++num_s_;
		else
			++num_sides_;
	}

	void undo(std::size_t mark) {
		while(trail_.size() > mark) {
			auto e = trail_.back();
			trail_.pop_back();
			if(label_[e.v] != e.label) {
				if(label_[e.v] == kS)
					--num_s_;
				else
					--num_sides_;
				label_[e.v] = e.label;
			}
			std::uint8_t restored = e.domain & ~domain_[e.v];
			if(restored & kA)
				++can_a_;
			if(restored & kB)
				++can_b_;
			domain_[e.v] = e.domain;
		}
	}

	bool feasible() const { return can_a_ > 0 && can_b_ > 0 && num_s_ <= s_limit_; }

	/// Fixes v to l and runs unit propagation; false on conflict.
	bool assign(Vertex v, std::uint8_t l) {
		queue_.clear();
		set_domain(v, l);
		set_label(v, l);
		queue_.push_back(v);
		for(std::size_t head = 0; head < queue_.size(); ++head) {
			Vertex u = queue_[head];
			std::uint8_t lu = label_[u];
			std::uint8_t forbid = lu == kS ? kS : (lu == kA ? kB : kA);
			for(Vertex w : g_.neighbors(u)) {
				if(!(domain_[w] & forbid))
					continue;
				std::uint8_t d = domain_[w] & ~forbid;
				if(d == 0)
					return false;
				set_domain(w, d);
				if(label_[w] == 0 && std::has_single_bit(d)) {
					set_label(w, d);
					queue_.push_back(w);
				}
			}
			if(!feasible())
				return false;
		}
		return feasible();
	}

	void dfs(std::size_t pos, int depth) {
		if(++stats_.nodes > opts_.node_budget)
			throw BudgetExceeded("stable cutset search exceeded " + std::to_string(opts_.node_budget) + " nodes");
		stats_.max_depth = std::max(stats_.max_depth, depth);
		while(pos < order_.size() && label_[order_[pos]] != 0)
			++pos;
		if(pos == order_.size()) {
			record();
			return;
		}
		Vertex v = order_[pos];
		for(std::uint8_t l : {kS, kA, kB}) {
			if(!(domain_[v] & l))
				continue;
			// A and B are interchangeable until one side is populated
			if(l == kB && num_sides_ == 0)
				continue;
			++stats_.decisions;
			std::size_t mark = trail_.size();
			if(assign(v, l))
				dfs(pos + 1, depth + 1);
			undo(mark);
			if(found_)
				return;
		}
	}

	void record() {
		CutsetCertificate c;
		for(Vertex v = 0; v < g_.num_vertices(); ++v) {
			if(label_[v] == kS)
				c.cutset.push_back(v);
			else if(label_[v] == kA)
				c.side_a.push_back(v);
			else
				c.side_b.push_back(v);
		}
		found_ = std::move(c);
	}

	const Graph &g_;
	const OracleOptions &opts_;
	SearchStats &stats_;
	std::vector<Vertex> order_;
	std::vector<std::uint8_t> domain_, label_;
	std::vector<TrailEntry> trail_;
	std::vector<Vertex> queue_;
	int can_a_ = 0, can_b_ = 0, num_s_ = 0, num_sides_ = 0;
	int s_limit_ = 0;
	std::optional<CutsetCertificate> found_;
};

std::uint64_t to_mask(const ElementSet &s) {
	std::uint64_t m = 0;
	for(Element e : s)
		m |= std::uint64_t{1} << e;
	return m;
}

ElementSet from_mask(std::uint64_t m) {
	ElementSet s;
	for(int e = 0; m; ++e, m >>= 1)
		if(m & 1)
			s.push_back(e);
	return s;
}

void require_small(const SetSystem &sys) {
	check_set_system(sys);
	if(sys.n > 62)
		throw std::invalid_argument("brute-force solvers support at most 62 elements");
}

class SubsetCounter {
public:
	explicit SubsetCounter(const BruteForceOptions &opts) : budget_(opts.subset_budget) {}
	void tick() {
		if(++count_ > budget_)
			throw BudgetExceeded("brute-force solver exceeded " + std::to_string(budget_) + " subsets");
	}

private:
	std::uint64_t budget_;
	std::uint64_t count_ = 0;
};

/// Candidates are S = N(C) and S = N(C - v). For a nonempty clique C' with
/// S = N(C'), C' is a whole component of g - S, so S is a cutset exactly when
/// some vertex lies outside S and C'. Only the first hit builds a certificate.
template <class Connected>
std::optional<CutsetCertificate> c_simple_cutset(const Graph &g, std::span<const Vertex> input, Connected &&connected) {
	VertexSet c = normalized(VertexSet(input.begin(), input.end()));
	std::size_t size = c.size();

	// (outside neighbor, position of its neighbor in C); neighbor lists are
	// sorted, so the part inside C is found by merging
	std::vector<std::pair<Vertex, int>> hits;
	for(std::size_t i = 0; i < size; ++i) {
		std::size_t inside = 0, j = 0;
		for(Vertex w : g.neighbors(c[i])) {
			while(j < size && c[j] < w)
				++j;
			if(j < size && c[j] == w)
				++inside;
			else
				hits.emplace_back(w, static_cast<int>(i));
		}
		if(inside + 1 != size)
			throw std::invalid_argument("C-simple cutsets are defined for cliques only");
	}
	auto s = detail::c_simple_candidate(g, g.num_vertices(), c, hits, connected);
	if(!s)
		return std::nullopt;
	auto cert = certificate_for_cutset(g, *s);
	if(!cert)
		throw std::logic_error("C-simple cutset check disagrees with the certificate");
	return cert;
}

} // namespace

void check_set_system(const SetSystem &sys) {
	if(sys.n < 0)
		throw std::invalid_argument("negative ground set size");
	for(const auto &s : sys.sets) {
		for(std::size_t i = 0; i < s.size(); ++i) {
			if(s[i] < 0 || s[i] >= sys.n)
				throw std::invalid_argument("set element out of range");
			if(i && s[i - 1] >= s[i])
				throw std::invalid_argument("set elements must be strictly increasing");
		}
	}
	if(sys.k && *sys.k < 0)
		throw std::invalid_argument("negative budget");
	if(sys.coloring) {
		if(!sys.k)
			throw std::invalid_argument("coloring given without k");
		if(static_cast<int>(sys.coloring->size()) != sys.n)
			throw std::invalid_argument("coloring length differs from ground set size");
		for(int c : *sys.coloring)
			if(c < 1 || c > *sys.k)
				throw std::invalid_argument("color out of range [1, k]");
	}
}

std::optional<CutsetCertificate> find_stable_cutset(const Graph &g, const OracleOptions &opts, SearchStats *stats) {
	SearchStats local;
	LabelSearch search(g, opts, stats ? *stats : local);
	return search.run(std::numeric_limits<int>::max());
}

std::optional<CutsetCertificate> min_stable_cutset(const Graph &g, int k, const OracleOptions &opts,
                                                   SearchStats *stats) {
	SearchStats local;
	LabelSearch search(g, opts, stats ? *stats : local);
	std::optional<CutsetCertificate> best;
	int limit = k;
	while(limit >= 0) {
		auto found = search.run(limit);
		if(!found)
			break;
		limit = static_cast<int>(found->cutset.size()) - 1;
		best = std::move(found);
	}
	return best;
}

std::optional<CutsetCertificate> has_c_simple_cutset(const Graph &g, std::span<const Vertex> c) {
	std::optional<bool> connected;
	return c_simple_cutset(g, c, [&] {
		if(!connected)
			connected = is_connected(g);
		return *connected;
	});
}

std::optional<CutsetCertificate> has_c_simple_cutset(const Graph &g, std::span<const Vertex> c, bool g_connected) {
	return c_simple_cutset(g, c, [&] { return g_connected; });
}

bool is_hitting_set(const SetSystem &sys, std::span<const Element> s) {
	for(const auto &f : sys.sets) {
		bool hit = std::any_of(f.begin(), f.end(),
		                       [&](Element e) { return std::find(s.begin(), s.end(), e) != s.end(); });
		if(!hit)
			return false;
	}
	return true;
}

bool splits_all(const SetSystem &sys, std::span<const Element> s) {
	for(const auto &f : sys.sets) {
		std::size_t inside = 0;
		for(Element e : f)
			if(std::find(s.begin(), s.end(), e) != s.end())
				++inside;
		if(inside == 0 || inside == f.size())
			return false;
	}
	return true;
}

std::optional<ElementSet> solve_hitting_set(const SetSystem &sys, const BruteForceOptions &opts) {
	require_small(sys);
	if(!sys.k)
		throw std::invalid_argument("hitting set needs a budget k");
	std::vector<std::uint64_t> masks;
	for(const auto &f : sys.sets)
		masks.push_back(to_mask(f));
	SubsetCounter counter(opts);
	int n = sys.n;
	int kmax = std::min(*sys.k, n);
	for(int size = 0; size <= kmax; ++size) {
		// lexicographic combinations of `size` elements
		std::vector<int> idx(size);
		std::iota(idx.begin(), idx.end(), 0);
		while(true) {
			counter.tick();
			std::uint64_t m = 0;
			for(int i : idx)
				m |= std::uint64_t{1} << i;
			if(std::all_of(masks.begin(), masks.end(), [&](std::uint64_t f) { return (f & m) != 0; }))
				return from_mask(m);
			int i = size - 1;
			while(i >= 0 && idx[i] == n - size + i)
				--i;
			if(i < 0)
				break;
			++idx[i];
			for(int j = i + 1; j < size; ++j)
				idx[j] = idx[j - 1] + 1;
		}
	}
	return std::nullopt;
}

std::optional<ElementSet> solve_multicolored_hitting_set(const SetSystem &sys, const BruteForceOptions &opts) {
	require_small(sys);
	if(!sys.k || !sys.coloring)
		throw std::invalid_argument("multicolored hitting set needs k and a coloring");
	int k = *sys.k;
	std::vector<std::vector<Element>> classes(k);
	for(Element e = 0; e < sys.n; ++e)
		classes[(*sys.coloring)[e] - 1].push_back(e);
	for(const auto &c : classes)
		if(c.empty())
			return std::nullopt;
	std::vector<std::uint64_t> masks;
	for(const auto &f : sys.sets)
		masks.push_back(to_mask(f));
	SubsetCounter counter(opts);
	std::vector<std::size_t> pick(k, 0);
	while(true) {
		counter.tick();
		std::uint64_t m = 0;
		for(int i = 0; i < k; ++i)
			m |= std::uint64_t{1} << classes[i][pick[i]];
		if(std::all_of(masks.begin(), masks.end(), [&](std::uint64_t f) { return (f & m) != 0; }))
			return from_mask(m);
		int i = k - 1;
		while(i >= 0 && pick[i] + 1 == classes[i].size())
			pick[i--] = 0;
		if(i < 0)
			break;
		++pick[i];
	}
	return std::nullopt;
}

std::optional<ElementSet> solve_set_splitting(const SetSystem &sys, const BruteForceOptions &opts) {
	require_small(sys);
	std::vector<std::uint64_t> masks;
	for(const auto &f : sys.sets)
		masks.push_back(to_mask(f));
	SubsetCounter counter(opts);
	std::uint64_t limit = std::uint64_t{1} << sys.n;
	for(std::uint64_t m = 0; m < limit; ++m) {
		counter.tick();
		bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint64_t f) {
			std::uint64_t in = f & m;
			return in != 0 && in != f;
		});
		if(ok)
			return from_mask(m);
	}
	return std::nullopt;
}

} // namespace scs
