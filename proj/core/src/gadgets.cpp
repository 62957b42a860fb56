#include "scs/gadgets.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "scs/structure.hpp"

namespace scs {

namespace {

struct TagInfo {
	Role::Kind kind;
	std::string_view name;
	int arity; // number of integer arguments
};

constexpr std::array<TagInfo, 19> kTags{{
	{Role::Kind::S, "s", 0},
	{Role::Kind::A1, "a1", 0},
	{Role::Kind::A2, "a2", 0},
	{Role::Kind::B1, "b1", 0},
	{Role::Kind::B2, "b2", 0},
	{Role::Kind::ElemA, "elem_a", 1},
	{Role::Kind::ElemB, "elem_b", 1},
	{Role::Kind::L, "L", 2},
	{Role::Kind::LPrime, "L'", 2},
	{Role::Kind::R, "R", 2},
	{Role::Kind::RPrime, "R'", 2},
	{Role::Kind::C, "c", 1},
	{Role::Kind::D, "d", 1},
	{Role::Kind::P, "p", 0},
	{Role::Kind::Q, "q", 0},
	{Role::Kind::EndpointU, "endpoint_u", 2},
	{Role::Kind::EndpointV, "endpoint_v", 2},
	{Role::Kind::Member, "member", 2},
	{Role::Kind::Filler, "filler", 0},
}};

const TagInfo &info(Role::Kind k) {
	for(const auto &t : kTags)
		if(t.kind == k)
			return t;
	throw std::logic_error("unknown role kind");
}

Gadget fixed_instance(int n, std::initializer_list<Edge> edges) {
	Gadget out;
	std::vector<Edge> es(edges);
	out.graph = Graph::from_edges(n, es);
	out.layout.roles.assign(n, Role{});
	out.layout.witness = Witness{WitnessKind::ModLinearForest, {0}};
	return out;
}

/// Vertex ids of the set-splitting construction.
class SplitLayout {
public:
	explicit SplitLayout(const SetSystem &sys) : n_(sys.n) {
		int next = 5 + 2 * sys.n;
		for(const auto &f : sys.sets) {
			l_base_.push_back(next);
			next += 2 * static_cast<int>(f.size());
			r_base_.push_back(next);
			next += 2 * static_cast<int>(f.size());
		}
		total_ = next;
	}

	static constexpr Vertex s = 0, a1 = 1, a2 = 2, b1 = 3, b2 = 4;
	Vertex elem_a(int u) const { return 5 + 2 * u; }
	Vertex elem_b(int u) const { return 6 + 2 * u; }
	// j is the set position, i the 1-based element position inside the set
	Vertex l(int j, int i) const { return l_base_[j] + 2 * (i - 1); }
	Vertex l_prime(int j, int i) const { return l(j, i) + 1; }
	Vertex r(int j, int i) const { return r_base_[j] + 2 * (i - 1); }
	Vertex r_prime(int j, int i) const { return r(j, i) + 1; }
	int total() const { return total_; }
	int x_size() const { return 5 + 2 * n_; }

private:
	int n_;
	std::vector<Vertex> l_base_, r_base_;
	int total_ = 0;
};

} // namespace

std::string role_tag(const Role &r) {
	const TagInfo &t = info(r.kind);
	std::string s(t.name);
	if(t.arity == 1)
		s += "(" + std::to_string(r.index) + ")";
	else if(t.arity == 2)
		s += "(" + std::to_string(r.set) + "," + std::to_string(r.index) + ")";
	return s;
}

std::optional<Role> parse_role_tag(std::string_view tag) {
	auto open = tag.find('(');
	std::string_view name = tag.substr(0, open);
	for(const auto &t : kTags) {
		if(t.name != name)
			continue;
		Role r{t.kind, 0, 0};
		if(t.arity == 0)
			return open == std::string_view::npos ? std::optional<Role>(r) : std::nullopt;
		if(open == std::string_view::npos || tag.back() != ')')
			return std::nullopt;
		std::string_view args = tag.substr(open + 1, tag.size() - open - 2);
		std::array<int, 2> vals{};
		int got = 0;
		while(got < 2) {
			auto comma = args.find(',');
			std::string_view piece = args.substr(0, comma);
			auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), vals[got]);
			if(ec != std::errc{} || p != piece.data() + piece.size() || piece.empty())
				return std::nullopt;
			++got;
			if(comma == std::string_view::npos)
				break;
			args = args.substr(comma + 1);
		}
		if(got != t.arity)
			return std::nullopt;
		if(t.arity == 1)
			r.index = vals[0];
		else {
			r.set = vals[0];
			r.index = vals[1];
		}
		return r;
	}
	return std::nullopt;
}

std::optional<Vertex> GadgetLayout::vertex_of(const Role &r) const {
	for(std::size_t v = 0; v < roles.size(); ++v)
		if(roles[v] == r)
			return static_cast<Vertex>(v);
	return std::nullopt;
}

SetSystem hs_to_mhs(const SetSystem &sys) {
	check_set_system(sys);
	if(!sys.k)
		throw std::invalid_argument("hitting set needs a budget k");
	int n = sys.n, k = *sys.k;
	bool has_empty = false;
	for(const auto &f : sys.sets)
		has_empty = has_empty || f.empty();
	if(k >= n) {
		// any k >= n hits every nonempty set; nothing hits an empty one
		if(has_empty)
			return SetSystem{0, {{}}, 0, std::vector<int>{}};
		return SetSystem{0, {}, 0, std::vector<int>{}};
	}
	SetSystem out;
	out.n = n * k;
	out.k = k;
	out.coloring = std::vector<int>(out.n);
	for(int u = 0; u < n; ++u)
		for(int i = 1; i <= k; ++i)
			(*out.coloring)[u * k + i - 1] = i;
	for(const auto &f : sys.sets) {
		ElementSet g;
		for(Element u : f)
			for(int i = 1; i <= k; ++i)
				g.push_back(u * k + i - 1);
		out.sets.push_back(std::move(g));
	}
	return out;
}

SetSystem mhs_to_hs(const SetSystem &sys) {
	check_set_system(sys);
	if(!sys.k || !sys.coloring)
		throw std::invalid_argument("multicolored hitting set needs k and a coloring");
	SetSystem out{sys.n, sys.sets, sys.k, std::nullopt};
	for(int c = 1; c <= *sys.k; ++c) {
		ElementSet cls;
		for(Element u = 0; u < sys.n; ++u)
			if((*sys.coloring)[u] == c)
				cls.push_back(u);
		out.sets.push_back(std::move(cls));
	}
	return out;
}

SetSystem mhs_to_set_splitting(const SetSystem &sys) {
	check_set_system(sys);
	if(!sys.k || !sys.coloring)
		throw std::invalid_argument("multicolored hitting set needs k and a coloring");
	int n = sys.n;
	Element r = n, b = n + 1;
	std::vector<ElementSet> classes(*sys.k);
	for(Element u = 0; u < n; ++u)
		classes[(*sys.coloring)[u] - 1].push_back(u);
	SetSystem out;
	out.n = n + 2;
	for(const auto &c : classes)
		if(c.empty()) {
			out.sets = {{0}};
			return out;
		}
	out.sets.push_back({r, b});
	for(const auto &c : classes)
		for(std::size_t i = 0; i < c.size(); ++i)
			for(std::size_t j = i + 1; j < c.size(); ++j)
				out.sets.push_back({c[i], c[j], r});
	for(const auto &f : sys.sets) {
		ElementSet g = f;
		g.push_back(b);
		out.sets.push_back(std::move(g));
	}
	return out;
}

Gadget trivial_yes_instance() {
	return fixed_instance(2, {});
}

Gadget trivial_no_instance() {
	return fixed_instance(3, {{0, 1}, {0, 2}, {1, 2}});
}

Gadget set_splitting_to_scs(const SetSystem &sys) {
	check_set_system(sys);
	for(const auto &f : sys.sets)
		if(f.size() <= 1) {
			Gadget out = trivial_no_instance();
			out.layout.source_system = sys;
			return out;
		}

	SplitLayout lay(sys);
	GraphBuilder b(lay.total());
	std::vector<Role> roles(lay.total());
	using K = Role::Kind;
	roles[lay.s] = {K::S, 0, 0};
	roles[lay.a1] = {K::A1, 0, 0};
	roles[lay.a2] = {K::A2, 0, 0};
	roles[lay.b1] = {K::B1, 0, 0};
	roles[lay.b2] = {K::B2, 0, 0};
	for(Vertex v : {lay.a1, lay.a2, lay.b1, lay.b2})
		b.add_edge(lay.s, v);
	b.add_edge(lay.a1, lay.a2);
	b.add_edge(lay.b1, lay.b2);

	for(int u = 0; u < sys.n; ++u) {
		Vertex ua = lay.elem_a(u), ub = lay.elem_b(u);
		roles[ua] = {K::ElemA, 0, u + 1};
		roles[ub] = {K::ElemB, 0, u + 1};
		b.add_edge(ua, ub);
		b.add_edge(lay.a1, ua);
		b.add_edge(lay.a2, ua);
		b.add_edge(lay.b1, ub);
		b.add_edge(lay.b2, ub);
	}

	for(int j = 0; j < static_cast<int>(sys.sets.size()); ++j) {
		const auto &f = sys.sets[j];
		int sz = static_cast<int>(f.size());
		for(int i = 1; i <= sz; ++i) {
			roles[lay.l(j, i)] = {K::L, j + 1, i};
			roles[lay.l_prime(j, i)] = {K::LPrime, j + 1, i};
			roles[lay.r(j, i)] = {K::R, j + 1, i};
			roles[lay.r_prime(j, i)] = {K::RPrime, j + 1, i};
			b.add_edge(lay.l(j, i), lay.l_prime(j, i));
			b.add_edge(lay.r(j, i), lay.r_prime(j, i));
			if(i < sz) {
				b.add_edge(lay.l_prime(j, i), lay.l(j, i + 1));
				b.add_edge(lay.r_prime(j, i), lay.r(j, i + 1));
			}
			b.add_edge(lay.s, lay.l_prime(j, i));
			b.add_edge(lay.s, lay.r_prime(j, i));

			Element u = f[i - 1];
			b.add_edge(lay.elem_a(u), lay.r(j, i));
			b.add_edge(lay.elem_a(u), lay.r_prime(j, i));
			b.add_edge(lay.elem_b(u), lay.l(j, i));
			b.add_edge(lay.elem_b(u), lay.l_prime(j, i));
		}
		b.add_edge(lay.a1, lay.r_prime(j, sz));
		b.add_edge(lay.a2, lay.r_prime(j, sz));
		b.add_edge(lay.b1, lay.l_prime(j, sz));
		b.add_edge(lay.b2, lay.l_prime(j, sz));
		// extra edges for the first two elements
		b.add_edge(lay.elem_a(f[0]), lay.l(j, 2));
		b.add_edge(lay.elem_b(f[0]), lay.r(j, 2));
		b.add_edge(lay.elem_a(f[1]), lay.r(j, 1));
		b.add_edge(lay.elem_b(f[1]), lay.l(j, 1));
	}

	Gadget out;
	out.graph = b.build();
	out.layout.roles = std::move(roles);
	VertexSet x(lay.x_size());
	for(int v = 0; v < lay.x_size(); ++v)
		x[v] = v;
	out.layout.witness = Witness{WitnessKind::ModLinearForest, std::move(x)};
	out.layout.source_system = sys;
	return out;
}

Gadget extend_to_single_path(const Gadget &in) {
	const GadgetLayout &lay = in.layout;
	if(!lay.witness)
		throw std::invalid_argument("layout has no witness");
	bool is_fixed = !lay.roles.empty() && lay.roles[0].kind == Role::Kind::Filler;
	if(is_fixed) {
		Gadget out = in;
		out.layout.witness->kind = WitnessKind::ModPath;
		return out;
	}
	if(!lay.source_system)
		throw std::invalid_argument("layout has no source set system");
	const SetSystem &sys = *lay.source_system;
	auto find = [&](Role r) {
		auto v = lay.vertex_of(r);
		if(!v)
			throw std::invalid_argument("layout is missing role " + role_tag(r));
		return *v;
	};
	using K = Role::Kind;
	std::array<Vertex, 4> ends{find({K::A1, 0, 0}), find({K::A2, 0, 0}), find({K::B1, 0, 0}), find({K::B2, 0, 0})};

	int n = in.graph.num_vertices();
	int m = static_cast<int>(sys.sets.size());
	GraphBuilder b(n);
	for(auto [u, v] : in.graph.edges())
		b.add_edge(u, v);
	std::vector<Role> roles = lay.roles;
	for(int i = 1; i <= m; ++i) {
		int sz = static_cast<int>(sys.sets[i - 1].size());
		Vertex c = b.add_vertex();
		roles.push_back({K::C, 0, i});
		b.add_edge(c, find({K::LPrime, i, sz}));
		b.add_edge(c, find({K::R, i, 1}));
		for(Vertex e : ends)
			b.add_edge(c, e);
	}
	for(int i = 1; i < m; ++i) {
		int sz = static_cast<int>(sys.sets[i - 1].size());
		Vertex d = b.add_vertex();
		roles.push_back({K::D, 0, i});
		b.add_edge(d, find({K::RPrime, i, sz}));
		b.add_edge(d, find({K::L, i + 1, 1}));
		for(Vertex e : ends)
			b.add_edge(d, e);
	}

	Gadget out;
	out.graph = b.build();
	out.layout = lay;
	out.layout.roles = std::move(roles);
	out.layout.witness->kind = WitnessKind::ModPath;
	return out;
}

Gadget or_compose(std::span<const Graph> graphs) {
	if(graphs.empty())
		throw std::invalid_argument("composition needs at least one graph");
	using K = Role::Kind;
	auto members = [](const Graph &g, int idx) {
		std::vector<Role> roles;
		for(Vertex v = 0; v < g.num_vertices(); ++v)
			roles.push_back({K::Member, idx + 1, v + 1});
		return roles;
	};
	for(std::size_t i = 0; i < graphs.size(); ++i) {
		const Graph &g = graphs[i];
		if(g.num_vertices() >= 2 && !is_connected(g)) {
			Gadget out;
			out.graph = g;
			out.layout.roles = members(g, static_cast<int>(i));
			out.layout.source_graphs = {static_cast<int>(i)};
			return out;
		}
	}

	GraphBuilder b;
	std::vector<Role> roles;
	std::vector<int> kept;
	std::vector<Vertex> attach;
	for(std::size_t i = 0; i < graphs.size(); ++i) {
		const Graph &g = graphs[i];
		if(is_complete(g))
			continue;
		int idx = static_cast<int>(i);
		kept.push_back(idx);
		Vertex base = b.num_vertices();
		for(Vertex v = 0; v < g.num_vertices(); ++v)
			b.add_vertex();
		auto ms = members(g, idx);
		roles.insert(roles.end(), ms.begin(), ms.end());
		for(auto [u, v] : g.edges())
			b.add_edge(base + u, base + v);
		auto [u, v] = g.edges().front();
		roles[base + u].kind = K::EndpointU;
		roles[base + v].kind = K::EndpointV;
		attach.push_back(base + u);
		attach.push_back(base + v);
	}
	if(kept.empty()) {
		Gadget out = trivial_no_instance();
		out.layout.witness.reset();
		return out;
	}
	Vertex p = b.add_vertex(), q = b.add_vertex();
	roles.push_back({K::P, 0, 0});
	roles.push_back({K::Q, 0, 0});
	b.add_edge(p, q);
	for(Vertex a : attach) {
		b.add_edge(p, a);
		b.add_edge(q, a);
	}
	Gadget out;
	out.graph = b.build();
	out.layout.roles = std::move(roles);
	out.layout.source_graphs = std::move(kept);
	return out;
}

} // namespace scs
