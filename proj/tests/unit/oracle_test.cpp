#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "scs/oracle.hpp"
#include "scs/structure.hpp"

using namespace scs;
using scs::testing::naive_has_stable_cutset;

namespace {

Graph g_of(int n, std::initializer_list<Edge> es) {
	std::vector<Edge> v(es);
	return Graph::from_edges(n, v);
}

Graph complete(int n) {
	GraphBuilder b(n);
	for(int u = 0; u < n; ++u)
		for(int v = u + 1; v < n; ++v)
			b.add_edge(u, v);
	return b.build();
}

Graph cycle(int n) {
	GraphBuilder b(n);
	for(int i = 0; i < n; ++i)
		b.add_edge(i, (i + 1) % n);
	return b.build();
}

Graph wheel5() {
	GraphBuilder b(6);
	for(int i = 0; i < 5; ++i) {
		b.add_edge(i, (i + 1) % 5);
		b.add_edge(i, 5);
	}
	return b.build();
}

const Graph kDiamond = g_of(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
const Graph kP3 = g_of(3, {{0, 1}, {1, 2}});

} // namespace

TEST_CASE("stable cutset search on small named graphs") {
	CHECK_FALSE(find_stable_cutset(complete(4)));
	CHECK_FALSE(find_stable_cutset(wheel5()));
	CHECK_FALSE(find_stable_cutset(kDiamond));
	auto p3 = find_stable_cutset(kP3);
	REQUIRE(p3);
	CHECK(p3->cutset == VertexSet{1});
	CHECK(verify_certificate(kP3, *p3));
}

TEST_CASE("degenerate graphs have no stable cutset") {
	CHECK_FALSE(find_stable_cutset(Graph(0)));
	CHECK_FALSE(find_stable_cutset(Graph(1)));
	auto two = find_stable_cutset(Graph(2));
	REQUIRE(two);
	CHECK(two->cutset.empty());
	CHECK_FALSE(find_stable_cutset(complete(2)));
}

TEST_CASE("minimum stable cutset") {
	auto p3 = min_stable_cutset(kP3, 1);
	REQUIRE(p3);
	CHECK(p3->cutset == VertexSet{1});
	CHECK_FALSE(min_stable_cutset(kP3, 0));

	Graph two_triangles = g_of(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
	auto t = min_stable_cutset(two_triangles, 0);
	REQUIRE(t);
	CHECK(t->cutset.empty());

	// C6 needs two opposite vertices
	auto c6 = min_stable_cutset(cycle(6), 6);
	REQUIRE(c6);
	CHECK(c6->cutset.size() == 2);
	CHECK(verify_certificate(cycle(6), *c6));
}

TEST_CASE("C-simple cutsets") {
	Graph tri_pendant = g_of(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
	VertexSet c12{1, 2};
	auto a = has_c_simple_cutset(tri_pendant, c12);
	REQUIRE(a);
	CHECK(a->cutset == VertexSet{0});

	VertexSet c01{0, 1};
	CHECK_FALSE(has_c_simple_cutset(complete(4), c01));

	auto c5 = has_c_simple_cutset(cycle(5), c01);
	REQUIRE(c5);
	CHECK(c5->cutset == VertexSet{2, 4});
	CHECK(c5->side_a == VertexSet{0, 1});
	CHECK(c5->side_b == VertexSet{3});

	VertexSet not_clique{0, 2};
	CHECK_THROWS_AS(has_c_simple_cutset(cycle(5), not_clique), std::invalid_argument);
}

TEST_CASE("hitting set brute force") {
	CHECK(solve_hitting_set({2, {{0}, {1}}, 2, {}}) == ElementSet{0, 1});
	CHECK_FALSE(solve_hitting_set({2, {{0}, {1}}, 1, {}}));
	CHECK(solve_hitting_set({3, {{0, 1}, {1, 2}}, 1, {}}) == ElementSet{1});
	CHECK(solve_hitting_set({3, {}, 0, {}}) == ElementSet{});
	CHECK_FALSE(solve_hitting_set({3, {{}}, 3, {}}));
	CHECK_THROWS_AS(solve_hitting_set({2, {{0}}, std::nullopt, {}}), std::invalid_argument);
}

TEST_CASE("multicolored hitting set brute force") {
	CHECK(solve_multicolored_hitting_set({2, {{0, 1}}, 2, std::vector<int>{1, 2}}) == ElementSet{0, 1});
	// color 2 is empty
	CHECK_FALSE(solve_multicolored_hitting_set({2, {}, 2, std::vector<int>{1, 1}}));
	CHECK_FALSE(solve_multicolored_hitting_set({2, {{0}, {1}}, 1, std::vector<int>{1, 1}}));
	CHECK_THROWS_AS(solve_multicolored_hitting_set({2, {}, 2, std::nullopt}), std::invalid_argument);
}

TEST_CASE("set splitting brute force") {
	CHECK_FALSE(solve_set_splitting({3, {{0, 1}, {2}}, {}, {}}));
	CHECK_FALSE(solve_set_splitting({3, {{}}, {}, {}}));
	// w=0 x=1 y=2 z=3; C={x,y}, D={w,x,z}
	auto fig = solve_set_splitting({4, {{1, 2}, {0, 1, 3}}, {}, {}});
	REQUIRE(fig);
	CHECK(*fig == ElementSet{1});
	CHECK(solve_set_splitting({2, {{0, 1}}, {}, {}}) == ElementSet{0});
}

TEST_CASE("set system validation") {
	CHECK_THROWS_AS(check_set_system({2, {{0, 2}}, {}, {}}), std::invalid_argument);
	CHECK_THROWS_AS(check_set_system({2, {{1, 0}}, {}, {}}), std::invalid_argument);
	CHECK_THROWS_AS(check_set_system({2, {}, 1, std::vector<int>{1}}), std::invalid_argument);
	CHECK_THROWS_AS(check_set_system({2, {}, 1, std::vector<int>{1, 2}}), std::invalid_argument);
	CHECK_NOTHROW(check_set_system({2, {{0, 1}}, 2, std::vector<int>{2, 1}}));
}

TEST_CASE("budgets abort instead of guessing") {
	// cocktail party graph on ten vertices has no stable cutset
	GraphBuilder b(10);
	for(int u = 0; u < 10; ++u)
		for(int v = u + 1; v < 10; ++v)
			if(v != u + 5)
				b.add_edge(u, v);
	Graph party = b.build();
	SearchStats full;
	CHECK_FALSE(find_stable_cutset(party, {}, &full));
	REQUIRE(full.nodes > 1);
	OracleOptions tight{full.nodes - 1};
	CHECK_THROWS_AS(find_stable_cutset(party, tight), BudgetExceeded);
	CHECK_NOTHROW(find_stable_cutset(party, OracleOptions{full.nodes}));
	BruteForceOptions few{2};
	CHECK_THROWS_AS(solve_set_splitting({3, {{0, 1}, {1, 2}, {0, 2}}, {}, {}}, few), BudgetExceeded);
}

TEST_CASE("search statistics") {
	SearchStats st;
	find_stable_cutset(wheel5(), {}, &st);
	CHECK(st.nodes >= 1);
	CHECK(st.max_depth >= 1);
}

TEST_CASE("oracle agrees with naive enumeration on random graphs") {
	std::mt19937_64 rng(11);
	for(int it = 0; it < 1500; ++it) {
		int n = std::uniform_int_distribution<int>(0, 9)(rng);
		double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
		Graph g = testing::random_graph(n, p, rng);
		auto cert = find_stable_cutset(g);
		CHECK(cert.has_value() == naive_has_stable_cutset(g));
		if(cert)
			CHECK(verify_certificate(g, *cert));
		auto best = min_stable_cutset(g, n);
		CHECK(best.has_value() == cert.has_value());
		auto naive_min = testing::naive_min_stable_cutset_size(g);
		if(best) {
			CHECK(verify_certificate(g, *best));
			CHECK(static_cast<int>(best->cutset.size()) == *naive_min);
		}
	}
}

TEST_CASE("sparse connected graphs always have a stable cutset") {
	std::mt19937_64 rng(12);
	for(int it = 0; it < 300; ++it) {
		int n = std::uniform_int_distribution<int>(5, 14)(rng);
		int m = std::uniform_int_distribution<int>(n - 1, 2 * n - 4)(rng);
		Graph g = testing::random_connected_graph(n, m, rng);
		REQUIRE(g.num_edges() <= static_cast<std::size_t>(2 * n - 4));
		auto cert = find_stable_cutset(g);
		REQUIRE(cert);
		CHECK(verify_certificate(g, *cert));
	}
}

TEST_CASE("answer is invariant under relabeling") {
	std::mt19937_64 rng(13);
	for(int it = 0; it < 300; ++it) {
		int n = std::uniform_int_distribution<int>(2, 12)(rng);
		Graph g = testing::random_graph(n, 0.6, rng);
		Graph h = testing::relabel(g, testing::random_permutation(n, rng));
		CHECK(find_stable_cutset(g).has_value() == find_stable_cutset(h).has_value());
	}
}

TEST_CASE("certificates from C-simple tests verify") {
	std::mt19937_64 rng(14);
	for(int it = 0; it < 500; ++it) {
		int n = std::uniform_int_distribution<int>(3, 9)(rng);
		Graph g = testing::random_graph(n, 0.5, rng);
		for(auto [u, v] : g.edges()) {
			VertexSet c{u, v};
			if(auto cert = has_c_simple_cutset(g, c))
				CHECK(verify_certificate(g, *cert));
		}
	}
}

TEST_CASE("C-simple check matches the candidate list") {
	std::mt19937_64 rng(23);
	int hits = 0;
	for(int it = 0; it < 3000; ++it) {
		int n = std::uniform_int_distribution<int>(1, 11)(rng);
		Graph g = testing::random_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
		VertexSet c;
		for(Vertex v : testing::random_permutation(n, rng))
			if(std::all_of(c.begin(), c.end(), [&](Vertex w) { return g.adjacent(v, w); }) &&
			   (c.empty() || std::bernoulli_distribution(0.6)(rng)))
				c.insert(std::lower_bound(c.begin(), c.end(), v), v);
		std::optional<CutsetCertificate> expected = certificate_for_cutset(g, neighborhood(g, c));
		for(std::size_t i = 0; i < c.size() && !expected; ++i) {
			VertexSet rest = c;
			rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
			expected = certificate_for_cutset(g, neighborhood(g, rest));
		}
		auto got = has_c_simple_cutset(g, c);
		CHECK(got == expected);
		CHECK(has_c_simple_cutset(g, c, is_connected(g)) == expected);
		hits += expected.has_value();
	}
	CHECK(hits > 300);
}
