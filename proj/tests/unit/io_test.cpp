#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "scs/generate.hpp"
#include "scs/io.hpp"
#include "scs/kernelizers.hpp"
#include "scs/structure.hpp"

using namespace scs;

namespace {

std::string input_error(std::string_view text) {
	try {
		parse_instance(text);
	} catch(const InputError &e) {
		return e.what();
	}
	return "";
}

std::string set_error(std::string_view text) {
	try {
		parse_set_system(text);
	} catch(const InputError &e) {
		return e.what();
	}
	return "";
}

bool contains(const std::string &s, std::string_view part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("graph files") {
	Graph p3 = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
	CHECK(p3.num_vertices() == 3);
	CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

	auto c4 = parse_instance("c a square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nw vc 1 3\n");
	REQUIRE(c4.witness);
	CHECK(c4.witness->kind == WitnessKind::VertexCover);
	CHECK(c4.witness->vertices == VertexSet{0, 2});
	CHECK(c4.graph.num_edges() == 4);

	// no trailing newline, blank lines and CRLF
	auto crlf = parse_instance("p edge 2 1\r\n\r\ne 1 2");
	CHECK(crlf.graph.num_edges() == 1);
}

TEST_CASE("graph file errors") {
	CHECK(contains(input_error("p edge 2 1\ne 1 1\n"), "self-loop"));
	CHECK(contains(input_error("p edge 2 1\ne 1 3\n"), "out of range"));
	CHECK(contains(input_error("p edge 2 2\ne 1 2\ne 2 1\n"), "duplicate edge"));
	CHECK(contains(input_error("p edge 2 1\ne 1 2\nw tw 1\n"), "unknown witness kind"));
	CHECK(contains(input_error("p graph 2 1\n"), "malformed header"));
	CHECK(contains(input_error("e 1 2\n"), "header must come first"));
	CHECK(contains(input_error("p edge 3 3\ne 1 2\n"), "declares 3 edges"));
	CHECK(contains(input_error("p edge 2 1\ne 1 x\n"), "line 2"));
	CHECK(contains(input_error(""), "missing"));
	CHECK(contains(input_error("p edge 2 0\nS: 1\n"), "certificate needs"));
	CHECK(contains(input_error("p edge 2 0\nt rr99 yes\n"), "unknown rule"));
	CHECK(contains(input_error("p edge 2 0\nz\n"), "unknown line type"));
	CHECK(contains(input_error("p edge 2 0\no 1\n"), "one id per vertex"));
}

TEST_CASE("set system files") {
	SetSystem fig = parse_set_system("p ss 4 2\ns 2 3\ns 1 2 4\n");
	CHECK(fig == SetSystem{4, {{1, 2}, {0, 1, 3}}, {}, {}});
	SetSystem col = parse_set_system("p ss 2 1\ns 1 2\nk 2\ncol 1 2\n");
	CHECK(col.k == 2);
	CHECK(col.coloring == std::vector<int>{1, 2});
	CHECK(contains(set_error("p ss 2 1\ns 1 3\n"), "out of range"));
	CHECK(contains(set_error("p ss 2 1\ns 1 2\nk 2\ncol 1\n"), "coloring length"));
	CHECK(contains(set_error("p ss 2 1\ns 1 1\n"), "repeated"));
	CHECK(contains(set_error("p ss 2 2\ns 1\n"), "declares 2 sets"));
	CHECK(parse_set_system(emit_set_system(col)) == col);
	CHECK(emit_set_system(fig) == "p ss 4 2\ns 2 3\ns 1 2 4\n");
}

TEST_CASE("full instance round trip") {
	InstanceFile f;
	f.graph = parse_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
	f.witness = Witness{WitnessKind::ModPath, {1}};
	f.origin = VertexSet{3, 5, 7, 9};
	f.certificate = CutsetCertificate{{1}, {0}, {2, 3}};
	f.roles = {{0, "s"}, {3, "L'(1,2)"}};
	f.trace = {{RuleId::VcMarking, {4, 6}, std::nullopt}, {RuleId::StableNeighborhood, {}, true}};
	std::string text = emit_instance(f);
	CHECK(parse_instance(text) == f);
	CHECK(emit_instance(parse_instance(text)) == text);
	CHECK(contains(text, "t rr7 del 5 7\n"));
	CHECK(contains(text, "t rr3 yes\n"));
	CHECK(contains(text, "S: 2\nA: 1\nB: 3 4\n"));
}

TEST_CASE("trace text") {
	RuleTrace t{{RuleId::ClusterComponentMarking, {0, 1}, std::nullopt}, {RuleId::Clique, {}, false}};
	std::string text = emit_trace(t);
	CHECK(text == "rr11 del 1 2\nrr2 no\n");
	CHECK(parse_trace(text) == t);
	CHECK(parse_trace("").empty());
}

TEST_CASE("generated instances are valid, deterministic and round trip") {
	const WitnessKind kinds[] = {WitnessKind::VertexCover,     WitnessKind::TwinCover, WitnessKind::ModCluster,
	                             WitnessKind::ModClique,       WitnessKind::ModCoCluster,
	                             WitnessKind::ModLinearForest, WitnessKind::ModPath,   WitnessKind::DominatingSet};
	std::mt19937_64 rng(61);
	for(WitnessKind kind : kinds)
		for(int it = 0; it < 40; ++it) {
			GeneratorConfig cfg;
			cfg.kind = kind;
			cfg.x_size = std::uniform_int_distribution<int>(0, 5)(rng);
			cfg.outside = std::uniform_int_distribution<int>(0, 50)(rng);
			cfg.edge_prob = std::uniform_real_distribution<double>(0, 1)(rng);
			cfg.min_attach = it % 3;
			cfg.seed = rng();
			if(kind == WitnessKind::DominatingSet && cfg.x_size == 0 && cfg.outside > 0) {
				CHECK_THROWS_AS(generate_planted(cfg), std::invalid_argument);
				continue;
			}
			auto a = generate_planted(cfg);
			auto b = generate_planted(cfg);
			CHECK(a.graph == b.graph);
			CHECK(a.witness == b.witness);
			CHECK(validate_witness(a.graph, a.witness));
			CHECK(a.graph.num_vertices() == cfg.x_size + cfg.outside);
			InstanceFile f{a.graph, a.witness, {}, {}, {}, {}};
			CHECK(parse_instance(emit_instance(f)) == f);
		}
	GeneratorConfig vc;
	vc.kind = WitnessKind::VertexCover;
	vc.outside = 50;
	vc.seed = 7;
	auto inst = generate_planted(vc);
	CHECK(validate_witness(inst.graph, inst.witness));

	GeneratorConfig cl;
	cl.kind = WitnessKind::ModCluster;
	cl.outside = 60;
	cl.max_group = 5;
	auto clusters = generate_planted(cl);
	for(const auto &c : components_without(clusters.graph, clusters.witness.vertices)) {
		CHECK(c.size() <= 5);
		CHECK(is_clique(clusters.graph, c));
	}
	CHECK_THROWS_AS(generate_planted({WitnessKind::VertexCover, -1}), std::invalid_argument);
}

TEST_CASE("kernel output survives a round trip") {
	GeneratorConfig cfg;
	cfg.kind = WitnessKind::ModCoCluster;
	cfg.x_size = 2;
	cfg.outside = 40;
	cfg.x_edge_prob = 1.0;
	cfg.min_attach = 2;
	cfg.parts = 5;
	cfg.seed = 3;
	auto inst = generate_planted(cfg);
	auto out = kernelize(inst.graph, inst.witness);
	InstanceFile f{out.graph, out.witness, out.origin, {}, {}, out.trace};
	CHECK(parse_instance(emit_instance(f)) == f);
}
