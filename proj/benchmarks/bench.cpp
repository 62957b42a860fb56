#include <benchmark/benchmark.h>

#include "scs/gadgets.hpp"
#include "scs/generate.hpp"
#include "scs/kernelizers.hpp"
#include "scs/oracle.hpp"

using namespace scs;

namespace {

PlantedInstance instance(WitnessKind kind, int k, int outside, std::uint64_t seed) {
	GeneratorConfig cfg;
	cfg.kind = kind;
	cfg.x_size = k;
	cfg.outside = outside;
	cfg.edge_prob = 0.6;
	cfg.x_edge_prob = 1.0;
	cfg.min_attach = 2;
	cfg.seed = seed;
	return generate_planted(cfg);
}

void BM_OracleGadget(benchmark::State &state) {
	// set splitting on n elements with every pair as a set
	int n = static_cast<int>(state.range(0));
	SetSystem sys{n, {}, {}, {}};
	for(int a = 0; a < n; ++a)
		for(int b = a + 1; b < n; ++b)
			sys.sets.push_back({a, b});
	Gadget g = set_splitting_to_scs(sys);
	SearchStats stats;
	for(auto _ : state) {
		stats = {};
		benchmark::DoNotOptimize(find_stable_cutset(g.graph, {}, &stats));
	}
	state.counters["vertices"] = g.graph.num_vertices();
	state.counters["nodes"] = static_cast<double>(stats.nodes);
}
BENCHMARK(BM_OracleGadget)->DenseRange(3, 6);

void BM_OraclePlanted(benchmark::State &state) {
	auto inst = instance(WitnessKind::ModCluster, 3, static_cast<int>(state.range(0)), 11);
	for(auto _ : state)
		benchmark::DoNotOptimize(find_stable_cutset(inst.graph));
	state.counters["vertices"] = inst.graph.num_vertices();
}
BENCHMARK(BM_OraclePlanted)->RangeMultiplier(2)->Range(16, 256);

template <WitnessKind Kind>
void BM_Kernelize(benchmark::State &state) {
	auto inst = instance(Kind, 3, static_cast<int>(state.range(0)), 5);
	std::size_t out = 0;
	for(auto _ : state) {
		auto r = kernelize(inst.graph, inst.witness);
		out = r.decided() ? 0 : r.graph.num_vertices();
		benchmark::DoNotOptimize(out);
	}
	state.counters["input"] = inst.graph.num_vertices();
	state.counters["output"] = static_cast<double>(out);
}
BENCHMARK(BM_Kernelize<WitnessKind::VertexCover>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Kernelize<WitnessKind::TwinCover>)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_Kernelize<WitnessKind::ModCluster>)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_Kernelize<WitnessKind::ModClique>)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_Kernelize<WitnessKind::ModCoCluster>)->RangeMultiplier(4)->Range(64, 1024);

void BM_BuildGadget(benchmark::State &state) {
	int n = static_cast<int>(state.range(0));
	SetSystem sys{n, {}, {}, {}};
	for(int a = 0; a + 2 < n; ++a)
		sys.sets.push_back({a, a + 1, a + 2});
	for(auto _ : state) {
		Gadget g = extend_to_single_path(set_splitting_to_scs(sys));
		benchmark::DoNotOptimize(g.graph.num_edges());
	}
}
BENCHMARK(BM_BuildGadget)->RangeMultiplier(4)->Range(8, 512);

} // namespace

BENCHMARK_MAIN();
