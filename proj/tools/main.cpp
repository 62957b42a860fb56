#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "scs/gadgets.hpp"
#include "scs/generate.hpp"
#include "scs/io.hpp"
#include "scs/kernelizers.hpp"
#include "scs/oracle.hpp"
#include "scs/structure.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if(!in)
		throw scs::InputError("cannot open " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

void write_file(const std::string &path, const std::string &text) {
	std::ofstream out(path, std::ios::binary);
	if(!out)
		throw scs::InputError("cannot write " + path);
	out << text;
}

scs::WitnessKind kind_or_throw(const std::string &tag) {
	auto k = scs::parse_kind_tag(tag);
	if(!k)
		throw scs::InputError("unknown witness kind '" + tag + "'");
	return *k;
}

/// "1,4,5" or "1 4 5", 1-based.
scs::VertexSet parse_vertex_list(const std::string &s, int n) {
	std::string t = s;
	for(char &c : t)
		if(c == ',')
			c = ' ';
	std::istringstream in(t);
	scs::VertexSet out;
	for(std::string tok; in >> tok;) {
		int v = 0;
		try {
			std::size_t used = 0;
			v = std::stoi(tok, &used);
			if(used != tok.size())
				throw std::invalid_argument(tok);
		} catch(const std::exception &) {
			throw scs::InputError("bad vertex id '" + tok + "'");
		}
		if(v < 1 || v > n)
			throw scs::InputError("witness vertex " + tok + " out of range");
		out.push_back(v - 1);
	}
	auto norm = scs::normalized(out);
	if(norm.size() != out.size())
		throw scs::InputError("repeated witness vertex");
	return norm;
}

std::string answer(bool yes) {
	return yes ? "YES\n" : "NO\n";
}

struct Globals {
	std::string trace_path;
	bool quiet = false;
};

int run_solve(const Globals &gl, const std::string &file, std::optional<int> max_size, std::uint64_t budget) {
	auto inst = scs::parse_instance(read_file(file));
	scs::OracleOptions opts{budget};
	auto cert = max_size ? scs::min_stable_cutset(inst.graph, *max_size, opts) : scs::find_stable_cutset(inst.graph, opts);
	std::cout << answer(cert.has_value());
	if(cert && !gl.quiet)
		std::cout << scs::emit_certificate(*cert);
	return 0;
}

int run_kernelize(const Globals &gl, const std::string &file, const std::string &kind_tag,
                  const std::optional<std::string> &witness) {
	auto inst = scs::parse_instance(read_file(file));
	scs::Witness w;
	w.kind = kind_or_throw(kind_tag);
	if(witness)
		w.vertices = parse_vertex_list(*witness, inst.graph.num_vertices());
	else if(inst.witness)
		w.vertices = inst.witness->vertices;
	else
		throw scs::InputError("kernelize needs a witness in the file or via --witness");
	if(!scs::validate_witness(inst.graph, w))
		throw scs::InputError("witness is not valid for kind " + kind_tag);
	auto out = scs::kernelize(inst.graph, w);
	if(!gl.trace_path.empty())
		write_file(gl.trace_path, scs::emit_trace(out.trace));
	if(out.decision) {
		std::cout << answer(*out.decision);
		return 0;
	}
	scs::InstanceFile f;
	f.graph = out.graph;
	f.witness = out.witness;
	// compose with an origin mapping already present in the input
	scs::VertexSet origin = out.origin;
	if(inst.origin)
		for(auto &v : origin)
			v = (*inst.origin)[v];
	f.origin = origin;
	std::cout << "REDUCED\n" << scs::emit_instance(f);
	return 0;
}

int run_verify(const std::string &file) {
	auto inst = scs::parse_instance(read_file(file));
	std::vector<std::string> lines;
	bool ok = true;
	if(inst.witness) {
		bool v = scs::validate_witness(inst.graph, *inst.witness);
		ok = ok && v;
		lines.push_back(std::string("witness ") + std::string(scs::kind_tag(inst.witness->kind)) + ": " +
		                (v ? "valid" : "invalid"));
	}
	if(inst.certificate) {
		bool v = scs::verify_certificate(inst.graph, *inst.certificate);
		ok = ok && v;
		lines.push_back(std::string("certificate: ") + (v ? "valid" : "invalid"));
	}
	if(lines.empty())
		lines.push_back("nothing to verify");
	std::cout << (ok ? "VALID\n" : "INVALID\n");
	for(const auto &l : lines)
		std::cout << l << '\n';
	return 0;
}

scs::InstanceFile gadget_file(const scs::Gadget &g) {
	scs::InstanceFile f;
	f.graph = g.graph;
	f.witness = g.layout.witness;
	for(std::size_t v = 0; v < g.layout.roles.size(); ++v)
		f.roles.emplace_back(static_cast<scs::Vertex>(v), scs::role_tag(g.layout.roles[v]));
	return f;
}

int run_reduce(const std::string &which, const std::string &file, bool single_path) {
	auto sys = scs::parse_set_system(read_file(file));
	try {
		if(which == "hs2mhs")
			std::cout << scs::emit_set_system(scs::hs_to_mhs(sys));
		else if(which == "mhs2hs")
			std::cout << scs::emit_set_system(scs::mhs_to_hs(sys));
		else if(which == "mhs2ss")
			std::cout << scs::emit_set_system(scs::mhs_to_set_splitting(sys));
		else {
			auto g = scs::set_splitting_to_scs(sys);
			if(single_path)
				g = scs::extend_to_single_path(g);
			std::cout << scs::emit_instance(gadget_file(g));
		}
	} catch(const std::invalid_argument &e) {
		throw scs::InputError(e.what());
	}
	return 0;
}

int run_compose(const std::vector<std::string> &files) {
	std::vector<scs::Graph> graphs;
	for(const auto &f : files)
		graphs.push_back(scs::parse_instance(read_file(f)).graph);
	std::cout << scs::emit_instance(gadget_file(scs::or_compose(graphs)));
	return 0;
}

int run_oracle(const Globals &gl, const std::string &which, const std::string &file, std::uint64_t budget) {
	auto sys = scs::parse_set_system(read_file(file));
	scs::BruteForceOptions opts{budget};
	std::optional<scs::ElementSet> sol;
	try {
		if(which == "hs")
			sol = scs::solve_hitting_set(sys, opts);
		else if(which == "mhs")
			sol = scs::solve_multicolored_hitting_set(sys, opts);
		else
			sol = scs::solve_set_splitting(sys, opts);
	} catch(const std::invalid_argument &e) {
		throw scs::InputError(e.what());
	}
	std::cout << answer(sol.has_value());
	if(sol && !gl.quiet)
		std::cout << "X: " << scs::format_set(*sol, 1) << '\n';
	return 0;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Stable cutset kernelization toolkit"};
	app.require_subcommand(1);
	app.fallthrough();
	Globals gl;
	app.add_option("--trace", gl.trace_path, "Write the rule trace to this file");
	app.add_flag("--quiet", gl.quiet, "Do not print certificates");

	std::string file;
	std::optional<int> max_size;
	std::uint64_t budget = scs::OracleOptions{}.node_budget;
	auto *solve = app.add_subcommand("solve", "Decide whether the graph has a stable cutset");
	solve->add_option("file", file, "Graph file")->required();
	solve->add_option("--max-size", max_size, "Only accept cutsets of at most this size");
	solve->add_option("--budget", budget, "Search node budget");

	std::string kind;
	std::optional<std::string> witness;
	auto *kern = app.add_subcommand("kernelize", "Run a kernelization pipeline");
	kern->add_option("--kind", kind, "vc, tc, cluster, clique or cocluster")
	    ->required()
	    ->check(CLI::IsMember({"vc", "tc", "cluster", "clique", "cocluster"}));
	kern->add_option("file", file, "Graph file")->required();
	kern->add_option("--witness", witness, "Witness vertices (1-based, comma separated)");

	auto *verify = app.add_subcommand("verify", "Check the witness and certificate in a graph file");
	verify->add_option("file", file, "Graph file")->required();

	std::string which;
	bool single_path = false;
	auto *reduce = app.add_subcommand("reduce", "Apply a parameter-preserving transformation");
	reduce->add_option("transformation", which, "hs2mhs, mhs2hs, mhs2ss or ss2scs")
	    ->required()
	    ->check(CLI::IsMember({"hs2mhs", "mhs2hs", "mhs2ss", "ss2scs"}));
	reduce->add_option("file", file, "Set system file")->required();
	reduce->add_flag("--single-path", single_path, "For ss2scs: join the set paths into one path");

	std::vector<std::string> files;
	auto *compose = app.add_subcommand("compose", "OR-compose several graphs");
	compose->add_option("files", files, "Graph files")->required();

	scs::GeneratorConfig cfg;
	std::string gen_kind = "vc";
	bool no_shuffle = false;
	auto *gen = app.add_subcommand("gen", "Generate a random instance with a planted witness");
	gen->add_option("--kind", gen_kind, "Witness kind tag")->required();
	gen->add_option("--seed", cfg.seed, "Random seed")->required();
	gen->add_option("--x-size", cfg.x_size, "Witness size");
	gen->add_option("--outside", cfg.outside, "Number of vertices outside the witness");
	gen->add_option("--p", cfg.edge_prob, "Edge probability between the witness and the rest");
	gen->add_option("--px", cfg.x_edge_prob, "Edge probability inside the witness (default: --p)");
	gen->add_option("--max-group", cfg.max_group, "Largest cluster or path");
	gen->add_option("--parts", cfg.parts, "Stable sets of a co-cluster (0 = random)");
	gen->add_option("--min-attach", cfg.min_attach, "Minimum witness neighbors per outside vertex");
	gen->add_flag("--no-shuffle", no_shuffle, "Keep witness vertices first");

	std::uint64_t subset_budget = scs::BruteForceOptions{}.subset_budget;
	auto *oracle = app.add_subcommand("oracle", "Brute-force a set-system problem");
	oracle->add_option("problem", which, "hs, mhs or ss")->required()->check(CLI::IsMember({"hs", "mhs", "ss"}));
	oracle->add_option("file", file, "Set system file")->required();
	oracle->add_option("--budget", subset_budget, "Subset budget");

	try {
		app.parse(argc, argv);
	} catch(const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kInputError;
	}

	try {
		if(*solve)
			return run_solve(gl, file, max_size, budget);
		if(*kern)
			return run_kernelize(gl, file, kind, witness);
		if(*verify)
			return run_verify(file);
		if(*reduce)
			return run_reduce(which, file, single_path);
		if(*compose)
			return run_compose(files);
		if(*gen) {
			cfg.kind = kind_or_throw(gen_kind);
			cfg.shuffle = !no_shuffle;
			auto inst = scs::generate_planted(cfg);
			scs::InstanceFile f;
			f.graph = inst.graph;
			f.witness = inst.witness;
			std::cout << scs::emit_instance(f);
			return 0;
		}
		if(*oracle)
			return run_oracle(gl, which, file, subset_budget);
	} catch(const scs::BudgetExceeded &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kBudgetExceeded;
	} catch(const scs::InputError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch(const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	}
	return kInputError;
}
