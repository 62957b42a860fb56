#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "scs/io.hpp"
#include "scs/structure.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
	int status = -1;
	std::string out;
};

Run run(const std::string &args) {
	std::string cmd = std::string(SCS_CLI_PATH) + " " + args + " 2>/dev/null";
	Run r;
	FILE *p = popen(cmd.c_str(), "r");
	REQUIRE(p);
	char buf[4096];
	std::size_t got;
	while((got = fread(buf, 1, sizeof buf, p)) > 0)
		r.out.append(buf, got);
	int st = pclose(p);
	r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	return r;
}

class TempDir {
public:
	TempDir() {
		path_ = fs::temp_directory_path() / ("scs-cli-" + std::to_string(::getpid()));
		fs::create_directories(path_);
	}
	~TempDir() { fs::remove_all(path_); }

	std::string write(const std::string &name, const std::string &text) const {
		auto p = path_ / name;
		std::ofstream(p, std::ios::binary) << text;
		return p.string();
	}

	std::string read(const std::string &name) const {
		std::ifstream in(path_ / name, std::ios::binary);
		std::ostringstream os;
		os << in.rdbuf();
		return os.str();
	}

	std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
	fs::path path_;
};

const char *kP3 = "p edge 3 2\ne 1 2\ne 2 3\n";
const char *kK3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";

// K10 minus a perfect matching
std::string cocktail_party() {
	std::string s = "p edge 10 40\n";
	for(int u = 1; u <= 10; ++u)
		for(int v = u + 1; v <= 10; ++v)
			if(v != u + 5)
				s += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
	return s;
}

} // namespace

TEST_CASE("solve") {
	TempDir dir;
	auto p3 = dir.write("p3.txt", kP3);
	auto k3 = dir.write("k3.txt", kK3);
	Run y = run("solve " + p3);
	CHECK(y.status == 0);
	CHECK(y.out == "YES\nS: 2\nA: 1\nB: 3\n");
	CHECK(run("--quiet solve " + p3).out == "YES\n");
	Run n = run("solve " + k3);
	CHECK(n.status == 0);
	CHECK(n.out == "NO\n");
	CHECK(run("solve --max-size 0 " + p3).out == "NO\n");
	CHECK(run("solve --budget 1 " + dir.write("party.txt", cocktail_party())).status == 3);
}

TEST_CASE("input errors exit with status 2") {
	TempDir dir;
	CHECK(run("solve " + dir.write("loop.txt", "p edge 2 1\ne 1 1\n")).status == 2);
	CHECK(run("solve " + dir.file("missing.txt")).status == 2);
	CHECK(run("frobnicate").status == 2);
	CHECK(run("kernelize --kind vc " + dir.write("nowit.txt", kP3)).status == 2);
	CHECK(run("kernelize --kind vc --witness 1 " + dir.write("c4.txt", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n"))
	          .status == 2);
	CHECK(run("kernelize --kind pathwidth --witness 1 " + dir.file("c4.txt")).status == 2);
	CHECK(run("oracle hs " + dir.write("nok.txt", "p ss 2 1\ns 1 2\n")).status == 2);
}

TEST_CASE("kernelize") {
	TempDir dir;
	auto c6 = dir.write("c6.txt", "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\nw vc 1 3 5\n");
	Run r = run("--trace " + dir.file("t.txt") + " kernelize --kind vc " + c6);
	CHECK(r.status == 0);
	CHECK(r.out == "YES\n");
	CHECK(dir.read("t.txt") == "rr3 yes\n");

	Run g = run("gen --kind vc --seed 9 --x-size 2 --outside 40 --p 0.7 --px 1 --min-attach 2");
	REQUIRE(g.status == 0);
	auto inst = dir.write("vc.txt", g.out);
	Run k = run("--trace " + dir.file("t2.txt") + " kernelize --kind vc " + inst);
	CHECK(k.status == 0);
	if(k.out.rfind("REDUCED\n", 0) == 0) {
		auto f = scs::parse_instance(k.out.substr(8));
		REQUIRE(f.witness);
		REQUIRE(f.origin);
		CHECK(f.graph.num_vertices() <= 10);
		CHECK(scs::validate_witness(f.graph, *f.witness));
		auto orig = scs::parse_instance(g.out);
		CHECK(orig.graph.induced(*f.origin) == f.graph);
		CHECK_FALSE(dir.read("t2.txt").empty());
	} else {
		CHECK((k.out == "YES\n" || k.out == "NO\n"));
	}
	CHECK(run("kernelize --kind vc --witness 1,3,5 " + c6).out == "YES\n");
}

TEST_CASE("kernelize output is deterministic") {
	TempDir dir;
	Run g = run("gen --kind cluster --seed 4 --x-size 2 --outside 150 --p 0.6 --px 1 --min-attach 2");
	auto inst = dir.write("cl.txt", g.out);
	Run a = run("--trace " + dir.file("a.txt") + " kernelize --kind cluster " + inst);
	Run b = run("--trace " + dir.file("b.txt") + " kernelize --kind cluster " + inst);
	CHECK(a.status == 0);
	CHECK(a.out == b.out);
	CHECK(dir.read("a.txt") == dir.read("b.txt"));
}

TEST_CASE("verify") {
	TempDir dir;
	Run ok = run("verify " + dir.write("ok.txt", std::string(kP3) + "w vc 2\nS: 2\nA: 1\nB: 3\n"));
	CHECK(ok.out == "VALID\nwitness vc: valid\ncertificate: valid\n");
	Run bad = run("verify " + dir.write("bad.txt", std::string(kK3) + "S: 1\nA: 2\nB: 3\n"));
	CHECK(bad.out == "INVALID\ncertificate: invalid\n");
	CHECK(bad.status == 0);
	CHECK(run("verify " + dir.write("none.txt", kP3)).out == "VALID\nnothing to verify\n");
}

TEST_CASE("reductions and oracles") {
	TempDir dir;
	auto fig = dir.write("fig.txt", "p ss 4 2\ns 2 3\ns 1 2 4\n");
	Run g = run("reduce ss2scs " + fig);
	REQUIRE(g.status == 0);
	auto f = scs::parse_instance(g.out);
	CHECK(f.graph.num_vertices() == 33);
	REQUIRE(f.witness);
	CHECK(f.witness->vertices.size() == 13);
	CHECK(f.roles.size() == 33);
	CHECK(f.roles[0].second == "s");

	auto p = scs::parse_instance(run("reduce ss2scs --single-path " + fig).out);
	CHECK(p.graph.num_vertices() == 36);
	CHECK(p.witness->kind == scs::WitnessKind::ModPath);

	CHECK(run("oracle ss " + fig).out == "YES\nX: 2\n");
	auto hs = dir.write("hs.txt", "p ss 3 2\ns 1 2\ns 2 3\nk 1\n");
	CHECK(run("oracle hs " + hs).out == "YES\nX: 2\n");
	Run mhs = run("reduce hs2mhs " + hs);
	CHECK(mhs.out == "p ss 3 2\ns 1 2\ns 2 3\nk 1\ncol 1 1 1\n");
	auto colored = dir.write("mhs.txt", mhs.out);
	CHECK(run("oracle mhs " + colored).out == "YES\nX: 2\n");
	CHECK(run("reduce mhs2hs " + colored).out == "p ss 3 3\ns 1 2\ns 2 3\ns 1 2 3\nk 1\n");
	CHECK(run("reduce mhs2ss " + colored).out ==
	      "p ss 5 6\ns 4 5\ns 1 2 4\ns 1 3 4\ns 2 3 4\ns 1 2 5\ns 2 3 5\n");
}

TEST_CASE("compose") {
	TempDir dir;
	auto k3 = dir.write("k3.txt", kK3);
	auto p3 = dir.write("p3.txt", kP3);
	auto f = scs::parse_instance(run("compose " + k3 + " " + p3).out);
	CHECK(f.graph.num_vertices() == 5);
	CHECK(run("solve " + dir.write("c.txt", run("compose " + k3 + " " + p3).out)).out.rfind("YES", 0) == 0);
	CHECK(run("--quiet solve " + dir.write("n.txt", run("compose " + k3 + " " + k3).out)).out == "NO\n");
}

TEST_CASE("gen is reproducible") {
	Run a = run("gen --kind tc --seed 11 --x-size 3 --outside 30");
	Run b = run("gen --kind tc --seed 11 --x-size 3 --outside 30");
	CHECK(a.status == 0);
	CHECK(a.out == b.out);
	auto f = scs::parse_instance(a.out);
	REQUIRE(f.witness);
	CHECK(scs::validate_witness(f.graph, *f.witness));
	CHECK(run("gen --kind bogus --seed 1").status == 2);
}
