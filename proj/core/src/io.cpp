#include "scs/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace scs {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while(i < line.size()) {
		while(i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while(j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if(j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

/// Iterates over non-empty, non-comment lines, tracking line numbers.
class LineReader {
public:
	explicit LineReader(std::string_view text) : text_(text) {}

	bool next() {
		while(pos_ <= text_.size()) {
			if(pos_ == text_.size() && done_)
				return false;
			std::size_t end = text_.find('\n', pos_);
			if(end == std::string_view::npos) {
				end = text_.size();
				done_ = true;
			}
			std::string_view line = text_.substr(pos_, end - pos_);
			pos_ = end + (done_ ? 0 : 1);
			++line_no_;
			tokens_ = split_ws(line);
			if(tokens_.empty() || tokens_[0] == "c")
				continue;
			return true;
		}
		return false;
	}

	const std::vector<std::string_view> &tokens() const { return tokens_; }

	[[noreturn]] void fail(const std::string &what) const {
		throw InputError("line " + std::to_string(line_no_) + ": " + what);
	}

	long long number(std::size_t i) const {
		if(i >= tokens_.size())
			fail("missing number");
		long long v = 0;
		auto t = tokens_[i];
		auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
		if(ec != std::errc{} || p != t.data() + t.size())
			fail("expected an integer, got '" + std::string(t) + "'");
		return v;
	}

	/// 1-based id in [1, n] converted to 0-based.
	int id(std::size_t i, long long n, const char *what) const {
		long long v = number(i);
		if(v < 1 || v > n)
			fail(std::string(what) + " " + std::to_string(v) + " out of range [1, " + std::to_string(n) + "]");
		return static_cast<int>(v - 1);
	}

	VertexSet ids_from(std::size_t first, long long n, const char *what) const {
		VertexSet s;
		for(std::size_t i = first; i < tokens_.size(); ++i)
			s.push_back(id(i, n, what));
		std::sort(s.begin(), s.end());
		if(std::adjacent_find(s.begin(), s.end()) != s.end())
			fail(std::string("repeated ") + what);
		return s;
	}

private:
	std::string_view text_;
	std::size_t pos_ = 0;
	int line_no_ = 0;
	bool done_ = false;
	std::vector<std::string_view> tokens_;
};

void append_set(std::ostringstream &os, std::span<const Vertex> s) {
	for(Vertex v : s)
		os << ' ' << v + 1;
}

} // namespace

InstanceFile parse_instance(std::string_view text) {
	LineReader in(text);
	InstanceFile f;
	std::optional<long long> n;
	long long m_declared = 0;
	std::vector<Edge> edges;
	std::optional<VertexSet> cs, ca, cb;

	auto need_header = [&]() {
		if(!n)
			in.fail("'p edge' header must come first");
	};
	while(in.next()) {
		const auto &t = in.tokens();
		std::string_view head = t[0];
		if(head == "p") {
			if(n)
				in.fail("duplicate header");
			if(t.size() != 4 || t[1] != "edge")
				in.fail("malformed header, expected 'p edge <n> <m>'");
			n = in.number(2);
			m_declared = in.number(3);
			if(*n < 0 || m_declared < 0 || *n > (1 << 30))
				in.fail("malformed header sizes");
		} else if(head == "e") {
			need_header();
			if(t.size() != 3)
				in.fail("edge line needs two endpoints");
			Vertex u = in.id(1, *n, "vertex"), v = in.id(2, *n, "vertex");
			if(u == v)
				in.fail("self-loop on vertex " + std::to_string(u + 1));
			edges.emplace_back(std::min(u, v), std::max(u, v));
		} else if(head == "w") {
			need_header();
			if(f.witness)
				in.fail("duplicate witness line");
			if(t.size() < 2)
				in.fail("witness line needs a kind");
			auto kind = parse_kind_tag(t[1]);
			if(!kind)
				in.fail("unknown witness kind '" + std::string(t[1]) + "'");
			f.witness = Witness{*kind, in.ids_from(2, *n, "witness vertex")};
		} else if(head == "o") {
			need_header();
			if(f.origin)
				in.fail("duplicate origin line");
			VertexSet o;
			for(std::size_t i = 1; i < t.size(); ++i) {
				long long v = in.number(i);
				if(v < 1)
					in.fail("origin ids are 1-based");
				o.push_back(static_cast<Vertex>(v - 1));
			}
			if(static_cast<long long>(o.size()) != *n)
				in.fail("origin line must list one id per vertex");
			f.origin = std::move(o);
		} else if(head == "S:" || head == "A:" || head == "B:") {
			need_header();
			auto &slot = head == "S:" ? cs : (head == "A:" ? ca : cb);
			if(slot)
				in.fail("duplicate certificate line");
			slot = in.ids_from(1, *n, "certificate vertex");
		} else if(head == "r") {
			need_header();
			if(t.size() != 3)
				in.fail("role line needs a vertex and a tag");
			f.roles.emplace_back(in.id(1, *n, "vertex"), std::string(t[2]));
		} else if(head == "t") {
			need_header();
			if(t.size() < 3)
				in.fail("trace line needs a rule and an action");
			auto rule = parse_rule_name(t[1]);
			if(!rule)
				in.fail("unknown rule '" + std::string(t[1]) + "'");
			TraceEvent ev{*rule, {}, std::nullopt};
			if(t[2] == "yes" || t[2] == "no") {
				if(t.size() != 3)
					in.fail("decision trace line takes no vertices");
				ev.decision = t[2] == "yes";
			} else if(t[2] == "del") {
				for(std::size_t i = 3; i < t.size(); ++i) {
					long long v = in.number(i);
					if(v < 1)
						in.fail("trace ids are 1-based");
					ev.deleted.push_back(static_cast<Vertex>(v - 1));
				}
			} else {
				in.fail("trace action must be del, yes or no");
			}
			f.trace.push_back(std::move(ev));
		} else {
			in.fail("unknown line type '" + std::string(head) + "'");
		}
	}
	if(!n)
		throw InputError("missing 'p edge' header");
	if(static_cast<long long>(edges.size()) != m_declared)
		throw InputError("header declares " + std::to_string(m_declared) + " edges, found " +
		                 std::to_string(edges.size()));
	std::sort(edges.begin(), edges.end());
	if(auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
		throw InputError("duplicate edge " + std::to_string(dup->first + 1) + " " + std::to_string(dup->second + 1));
	f.graph = Graph::from_edges(static_cast<int>(*n), edges);
	if(cs || ca || cb) {
		if(!(cs && ca && cb))
			throw InputError("certificate needs all of S:, A: and B:");
		f.certificate = CutsetCertificate{*cs, *ca, *cb};
	}
	return f;
}

std::string emit_instance(const InstanceFile &f) {
	std::ostringstream os;
	const Graph &g = f.graph;
	os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
	for(auto [u, v] : g.edges())
		os << "e " << u + 1 << ' ' << v + 1 << '\n';
	if(f.witness) {
		os << "w " << kind_tag(f.witness->kind);
		append_set(os, f.witness->vertices);
		os << '\n';
	}
	if(f.origin) {
		os << 'o';
		append_set(os, *f.origin);
		os << '\n';
	}
	if(f.certificate)
		os << emit_certificate(*f.certificate);
	for(const auto &[v, tag] : f.roles)
		os << "r " << v + 1 << ' ' << tag << '\n';
	std::string trace = emit_trace(f.trace);
	std::istringstream lines(trace);
	for(std::string line; std::getline(lines, line);)
		os << "t " << line << '\n';
	return os.str();
}

SetSystem parse_set_system(std::string_view text) {
	LineReader in(text);
	SetSystem sys;
	std::optional<long long> n;
	long long m_declared = 0;
	while(in.next()) {
		const auto &t = in.tokens();
		std::string_view head = t[0];
		if(head == "p") {
			if(n)
				in.fail("duplicate header");
			if(t.size() != 4 || t[1] != "ss")
				in.fail("malformed header, expected 'p ss <n> <m>'");
			n = in.number(2);
			m_declared = in.number(3);
			if(*n < 0 || m_declared < 0 || *n > (1 << 30))
				in.fail("malformed header sizes");
			sys.n = static_cast<int>(*n);
		} else if(!n) {
			in.fail("'p ss' header must come first");
		} else if(head == "s") {
			sys.sets.push_back(in.ids_from(1, *n, "element"));
		} else if(head == "k") {
			if(sys.k)
				in.fail("duplicate k line");
			if(t.size() != 2)
				in.fail("k line takes one integer");
			long long k = in.number(1);
			if(k < 0 || k > (1 << 30))
				in.fail("k out of range");
			sys.k = static_cast<int>(k);
		} else if(head == "col") {
			if(sys.coloring)
				in.fail("duplicate coloring line");
			std::vector<int> col;
			for(std::size_t i = 1; i < t.size(); ++i) {
				long long c = in.number(i);
				if(c < 1 || c > (1 << 30))
					in.fail("colors are positive integers");
				col.push_back(static_cast<int>(c));
			}
			if(static_cast<long long>(col.size()) != *n)
				in.fail("coloring length " + std::to_string(col.size()) + " differs from n = " + std::to_string(*n));
			sys.coloring = std::move(col);
		} else {
			in.fail("unknown line type '" + std::string(head) + "'");
		}
	}
	if(!n)
		throw InputError("missing 'p ss' header");
	if(static_cast<long long>(sys.sets.size()) != m_declared)
		throw InputError("header declares " + std::to_string(m_declared) + " sets, found " +
		                 std::to_string(sys.sets.size()));
	try {
		check_set_system(sys);
	} catch(const std::invalid_argument &e) {
		throw InputError(e.what());
	}
	return sys;
}

std::string emit_set_system(const SetSystem &sys) {
	std::ostringstream os;
	os << "p ss " << sys.n << ' ' << sys.sets.size() << '\n';
	for(const auto &s : sys.sets) {
		os << 's';
		append_set(os, s);
		os << '\n';
	}
	if(sys.k)
		os << "k " << *sys.k << '\n';
	if(sys.coloring) {
		os << "col";
		for(int c : *sys.coloring)
			os << ' ' << c;
		os << '\n';
	}
	return os.str();
}

std::string emit_trace(const RuleTrace &trace) {
	std::ostringstream os;
	for(const auto &ev : trace) {
		os << rule_name(ev.rule);
		if(ev.decision)
			os << (*ev.decision ? " yes" : " no");
		else {
			os << " del";
			append_set(os, ev.deleted);
		}
		os << '\n';
	}
	return os.str();
}

RuleTrace parse_trace(std::string_view text) {
	std::string wrapped = "p edge 0 0\n";
	std::istringstream lines{std::string(text)};
	for(std::string line; std::getline(lines, line);)
		if(!split_ws(line).empty())
			wrapped += "t " + line + "\n";
	return parse_instance(wrapped).trace;
}

std::string emit_certificate(const CutsetCertificate &c) {
	std::ostringstream os;
	os << "S:";
	append_set(os, c.cutset);
	os << "\nA:";
	append_set(os, c.side_a);
	os << "\nB:";
	append_set(os, c.side_b);
	os << '\n';
	return os.str();
}

} // namespace scs
