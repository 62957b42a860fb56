#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scs/certificate.hpp"
#include "scs/graph.hpp"
#include "scs/set_system.hpp"
#include "scs/trace.hpp"
#include "scs/witness.hpp"

namespace scs {

/// Malformed input. The message includes the 1-based line number when known.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A graph file with its optional sections. All ids in the text are 1-based.
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>
///   w <kind> <v>...            witness
///   o <v>...                   input id of each vertex (after a reduction)
///   S: <v>...  A: ...  B: ...  stable cutset certificate (three lines)
///   r <v> <tag>                role of a gadget vertex
///   t <rule> del <v>...        trace event that deleted vertices
///   t <rule> yes|no            trace event that decided the instance
struct InstanceFile {
	Graph graph;
	std::optional<Witness> witness;
	std::optional<VertexSet> origin;
	std::optional<CutsetCertificate> certificate;
	std::vector<std::pair<Vertex, std::string>> roles;
	RuleTrace trace;

	bool operator==(const InstanceFile &) const = default;
};

InstanceFile parse_instance(std::string_view text);
std::string emit_instance(const InstanceFile &f);

/// Only the graph and witness sections are used; others are still validated.
inline Graph parse_graph(std::string_view text) {
	return parse_instance(text).graph;
}

///   p ss <n> <m>
///   s <e>...      one line per set, 1-based elements
///   k <int>
///   col <c1> ... <cn>
SetSystem parse_set_system(std::string_view text);
std::string emit_set_system(const SetSystem &sys);

/// One event per line: "rr7 del 4 5 6" or "rr3 yes" (1-based ids).
std::string emit_trace(const RuleTrace &trace);
RuleTrace parse_trace(std::string_view text);

/// "S: 1 2" style lines for a certificate (1-based).
std::string emit_certificate(const CutsetCertificate &c);

} // namespace scs
