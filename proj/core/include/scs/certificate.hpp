#pragma once

#include <optional>
#include <span>

#include "scs/graph.hpp"

namespace scs {

/// Partition V = S + A + B witnessing that S is a stable cutset: S stable,
/// A and B nonempty, and no edge between A and B.
struct CutsetCertificate {
	VertexSet cutset;
	VertexSet side_a;
	VertexSet side_b;

	bool operator==(const CutsetCertificate &) const = default;
};

bool verify_certificate(const Graph &g, const CutsetCertificate &c);

/// Builds a certificate for S when S is stable and g - S is disconnected.
/// Side A is the component of g - S holding the smallest remaining vertex.
std::optional<CutsetCertificate> certificate_for_cutset(const Graph &g, std::span<const Vertex> s);

} // namespace scs
