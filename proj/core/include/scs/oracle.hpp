#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "scs/certificate.hpp"
#include "scs/graph.hpp"
#include "scs/set_system.hpp"

namespace scs {

/// Thrown when an exact search exceeds its node budget. The searches never
/// return a guess in place of an exhausted budget.
class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct SearchStats {
	std::uint64_t nodes = 0;
	std::uint64_t decisions = 0;
	int max_depth = 0;
};

struct OracleOptions {
	std::uint64_t node_budget = 200'000'000;
};

/// Exhaustive backtracking search over S/A/B labelings.
///
/// Vertices are branched in order of descending degree (ties by id). Putting
/// v in S removes S from its neighbors; putting v on side A removes B from its
/// neighbors and vice versa. The first vertex placed outside S only tries A.
std::optional<CutsetCertificate> find_stable_cutset(const Graph &g, const OracleOptions &opts = {},
                                                    SearchStats *stats = nullptr);

/// Stable cutset of minimum cardinality, provided that cardinality is <= k.
std::optional<CutsetCertificate> min_stable_cutset(const Graph &g, int k, const OracleOptions &opts = {},
                                                   SearchStats *stats = nullptr);

/// Tries S = N(C) and then S = N(C - v) for each v in C in increasing order.
/// Throws std::invalid_argument if C is not a clique.
std::optional<CutsetCertificate> has_c_simple_cutset(const Graph &g, std::span<const Vertex> c);
/// Same, for callers that already know whether g is connected.
std::optional<CutsetCertificate> has_c_simple_cutset(const Graph &g, std::span<const Vertex> c, bool g_connected);

struct BruteForceOptions {
	std::uint64_t subset_budget = 1ull << 26;
};

/// Smallest-first search over subsets of size <= k. Requires sys.k.
std::optional<ElementSet> solve_hitting_set(const SetSystem &sys, const BruteForceOptions &opts = {});

/// Product over color classes. Requires sys.k and sys.coloring.
std::optional<ElementSet> solve_multicolored_hitting_set(const SetSystem &sys, const BruteForceOptions &opts = {});

/// All 2^n subsets in increasing bitmask order.
std::optional<ElementSet> solve_set_splitting(const SetSystem &sys, const BruteForceOptions &opts = {});

bool is_hitting_set(const SetSystem &sys, std::span<const Element> s);
bool splits_all(const SetSystem &sys, std::span<const Element> s);

} // namespace scs
