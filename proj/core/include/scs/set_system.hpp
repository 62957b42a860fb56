#pragma once

#include <optional>
#include <vector>

namespace scs {

using Element = int;
using ElementSet = std::vector<Element>;

/// Ground set 0..n-1 with a family of subsets, an optional budget k and an
/// optional coloring (colors 1..k, one entry per element).
struct SetSystem {
	int n = 0;
	std::vector<ElementSet> sets;
	std::optional<int> k;
	std::optional<std::vector<int>> coloring;

	bool operator==(const SetSystem &) const = default;
};

/// Throws std::invalid_argument if a set leaves [0, n), a set is unsorted
/// or repeats an element, or the coloring is malformed.
void check_set_system(const SetSystem &sys);

} // namespace scs
