#pragma once

#include <cstdint>

#include "kclique/graph.hpp"

namespace kclique {

// Reference k-clique counter: plain backtracking over candidate sets
// restricted to higher-id neighbors, so every clique is enumerated
// exactly once. Deliberately naive and unrelated to the production
// counting path. Refuses graphs with more than 10000 vertices
// (SizeGuardError); k must be >= 1.
uint64_t brute_force_count(const UndirectedGraph& g, int k);

}  // namespace kclique
