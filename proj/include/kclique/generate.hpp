#pragma once

#include <cstdint>

#include "kclique/graph.hpp"
#include "kclique/ingest.hpp"

namespace kclique {

// Erdos-Renyi G(n, p). Same seed, same graph.
UndirectedGraph er_graph(VertexId n, double p, uint64_t seed);

// Preferential-attachment graph: m + 1 seed vertices, then every new
// vertex attaches to m distinct existing vertices chosen proportionally
// to degree. Yields m * (n - m) edges and a heavy-tailed degree
// distribution. Requires n > m >= 1.
UndirectedGraph powerlaw_graph(VertexId n, uint32_t m, uint64_t seed);

UndirectedGraph complete_graph(VertexId n);

// m uniform random pairs over [0, n); may contain duplicates and
// self-loops, for exercising ingest cleanup.
EdgeList random_edge_list(VertexId n, uint64_t m, uint64_t seed);

}  // namespace kclique
