#pragma once

#include "kclique/graph.hpp"

namespace kclique {

enum class OrderingKind { Core, Degree };

// Repeatedly removes the vertex with minimum remaining degree (ties by
// smaller id); ranks[u] is u's removal position. The induced orientation
// bounds every out-degree by the graph's degeneracy.
RankAssignment core_ordering(const UndirectedGraph& g);

// Ranks by (degree, id) lexicographically.
RankAssignment degree_ordering(const UndirectedGraph& g);

// True when u precedes v under degree ordering. u == v is an error.
bool degree_rank_less(const UndirectedGraph& g, VertexId u, VertexId v);

// Orients each undirected edge from lower to higher rank. Output lists
// stay sorted by vertex id; the result is identical for any worker count.
Dag directionalize(const UndirectedGraph& g, OrderingKind kind, int workers = 1);

}  // namespace kclique
