#include "kclique/ordering.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "kclique/parallel.hpp"

namespace kclique {

RankAssignment core_ordering(const UndirectedGraph& g) {
  VertexId n = g.num_vertices();
  std::vector<uint32_t> deg(n);
  for (VertexId u = 0; u < n; ++u) deg[u] = g.degree(u);

  // Min-heap keyed by (current degree, id). Entries go stale when a
  // neighbor removal lowers a degree; stale pops are skipped, so each
  // pop yields the exact minimum without rescanning.
  auto key = [](uint32_t d, VertexId u) { return (uint64_t(d) << 32) | u; };
  std::priority_queue<uint64_t, std::vector<uint64_t>, std::greater<>> heap;
  for (VertexId u = 0; u < n; ++u) heap.push(key(deg[u], u));

  RankAssignment out;
  out.ranks.assign(n, 0);
  std::vector<bool> removed(n, false);
  VertexId next_rank = 0;
  while (!heap.empty()) {
    uint64_t top = heap.top();
    heap.pop();
    VertexId u = static_cast<VertexId>(top & 0xffffffffu);
    uint32_t d = static_cast<uint32_t>(top >> 32);
    if (removed[u] || d != deg[u]) continue;
    removed[u] = true;
    out.ranks[u] = next_rank++;
    for (VertexId v : g.neighbors(u)) {
      if (!removed[v]) {
        --deg[v];
        heap.push(key(deg[v], v));
      }
    }
  }
  return out;
}

RankAssignment degree_ordering(const UndirectedGraph& g) {
  VertexId n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    uint32_t da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  RankAssignment out;
  out.ranks.assign(n, 0);
  for (VertexId r = 0; r < n; ++r) out.ranks[order[r]] = r;
  return out;
}

bool degree_rank_less(const UndirectedGraph& g, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("degree_rank_less needs distinct vertices");
  uint32_t du = g.degree(u), dv = g.degree(v);
  return du != dv ? du < dv : u < v;
}

Dag directionalize(const UndirectedGraph& g, OrderingKind kind, int workers) {
  VertexId n = g.num_vertices();
  std::vector<VertexId> ranks;
  if (kind == OrderingKind::Core) ranks = core_ordering(g).ranks;

  auto keeps = [&](VertexId u, VertexId v) {
    if (kind == OrderingKind::Core) return ranks[u] < ranks[v];
    uint32_t du = g.degree(u), dv = g.degree(v);
    return du != dv ? du < dv : u < v;
  };

  // Two passes: count kept edges per vertex, then fill. Disjoint writes
  // make both passes order-independent.
  std::vector<uint64_t> offsets(n + 1, 0);
  parallel_blocks(n, workers, [&](uint64_t begin, uint64_t end) {
    for (VertexId u = static_cast<VertexId>(begin); u < end; ++u) {
      uint64_t kept = 0;
      for (VertexId v : g.neighbors(u))
        if (keeps(u, v)) ++kept;
      offsets[u + 1] = kept;
    }
  });
  for (VertexId u = 0; u < n; ++u) offsets[u + 1] += offsets[u];

  std::vector<VertexId> out(offsets[n]);
  parallel_blocks(n, workers, [&](uint64_t begin, uint64_t end) {
    for (VertexId u = static_cast<VertexId>(begin); u < end; ++u) {
      uint64_t pos = offsets[u];
      for (VertexId v : g.neighbors(u))
        if (keeps(u, v)) out[pos++] = v;
    }
  });
  return Dag(std::move(offsets), std::move(out));
}

}  // namespace kclique
