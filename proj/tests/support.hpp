#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "kclique/generate.hpp"
#include "kclique/graph.hpp"
#include "kclique/ingest.hpp"

namespace testsupport {

using namespace kclique;

// Seven-vertex example graph used throughout; all frozen values below
// were derived by hand from its edge list.
inline UndirectedGraph seven_graph() {
  EdgeList e;
  e.pairs = {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
             {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
  return build_undirected(e);
}

inline constexpr uint64_t kSevenCliques3 = 5;
inline constexpr uint64_t kSevenCliques4 = 1;
inline constexpr uint64_t kSevenCliques5 = 0;
inline constexpr uint64_t kSevenWorkModelDegree = 17;
inline constexpr uint64_t kSevenWorkModelCore = 21;
inline constexpr uint32_t kSevenMaxOutDegree = 3;

// Degree order: d = [3,4,2,3,5,3,2], ties to the smaller id.
inline const std::vector<std::vector<VertexId>> kSevenDegreeDagRows = {
    {1, 3, 4}, {4}, {1, 5}, {1, 4}, {}, {4}, {4, 5}};

// Peeling order [2,5,6,0,1,3,4] -> ranks by vertex.
inline const std::vector<VertexId> kSevenCoreRanks = {3, 4, 0, 5, 6, 1, 2};
inline const std::vector<std::vector<VertexId>> kSevenCoreDagRows = {
    {1, 3, 4}, {3, 4}, {1, 5}, {4}, {}, {4, 6}, {4}};

inline std::vector<std::vector<VertexId>> dag_rows(const Dag& d) {
  std::vector<std::vector<VertexId>> rows(d.num_vertices());
  for (VertexId u = 0; u < d.num_vertices(); ++u) {
    auto s = d.out_neighbors(u);
    rows[u].assign(s.begin(), s.end());
  }
  return rows;
}

inline std::vector<VertexId> random_permutation(VertexId n, uint64_t seed) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline UndirectedGraph permute_graph(const UndirectedGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.num_edges());
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) pairs.emplace_back(perm[u], perm[v]);
  return build_undirected(g.num_vertices(), std::move(pairs));
}

// Same directed structure under new labels: edge u->v becomes
// perm[u]->perm[v], i.e. relabeling composed with consistent re-ranking.
inline Dag permute_dag(const Dag& d, const std::vector<VertexId>& perm) {
  VertexId n = d.num_vertices();
  std::vector<std::vector<VertexId>> rows(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : d.out_neighbors(u)) rows[perm[u]].push_back(perm[v]);
  std::vector<uint64_t> offsets(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    std::sort(rows[u].begin(), rows[u].end());
    offsets[u + 1] = offsets[u] + rows[u].size();
  }
  std::vector<VertexId> flat;
  flat.reserve(offsets[n]);
  for (VertexId u = 0; u < n; ++u) flat.insert(flat.end(), rows[u].begin(), rows[u].end());
  return Dag(std::move(offsets), std::move(flat));
}

// Degeneracy by repeated full scans for the minimum remaining degree.
// Deliberately quadratic and heap-free; shares nothing with the
// production ordering code.
inline uint32_t naive_degeneracy(const UndirectedGraph& g) {
  VertexId n = g.num_vertices();
  std::vector<uint32_t> deg(n);
  std::vector<bool> gone(n, false);
  for (VertexId u = 0; u < n; ++u) deg[u] = g.degree(u);
  uint32_t best = 0;
  for (VertexId step = 0; step < n; ++step) {
    VertexId pick = n;
    for (VertexId u = 0; u < n; ++u)
      if (!gone[u] && (pick == n || deg[u] < deg[pick])) pick = u;
    best = std::max(best, deg[pick]);
    gone[pick] = true;
    for (VertexId v : g.neighbors(pick))
      if (!gone[v]) --deg[v];
  }
  return best;
}

// Triangle count as trace(A^3)/6; independent of every library code
// path, for cross-checking the reference counter itself.
inline uint64_t matrix_triangles(const UndirectedGraph& g) {
  size_t n = g.num_vertices();
  std::vector<std::vector<uint32_t>> a(n, std::vector<uint32_t>(n, 0));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u)) a[u][v] = 1;
  uint64_t trace = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      for (size_t k = 0; k < n; ++k)
        if (a[j][k] && a[k][i]) ++trace;
    }
  return trace / 6;
}

}  // namespace testsupport
