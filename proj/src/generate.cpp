#include "kclique/generate.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace kclique {

UndirectedGraph er_graph(VertexId n, double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.emplace_back(u, v);
  return build_undirected(n, std::move(pairs));
}

UndirectedGraph powerlaw_graph(VertexId n, uint32_t m, uint64_t seed) {
  if (m < 1 || n <= m) throw std::invalid_argument("need n > m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(uint64_t(m) * (n - m));
  // Degree-proportional sampling via the endpoint pool: every edge
  // contributes both ends, so a vertex appears degree-many times.
  std::vector<VertexId> pool;
  pool.reserve(uint64_t(m) * (n - m) * 2);
  for (VertexId v = 0; v < m; ++v) {
    pairs.emplace_back(m, v);
    pool.push_back(m);
    pool.push_back(v);
  }
  std::unordered_set<VertexId> picked;
  for (VertexId t = m + 1; t < n; ++t) {
    picked.clear();
    while (picked.size() < m) {
      std::uniform_int_distribution<size_t> dist(0, pool.size() - 1);
      picked.insert(pool[dist(rng)]);
    }
    for (VertexId target : picked) {
      pairs.emplace_back(t, target);
      pool.push_back(t);
      pool.push_back(target);
    }
  }
  return build_undirected(n, std::move(pairs));
}

UndirectedGraph complete_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(uint64_t(n) * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return build_undirected(n, std::move(pairs));
}

EdgeList random_edge_list(VertexId n, uint64_t m, uint64_t seed) {
  if (n == 0) throw std::invalid_argument("need at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> dist(0, n - 1);
  EdgeList out;
  out.pairs.reserve(m);
  for (uint64_t i = 0; i < m; ++i) out.pairs.emplace_back(dist(rng), dist(rng));
  return out;
}

}  // namespace kclique
