#include "kclique/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kclique/errors.hpp"

namespace kclique {

namespace {

constexpr VertexId kMaxOracleVertices = 10000;

void extend(const std::vector<std::vector<VertexId>>& higher, const std::vector<VertexId>& cand,
            int chosen, int k, uint64_t& found) {
  if (chosen == k) {
    if (found == UINT64_MAX) throw OverflowError("clique count exceeds uint64 range");
    ++found;
    return;
  }
  if (cand.size() < static_cast<size_t>(k - chosen)) return;
  std::vector<VertexId> next;
  for (VertexId v : cand) {
    const std::vector<VertexId>& hv = higher[v];
    next.clear();
    std::set_intersection(cand.begin(), cand.end(), hv.begin(), hv.end(),
                          std::back_inserter(next));
    extend(higher, next, chosen + 1, k, found);
  }
}

}  // namespace

uint64_t brute_force_count(const UndirectedGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.num_vertices() > kMaxOracleVertices)
    throw SizeGuardError("reference counter is limited to 10000 vertices");
  if (k == 1) return g.num_vertices();
  if (k == 2) return g.num_edges();

  VertexId n = g.num_vertices();
  std::vector<std::vector<VertexId>> higher(n);
  for (VertexId u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    higher[u].assign(it, nbrs.end());
  }

  uint64_t found = 0;
  for (VertexId u = 0; u < n; ++u) extend(higher, higher[u], 1, k, found);
  return found;
}

}  // namespace kclique
