#include "kclique/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace kclique {

namespace {

void check_csr(const std::vector<uint64_t>& offsets, size_t entries) {
  if (offsets.empty()) throw std::invalid_argument("offsets must have at least one entry");
  if (offsets.front() != 0) throw std::invalid_argument("offsets[0] must be 0");
  if (!std::is_sorted(offsets.begin(), offsets.end()))
    throw std::invalid_argument("offsets must be nondecreasing");
  if (offsets.back() != entries)
    throw std::invalid_argument("offsets back must equal neighbor count");
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::vector<uint64_t> offsets, std::vector<VertexId> neighbors)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {
  check_csr(offsets_, neighbors_.size());
}

uint32_t UndirectedGraph::degree(VertexId u) const {
  if (u >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return static_cast<uint32_t>(offsets_[u + 1] - offsets_[u]);
}

std::span<const VertexId> UndirectedGraph::neighbors(VertexId u) const {
  if (u >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
}

Dag::Dag(std::vector<uint64_t> offsets, std::vector<VertexId> out_neighbors)
    : offsets_(std::move(offsets)), out_neighbors_(std::move(out_neighbors)) {
  check_csr(offsets_, out_neighbors_.size());
}

uint32_t Dag::out_degree(VertexId u) const {
  if (u >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return static_cast<uint32_t>(offsets_[u + 1] - offsets_[u]);
}

std::span<const VertexId> Dag::out_neighbors(VertexId u) const {
  if (u >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return {out_neighbors_.data() + offsets_[u], out_neighbors_.data() + offsets_[u + 1]};
}

bool RankAssignment::is_permutation() const {
  std::vector<bool> seen(ranks.size(), false);
  for (VertexId r : ranks) {
    if (r >= ranks.size() || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

uint32_t max_out_degree(const Dag& d) {
  uint32_t best = 0;
  for (VertexId u = 0; u < d.num_vertices(); ++u) best = std::max(best, d.out_degree(u));
  return best;
}

namespace {

// Shared per-list checks for CSR adjacency: in-range ids, strictly
// ascending (implies no duplicates), no self-loops.
template <class GetSpan>
void check_lists(VertexId n, GetSpan&& get, std::vector<Violation>& out) {
  for (VertexId u = 0; u < n; ++u) {
    std::span<const VertexId> nbrs = get(u);
    VertexId prev = 0;
    bool first = true;
    for (VertexId v : nbrs) {
      if (v >= n) {
        out.push_back({"neighbor id in range", u,
                       "vertex " + std::to_string(u) + " lists neighbor " + std::to_string(v)});
        return;
      }
      if (v == u) {
        out.push_back({"no self-loops", u, "vertex " + std::to_string(u) + " lists itself"});
        return;
      }
      if (!first && v <= prev) {
        out.push_back({"neighbor list sorted strictly ascending", u,
                       "vertex " + std::to_string(u) + " has out-of-order entry " + std::to_string(v)});
        return;
      }
      prev = v;
      first = false;
    }
  }
}

}  // namespace

std::vector<Violation> validate(const UndirectedGraph& g) {
  std::vector<Violation> out;
  VertexId n = g.num_vertices();
  check_lists(n, [&](VertexId u) { return g.neighbors(u); }, out);
  if (!out.empty()) return out;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      auto back = g.neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u)) {
        out.push_back({"edges are symmetric", u,
                       "edge " + std::to_string(u) + "->" + std::to_string(v) + " has no reverse"});
        return out;
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const Dag& d) {
  std::vector<Violation> out;
  VertexId n = d.num_vertices();
  check_lists(n, [&](VertexId u) { return d.out_neighbors(u); }, out);
  if (!out.empty()) return out;

  // Kahn topological sort; leftovers mean a cycle.
  std::vector<uint32_t> indeg(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : d.out_neighbors(u)) ++indeg[v];
  std::queue<VertexId> q;
  for (VertexId u = 0; u < n; ++u)
    if (indeg[u] == 0) q.push(u);
  uint64_t seen = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    ++seen;
    for (VertexId v : d.out_neighbors(u))
      if (--indeg[v] == 0) q.push(v);
  }
  if (seen != n) {
    VertexId witness = 0;
    for (VertexId u = 0; u < n; ++u)
      if (indeg[u] > 0) {
        witness = u;
        break;
      }
    out.push_back({"acyclic", witness, "directed cycle through vertex " + std::to_string(witness)});
  }
  return out;
}

}  // namespace kclique
