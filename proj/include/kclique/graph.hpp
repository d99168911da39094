#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kclique {

using VertexId = uint32_t;

// One failed structural check. `vertex` is a witness where that makes
// sense (otherwise the id is the first vertex involved).
struct Violation {
  std::string invariant;
  VertexId vertex = 0;
  std::string detail;
};

// Immutable undirected graph in CSR form. Neighbor lists are sorted
// ascending, contain no self-loops or duplicates, and every edge {u,v}
// appears in both lists.
class UndirectedGraph {
 public:
  UndirectedGraph() : offsets_(1, 0) {}
  UndirectedGraph(std::vector<uint64_t> offsets, std::vector<VertexId> neighbors);

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
  uint64_t num_edges() const { return neighbors_.size() / 2; }
  uint64_t num_entries() const { return neighbors_.size(); }

  uint32_t degree(VertexId u) const;                     // bounds-checked
  std::span<const VertexId> neighbors(VertexId u) const; // bounds-checked

  const std::vector<uint64_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& neighbor_data() const { return neighbors_; }

  bool operator==(const UndirectedGraph&) const = default;

 private:
  std::vector<uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

// Directed acyclic graph in CSR form, the result of orienting an
// undirected graph along a total order. Out-lists are sorted ascending.
class Dag {
 public:
  Dag() : offsets_(1, 0) {}
  Dag(std::vector<uint64_t> offsets, std::vector<VertexId> out_neighbors);

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
  uint64_t num_edges() const { return out_neighbors_.size(); }

  uint32_t out_degree(VertexId u) const;                     // bounds-checked
  std::span<const VertexId> out_neighbors(VertexId u) const; // bounds-checked

  const std::vector<uint64_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& neighbor_data() const { return out_neighbors_; }

  bool operator==(const Dag&) const = default;

 private:
  std::vector<uint64_t> offsets_;
  std::vector<VertexId> out_neighbors_;
};

// Vertex -> rank permutation. ranks[u] is the position of u in the
// elimination/order sequence; smaller rank comes first.
struct RankAssignment {
  std::vector<VertexId> ranks;
  bool is_permutation() const;
};

uint32_t max_out_degree(const Dag& d);

std::vector<Violation> validate(const UndirectedGraph& g);
std::vector<Violation> validate(const Dag& d);

}  // namespace kclique
