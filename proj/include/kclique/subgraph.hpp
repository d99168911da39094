#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

// Array-access tallies are template policies so the uninstrumented
// build compiles to plain loads and stores.
struct NoAccessCount {
  static constexpr bool enabled = false;
  void add(uint64_t = 1) {}
  uint64_t value() const { return 0; }
};

struct AccessCount {
  static constexpr bool enabled = true;
  void add(uint64_t c = 1) { n += c; }
  uint64_t value() const { return n; }
  uint64_t n = 0;
};

// Intersects two sorted ascending id lists. Returns the match count and,
// when Write is set, stores the matches (ascending) to `out`. Each fresh
// element load costs one counted access; `iters` advances once per loop
// step.
template <bool Write, class Ctr>
inline uint32_t intersect_sorted(const VertexId* a, uint32_t an, const VertexId* b, uint32_t bn,
                                 VertexId* out, Ctr& ctr, uint64_t& iters) {
  if (an == 0 || bn == 0) return 0;
  uint32_t i = 0, j = 0, matches = 0;
  VertexId av = a[0], bv = b[0];
  ctr.add(2);
  for (;;) {
    ++iters;
    if (av == bv) {
      if constexpr (Write) {
        out[matches] = av;
        ctr.add(1);
      }
      ++matches;
      ++i;
      ++j;
      if (i >= an || j >= bn) break;
      av = a[i];
      bv = b[j];
      ctr.add(2);
    } else if (av < bv) {
      if (++i >= an) break;
      av = a[i];
      ctr.add(1);
    } else {
      if (++j >= bn) break;
      bv = b[j];
      ctr.add(1);
    }
  }
  return matches;
}

// ---------------------------------------------------------------------
// Compact strategy: per-level append-only CSR over global vertex ids.
// slice(i) lists, sorted ascending, the subgraph out-neighbors of
// vertices[i]; no relabeling table exists.
// ---------------------------------------------------------------------

struct CitronSubgraph {
  const VertexId* vertices = nullptr;
  const uint32_t* degrees = nullptr;
  const uint32_t* offsets = nullptr;
  const VertexId* adjacency = nullptr;
  uint32_t n = 0;
  uint32_t edges = 0;

  std::span<const VertexId> vertex_set() const { return {vertices, n}; }
  uint32_t slice_size(uint32_t i) const { return degrees[i]; }
  std::span<const VertexId> slice(uint32_t i) const { return {adjacency + offsets[i], degrees[i]}; }
};

// Preallocated buffers for one worker: one level set per recursion
// depth that materializes a subgraph (levels 3..k-1), plus a degree
// scratch row for the depth that only needs degrees.
class SubgraphWorkspace {
 public:
  struct Level {
    std::vector<VertexId> vertices;
    std::vector<uint32_t> degrees;
    std::vector<uint32_t> offsets;
    std::vector<VertexId> adjacency;
  };

  // capacity = max out-degree of the oriented graph.
  SubgraphWorkspace(uint32_t capacity, int k) : cap_(capacity), k_(k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    uint64_t adj_cap = uint64_t(capacity) * (capacity > 0 ? capacity - 1 : 0) / 2;
    for (int l = 3; l <= k - 1; ++l) {
      Level lv;
      lv.vertices.resize(capacity);
      lv.degrees.resize(capacity);
      lv.offsets.resize(capacity + 1);
      lv.adjacency.resize(adj_cap);
      levels_.push_back(std::move(lv));
    }
    scratch_.resize(capacity);
  }

  uint32_t capacity() const { return cap_; }
  int k() const { return k_; }

  Level& level(int l) {
    if (l < 3 || l > k_ - 1) throw std::out_of_range("no materialized buffer for this level");
    return levels_[static_cast<size_t>(l - 3)];
  }
  std::vector<uint32_t>& scratch() { return scratch_; }

  // Actual footprint of one materialized subgraph: vertices + degrees +
  // offsets + adjacency entries, four bytes each.
  void note_build(uint32_t n, uint32_t edges) {
    uint64_t bytes = (uint64_t(n) * 3 + 1 + edges) * 4;
    if (bytes > max_bytes_) max_bytes_ = bytes;
  }
  uint64_t max_subgraph_bytes() const { return max_bytes_; }
  void reset_stats() { max_bytes_ = 0; }

 private:
  std::vector<Level> levels_;
  std::vector<uint32_t> scratch_;
  uint32_t cap_;
  int k_;
  uint64_t max_bytes_ = 0;
};

namespace detail {

// Fills one level set: copies `cand` as the vertex set, then intersects
// each member's source adjacency with the vertex set itself.
template <class Ctr, class SliceOf>
void fill_citron_level(std::span<const VertexId> cand, SliceOf&& slice_of,
                       SubgraphWorkspace::Level& L, CitronSubgraph& out, Ctr& ctr,
                       uint64_t& iters) {
  uint32_t s = static_cast<uint32_t>(cand.size());
  for (uint32_t i = 0; i < s; ++i) L.vertices[i] = cand[i];
  ctr.add(uint64_t(s) * 2);
  L.offsets[0] = 0;
  uint32_t edges = 0;
  for (uint32_t i = 0; i < s; ++i) {
    VertexId v = L.vertices[i];
    ctr.add(1);
    std::span<const VertexId> nbrs = slice_of(v, i);
    uint32_t cnt = intersect_sorted<true>(L.vertices.data(), s, nbrs.data(),
                                          static_cast<uint32_t>(nbrs.size()),
                                          L.adjacency.data() + edges, ctr, iters);
    L.degrees[i] = cnt;
    ctr.add(1);
    edges += cnt;
    L.offsets[i + 1] = edges;
  }
  out = {L.vertices.data(), L.degrees.data(), L.offsets.data(), L.adjacency.data(), s, edges};
}

}  // namespace detail

// Subgraph induced on the out-neighborhood of u, written into the
// workspace buffer for level k-1.
template <class Ctr>
CitronSubgraph build_first_level_citron(const Dag& d, VertexId u, SubgraphWorkspace& ws, Ctr& ctr,
                                        uint64_t& iters) {
  CitronSubgraph out;
  auto cand = d.out_neighbors(u);
  detail::fill_citron_level(
      cand, [&](VertexId v, uint32_t) { return d.out_neighbors(v); }, ws.level(ws.k() - 1), out,
      ctr, iters);
  ws.note_build(out.n, out.edges);
  return out;
}

// Child subgraph induced on parent.slice(member_index), written into the
// buffer for child_level. The member's parent-row is located by a
// lockstep scan: the child vertex set is a subsequence of the parent's.
template <class Ctr>
CitronSubgraph build_next_level_citron(const CitronSubgraph& parent, uint32_t member_index,
                                       int child_level, SubgraphWorkspace& ws, Ctr& ctr,
                                       uint64_t& iters) {
  CitronSubgraph out;
  std::span<const VertexId> cand = parent.slice(member_index);
  uint32_t pi = 0;
  detail::fill_citron_level(
      cand,
      [&](VertexId v, uint32_t) {
        while (parent.vertices[pi] != v) {
          ++pi;
          ++iters;
          assert(pi < parent.n);
        }
        return parent.slice(pi);
      },
      ws.level(child_level), out, ctr, iters);
  ws.note_build(out.n, out.edges);
  return out;
}

// Degrees of the would-be child subgraph without materializing it;
// returns a view over the workspace scratch row.
template <class Ctr>
std::span<const uint32_t> citron_degrees_only(const CitronSubgraph& parent, uint32_t member_index,
                                              SubgraphWorkspace& ws, Ctr& ctr, uint64_t& iters) {
  std::span<const VertexId> cand = parent.slice(member_index);
  uint32_t s = static_cast<uint32_t>(cand.size());
  uint32_t* deg = ws.scratch().data();
  uint32_t pi = 0;
  for (uint32_t i = 0; i < s; ++i) {
    VertexId v = cand[i];
    ctr.add(1);
    while (parent.vertices[pi] != v) {
      ++pi;
      ++iters;
      assert(pi < parent.n);
    }
    std::span<const VertexId> nbrs = parent.slice(pi);
    deg[i] = intersect_sorted<false>(cand.data(), s, nbrs.data(),
                                     static_cast<uint32_t>(nbrs.size()), nullptr, ctr, iters);
    ctr.add(1);
  }
  return {deg, s};
}

// ---------------------------------------------------------------------
// Baseline strategy: graph-sized relabeling table and level labels, one
// flat stride-`capacity` adjacency over local ids, per-level node and
// degree rows. Deeper levels shrink rows in place by swapping expelled
// entries past the live end.
// ---------------------------------------------------------------------

struct BaselineSubgraph {
  int level = 0;  // recursion level this vertex set is consumed at
  uint32_t n = 0;
};

class LabelWorkspace {
 public:
  LabelWorkspace(VertexId num_vertices, uint32_t capacity, int k)
      : remap_(num_vertices, -1),
        labels_(num_vertices, k),
        flat_(uint64_t(capacity) * capacity),
        stride_(capacity),
        k_(k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    nodes_.resize(static_cast<size_t>(k - 1));
    degrees_.resize(static_cast<size_t>(k - 1));
    for (int l = 2; l <= k - 1; ++l) {
      nodes_[static_cast<size_t>(l - 2)].resize(capacity);
      degrees_[static_cast<size_t>(l - 2)].resize(capacity);
    }
    footprint_ = (uint64_t(num_vertices) * 2 + flat_.size()) * 4 +
                 uint64_t(k - 2) * capacity * 2 * 4;
  }

  uint32_t capacity() const { return stride_; }
  int k() const { return k_; }
  uint64_t footprint_bytes() const { return footprint_; }

  int32_t* remap() { return remap_.data(); }
  int32_t* labels() { return labels_.data(); }
  VertexId* nodes(int level) { return nodes_[static_cast<size_t>(level - 2)].data(); }
  uint32_t* degrees(int level) { return degrees_[static_cast<size_t>(level - 2)].data(); }
  VertexId* adj_row(uint32_t local) { return flat_.data() + uint64_t(stride_) * local; }

 private:
  std::vector<int32_t> remap_;
  std::vector<int32_t> labels_;
  std::vector<VertexId> flat_;
  std::vector<std::vector<VertexId>> nodes_;
  std::vector<std::vector<uint32_t>> degrees_;
  uint32_t stride_;
  int k_;
  uint64_t footprint_;
};

// Relabels N+(u) to local ids 0..s-1, labels them k-1, then scans each
// member's source adjacency and keeps edges inside the set. Slices come
// out sorted in local ids at this level.
template <class Ctr>
BaselineSubgraph build_first_level_baseline(const Dag& d, VertexId u, LabelWorkspace& ws, Ctr& ctr,
                                            uint64_t& iters) {
  int lvl = ws.k() - 1;
  int32_t* remap = ws.remap();
  int32_t* labels = ws.labels();
  VertexId* nodes = ws.nodes(lvl);
  uint32_t* deg = ws.degrees(lvl);

  auto out = d.out_neighbors(u);
  uint32_t s = static_cast<uint32_t>(out.size());
  for (uint32_t i = 0; i < s; ++i) {
    VertexId v = out[i];
    remap[v] = static_cast<int32_t>(i);
    labels[i] = lvl;
    nodes[i] = i;
    deg[i] = 0;
    ctr.add(5);
  }
  for (uint32_t i = 0; i < s; ++i) {
    VertexId v = out[i];
    int32_t vloc = remap[v];
    ctr.add(2);
    VertexId* row = ws.adj_row(static_cast<uint32_t>(vloc));
    for (VertexId w : d.out_neighbors(v)) {
      ++iters;
      int32_t wloc = remap[w];
      ctr.add(2);
      if (wloc >= 0) {
        row[deg[vloc]] = static_cast<VertexId>(wloc);
        ++deg[vloc];
        ctr.add(3);
      }
    }
  }
  return {lvl, s};
}

// Undoes the relabeling and labels so the graph-sized tables are clean
// for the next top vertex.
template <class Ctr>
void teardown_first_level_baseline(const Dag& d, VertexId u, const BaselineSubgraph& top,
                                   LabelWorkspace& ws, Ctr& ctr) {
  int32_t* remap = ws.remap();
  int32_t* labels = ws.labels();
  for (VertexId v : d.out_neighbors(u)) {
    remap[v] = -1;
    ctr.add(2);
  }
  for (uint32_t i = 0; i < top.n; ++i) {
    labels[i] = ws.k();
    ctr.add(1);
  }
}

// Child set for one member: collect slice entries still labeled with the
// parent level, relabel them one level down, then shrink each survivor's
// row in place, swapping expelled ids past the live end.
template <class Ctr>
BaselineSubgraph build_next_level_baseline(const BaselineSubgraph& parent, uint32_t member_index,
                                           LabelWorkspace& ws, Ctr& ctr, uint64_t& iters) {
  int pl = parent.level;
  int cl = pl - 1;
  int32_t* labels = ws.labels();
  VertexId* pnodes = ws.nodes(pl);
  uint32_t* pdeg = ws.degrees(pl);
  VertexId* cnodes = ws.nodes(cl);
  uint32_t* cdeg = ws.degrees(cl);

  VertexId uloc = pnodes[member_index];
  ctr.add(1);
  uint32_t ns = 0;
  VertexId* urow = ws.adj_row(uloc);
  for (uint32_t j = 0; j < pdeg[uloc]; ++j) {
    VertexId w = urow[j];
    ctr.add(1);
    if (labels[w] == pl) {
      labels[w] = cl;
      cnodes[ns++] = w;
      cdeg[w] = 0;
      ctr.add(4);
    }
  }
  for (uint32_t i = 0; i < ns; ++i) {
    VertexId v = cnodes[i];
    ctr.add(1);
    VertexId* row = ws.adj_row(v);
    uint32_t end = pdeg[v];
    ctr.add(1);
    for (uint32_t j = 0; j < end;) {
      ++iters;
      VertexId w = row[j];
      ctr.add(2);
      if (labels[w] == cl) {
        ++cdeg[v];
        ctr.add(2);
        ++j;
      } else {
        --end;
        row[j] = row[end];
        row[end] = w;
        ctr.add(3);
      }
    }
  }
  return {cl, ns};
}

// Restores child members' labels to the parent level after the child's
// recursion returns.
inline void release_baseline(const BaselineSubgraph& child, LabelWorkspace& ws) {
  int32_t* labels = ws.labels();
  VertexId* cnodes = ws.nodes(child.level);
  for (uint32_t i = 0; i < child.n; ++i) labels[cnodes[i]] = child.level + 1;
}

}  // namespace kclique
