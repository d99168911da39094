#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "kclique/errors.hpp"
#include "kclique/graph.hpp"

namespace kclique {

// Raw (possibly duplicated, possibly self-looped) pairs as they appear
// in the input, with original ids.
struct EdgeList {
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
};

// Whitespace-separated "u v" lines; '#' and '%' lines and blank lines
// are skipped. Throws ParseError with a 1-based line number.
EdgeList parse_edge_list(std::istream& in);

// Dense relabeling (sorted distinct original ids -> 0..n-1), self-loop
// removal, deduplication, symmetric CSR.
UndirectedGraph build_undirected(const EdgeList& edges);

// Same cleanup for already-dense ids, keeping all n vertices even if
// isolated. Every pair must satisfy u, v < n.
UndirectedGraph build_undirected(VertexId n, std::vector<std::pair<VertexId, VertexId>> pairs);

// Binary CSR cache.
void save_csr(const UndirectedGraph& g, const std::filesystem::path& path);
UndirectedGraph load_csr(const std::filesystem::path& path);

// Dispatch on extension: ".csrbin" loads the cache, anything else is
// parsed as a text edge list.
UndirectedGraph load_graph_file(const std::filesystem::path& path);

}  // namespace kclique
