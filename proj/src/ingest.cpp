#include "kclique/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <string>
#include <string_view>

namespace kclique {

namespace {

constexpr char kMagic[8] = {'K', 'C', 'S', 'R', 'G', 'R', 'P', 'H'};
constexpr uint32_t kVersion = 1;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Parses one unsigned integer, advancing past it. Returns false if the
// text at *pos does not start with a digit.
bool take_uint(std::string_view s, size_t& pos, uint64_t& out) {
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first) return false;
  pos += static_cast<size_t>(ptr - first);
  return true;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) continue;
    if (line[pos] == '#' || line[pos] == '%') continue;

    uint64_t a, b;
    if (!take_uint(line, pos, a))
      throw ParseError(lineno, "expected a vertex id, got \"" + line + "\"");
    size_t sep = pos;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == sep || !take_uint(line, pos, b))
      throw ParseError(lineno, "expected two vertex ids, got \"" + line + "\"");
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos != line.size())
      throw ParseError(lineno, "trailing content after edge, got \"" + line + "\"");
    out.pairs.emplace_back(a, b);
  }
  return out;
}

UndirectedGraph build_undirected(VertexId n, std::vector<std::pair<VertexId, VertexId>> pairs) {
  std::vector<std::pair<VertexId, VertexId>> sym;
  sym.reserve(pairs.size() * 2);
  for (auto [u, v] : pairs) {
    if (u == v) continue;
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    sym.emplace_back(u, v);
    sym.emplace_back(v, u);
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());

  std::vector<uint64_t> offsets(static_cast<size_t>(n) + 1, 0);
  for (auto [u, v] : sym) ++offsets[u + 1];
  for (VertexId u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
  std::vector<VertexId> nbrs(sym.size());
  std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : sym) nbrs[cursor[u]++] = v;
  return UndirectedGraph(std::move(offsets), std::move(nbrs));
}

UndirectedGraph build_undirected(const EdgeList& edges) {
  std::vector<uint64_t> ids;
  ids.reserve(edges.pairs.size() * 2);
  for (auto [a, b] : edges.pairs) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto dense = [&](uint64_t raw) -> VertexId {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };

  std::vector<std::pair<VertexId, VertexId>> sym;
  sym.reserve(edges.pairs.size() * 2);
  for (auto [a, b] : edges.pairs) {
    if (a == b) continue;
    VertexId u = dense(a), v = dense(b);
    sym.emplace_back(u, v);
    sym.emplace_back(v, u);
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());

  VertexId n = static_cast<VertexId>(ids.size());
  std::vector<uint64_t> offsets(n + 1, 0);
  for (auto [u, v] : sym) ++offsets[u + 1];
  for (VertexId u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
  std::vector<VertexId> nbrs(sym.size());
  std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : sym) nbrs[cursor[u]++] = v;
  return UndirectedGraph(std::move(offsets), std::move(nbrs));
}

void save_csr(const UndirectedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  auto put = [&](const void* p, size_t len) { out.write(static_cast<const char*>(p), static_cast<std::streamsize>(len)); };
  put(kMagic, sizeof(kMagic));
  put(&kVersion, sizeof(kVersion));
  uint64_t n = g.num_vertices();
  uint64_t entries = g.num_entries();
  put(&n, sizeof(n));
  put(&entries, sizeof(entries));
  put(g.offsets().data(), g.offsets().size() * sizeof(uint64_t));
  put(g.neighbor_data().data(), g.neighbor_data().size() * sizeof(VertexId));
  if (!out) throw FormatError("short write to " + path.string());
}

UndirectedGraph load_csr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  auto get = [&](void* p, size_t len) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(len));
    if (in.gcount() != static_cast<std::streamsize>(len))
      throw FormatError(path.string() + ": truncated file");
  };
  char magic[8];
  get(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw FormatError(path.string() + ": bad magic, not a graph cache");
  uint32_t version;
  get(&version, sizeof(version));
  if (version != kVersion)
    throw FormatError(path.string() + ": unsupported cache version " + std::to_string(version));
  uint64_t n, entries;
  get(&n, sizeof(n));
  get(&entries, sizeof(entries));
  if (n > (uint64_t(1) << 32) - 2) throw FormatError(path.string() + ": vertex count out of range");
  std::vector<uint64_t> offsets(n + 1);
  get(offsets.data(), offsets.size() * sizeof(uint64_t));
  std::vector<VertexId> nbrs(entries);
  get(nbrs.data(), nbrs.size() * sizeof(VertexId));
  char extra;
  if (in.read(&extra, 1), in.gcount() != 0)
    throw FormatError(path.string() + ": trailing bytes after payload");
  try {
    return UndirectedGraph(std::move(offsets), std::move(nbrs));
  } catch (const std::invalid_argument& e) {
    throw FormatError(path.string() + ": inconsistent payload: " + e.what());
  }
}

UndirectedGraph load_graph_file(const std::filesystem::path& path) {
  if (path.extension() == ".csrbin") return load_csr(path);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return build_undirected(parse_edge_list(in));
}

}  // namespace kclique
