#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "kclique/errors.hpp"
#include "kclique/graph.hpp"
#include "kclique/metrics.hpp"
#include "kclique/ordering.hpp"

namespace kclique {

enum class Strategy { Baseline, Citron };

// Skip thresholds for a subgraph about to be consumed at recursion
// level l (it must still supply l clique vertices):
//   Off    never skips,
//   On     skips when n < l (cannot complete a clique),
//   Paper  skips only when n < l - 2.
enum class PruneMode { Off, On, Paper };

struct Schedule {
  enum class Kind { Static, Cyclic, Dynamic };
  Kind kind = Kind::Dynamic;
  uint32_t chunk = 64;  // Dynamic grab size
};

struct CountConfig {
  int k = 3;  // clique size, >= 3
  OrderingKind ordering = OrderingKind::Core;
  Strategy strategy = Strategy::Citron;
  int workers = 1;
  Schedule schedule = {};
  PruneMode prune = PruneMode::On;
  bool instrument = false;  // count first-level construction array accesses
};

struct CountResult {
  uint64_t cliques = 0;
  RunStats stats;
};

// Orients g by the configured ordering, then counts k-cliques. The
// count is exact and identical for every worker count and schedule.
// Throws OverflowError when the count leaves uint64 range.
CountResult count_cliques(const UndirectedGraph& g, const CountConfig& cfg);

// Same, for a pre-oriented graph; stats.ordering_seconds stays 0.
CountResult count_on_dag(const Dag& d, const CountConfig& cfg);

// Checked sum of per-worker partial counts.
uint64_t aggregate_partials(std::span<const uint64_t> partials);

// True when a subgraph of n vertices entering recursion level l should
// be skipped under `mode`. Skipping never changes the count.
bool prune_skip(PruneMode mode, int level, uint64_t n);

// Parses "static", "cyclic", "dynamic", or "dynamic:N" (N >= 1).
bool parse_schedule(const std::string& text, Schedule& out);

}  // namespace kclique
