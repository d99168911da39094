#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

struct RunStats {
  double ordering_seconds = 0.0;
  double counting_seconds = 0.0;
  double total_seconds = 0.0;
  uint32_t max_out_degree = 0;
  // Sum over directed edges (u,v) of d+(u) * d+(v), i.e. for every
  // vertex its out-degree times the total out-degree of its
  // out-neighborhood. Predicts relative counting cost across orderings.
  uint64_t work_model = 0;
  uint64_t array_accesses = 0;      // populated only on instrumented runs
  uint64_t max_subgraph_bytes = 0;  // largest per-vertex structure footprint
  std::vector<uint64_t> per_worker_iterations;
};

// Throws OverflowError if the sum leaves uint64 range.
uint64_t work_model(const Dag& d);

// Population standard deviation of per-worker iteration counts divided
// by their mean; 0 when the mean is 0 or there are no workers.
double load_imbalance(std::span<const uint64_t> per_worker);
double load_imbalance(const RunStats& stats);

}  // namespace kclique
