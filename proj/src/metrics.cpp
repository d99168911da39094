#include "kclique/metrics.hpp"

#include <cmath>
#include <limits>

#include "kclique/errors.hpp"

namespace kclique {

uint64_t work_model(const Dag& d) {
  unsigned __int128 total = 0;
  for (VertexId u = 0; u < d.num_vertices(); ++u) {
    unsigned __int128 nbr_sum = 0;
    for (VertexId v : d.out_neighbors(u)) nbr_sum += d.out_degree(v);
    total += nbr_sum * d.out_degree(u);
    if (total > std::numeric_limits<uint64_t>::max())
      throw OverflowError("work model exceeds uint64 range");
  }
  return static_cast<uint64_t>(total);
}

double load_imbalance(std::span<const uint64_t> per_worker) {
  if (per_worker.empty()) return 0.0;
  double mean = 0.0;
  for (uint64_t x : per_worker) mean += static_cast<double>(x);
  mean /= static_cast<double>(per_worker.size());
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (uint64_t x : per_worker) {
    double dlt = static_cast<double>(x) - mean;
    var += dlt * dlt;
  }
  var /= static_cast<double>(per_worker.size());
  return std::sqrt(var) / mean;
}

double load_imbalance(const RunStats& stats) { return load_imbalance(stats.per_worker_iterations); }

}  // namespace kclique
