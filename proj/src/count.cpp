#include "kclique/count.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kclique/subgraph.hpp"

namespace kclique {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline bool checked_add(uint64_t& acc, uint64_t x) { return !__builtin_add_overflow(acc, x, &acc); }

struct WorkerOut {
  uint64_t partial = 0;
  uint64_t iterations = 0;
  uint64_t accesses = 0;
  uint64_t max_bytes = 0;
  bool overflow = false;
  bool did_work = false;
};

// Hands vertices to workers. Static gives contiguous blocks, Cyclic
// strides by worker count, Dynamic grabs fixed chunks off a shared
// cursor. The callback returns false to stop early.
class VertexScheduler {
 public:
  VertexScheduler(Schedule s, uint32_t n, int workers) : sched_(s), n_(n), workers_(workers) {}

  template <class Fn>
  void drive(int w, Fn&& fn) {
    switch (sched_.kind) {
      case Schedule::Kind::Static: {
        uint64_t chunk = (uint64_t(n_) + workers_ - 1) / static_cast<uint64_t>(workers_);
        uint64_t begin = std::min(uint64_t(w) * chunk, uint64_t(n_));
        uint64_t end = std::min(begin + chunk, uint64_t(n_));
        for (uint64_t u = begin; u < end; ++u)
          if (!fn(static_cast<VertexId>(u))) return;
        return;
      }
      case Schedule::Kind::Cyclic: {
        for (uint64_t u = static_cast<uint64_t>(w); u < n_; u += static_cast<uint64_t>(workers_))
          if (!fn(static_cast<VertexId>(u))) return;
        return;
      }
      case Schedule::Kind::Dynamic: {
        for (;;) {
          uint64_t b = cursor_.fetch_add(sched_.chunk, std::memory_order_relaxed);
          if (b >= n_) return;
          uint64_t e = std::min(b + sched_.chunk, uint64_t(n_));
          for (uint64_t u = b; u < e; ++u)
            if (!fn(static_cast<VertexId>(u))) return;
        }
      }
    }
  }

 private:
  Schedule sched_;
  uint32_t n_;
  int workers_;
  std::atomic<uint64_t> cursor_{0};
};

bool recurse_citron(int level, const CitronSubgraph& sg, SubgraphWorkspace& ws, PruneMode prune,
                    uint64_t& acc, uint64_t& iters) {
  NoAccessCount nc;
  if (level == 2) {
    uint64_t sum = 0;
    for (uint32_t i = 0; i < sg.n; ++i) sum += sg.degrees[i];
    return checked_add(acc, sum);
  }
  if (level == 3) {
    // Penultimate level: the children are consumed immediately as edge
    // counts, so their degrees suffice.
    for (uint32_t i = 0; i < sg.n; ++i) {
      if (prune_skip(prune, 2, sg.slice_size(i))) continue;
      auto degs = citron_degrees_only(sg, i, ws, nc, iters);
      uint64_t sum = 0;
      for (uint32_t dg : degs) sum += dg;
      if (!checked_add(acc, sum)) return false;
    }
    return true;
  }
  for (uint32_t i = 0; i < sg.n; ++i) {
    if (prune_skip(prune, level - 1, sg.slice_size(i))) continue;
    CitronSubgraph child = build_next_level_citron(sg, i, level - 1, ws, nc, iters);
    if (!recurse_citron(level - 1, child, ws, prune, acc, iters)) return false;
  }
  return true;
}

// k == 3 needs no materialized subgraph at all: for each out-edge
// (u, v), the triangles through it are |N+(u) ∩ N+(v)|.
template <class Ctr>
bool citron_vertex3(const Dag& d, VertexId u, PruneMode prune, Ctr& ctr, uint64_t& acc,
                    uint64_t& iters) {
  auto nbrs = d.out_neighbors(u);
  uint32_t s = static_cast<uint32_t>(nbrs.size());
  if (prune_skip(prune, 2, s)) return true;
  uint64_t sum = 0;
  for (uint32_t i = 0; i < s; ++i) {
    VertexId v = nbrs[i];
    ctr.add(1);
    auto vn = d.out_neighbors(v);
    sum += intersect_sorted<false>(nbrs.data(), s, vn.data(), static_cast<uint32_t>(vn.size()),
                                   nullptr, ctr, iters);
  }
  return checked_add(acc, sum);
}

template <class Ctr>
bool citron_vertex(const Dag& d, VertexId u, int k, PruneMode prune, SubgraphWorkspace& ws,
                   Ctr& ctr, uint64_t& acc, uint64_t& iters) {
  uint32_t s = d.out_degree(u);
  if (prune_skip(prune, k - 1, s)) return true;
  CitronSubgraph top = build_first_level_citron(d, u, ws, ctr, iters);
  return recurse_citron(k - 1, top, ws, prune, acc, iters);
}

bool recurse_baseline(const BaselineSubgraph& sg, LabelWorkspace& ws, PruneMode prune,
                      uint64_t& acc, uint64_t& iters) {
  const VertexId* nodes = ws.nodes(sg.level);
  const uint32_t* deg = ws.degrees(sg.level);
  if (sg.level == 2) {
    uint64_t sum = 0;
    for (uint32_t i = 0; i < sg.n; ++i) sum += deg[nodes[i]];
    return checked_add(acc, sum);
  }
  NoAccessCount nc;
  for (uint32_t i = 0; i < sg.n; ++i) {
    if (prune_skip(prune, sg.level - 1, deg[nodes[i]])) continue;
    BaselineSubgraph child = build_next_level_baseline(sg, i, ws, nc, iters);
    bool ok = recurse_baseline(child, ws, prune, acc, iters);
    release_baseline(child, ws);
    if (!ok) return false;
  }
  return true;
}

template <class Ctr>
bool baseline_vertex(const Dag& d, VertexId u, int k, PruneMode prune, LabelWorkspace& ws,
                     Ctr& ctr, uint64_t& acc, uint64_t& iters) {
  uint32_t s = d.out_degree(u);
  if (prune_skip(prune, k - 1, s)) return true;
  BaselineSubgraph top = build_first_level_baseline(d, u, ws, ctr, iters);
  bool ok = recurse_baseline(top, ws, prune, acc, iters);
  teardown_first_level_baseline(d, u, top, ws, ctr);
  return ok;
}

template <Strategy S, class Ctr>
void run_worker(const Dag& d, const CountConfig& cfg, uint32_t capacity, VertexScheduler& sched,
                int w, WorkerOut& out) {
  Ctr ctr;
  uint64_t acc = 0, iters = 0;
  auto visit = [&](auto&& vertex_fn) {
    sched.drive(w, [&](VertexId u) {
      if (!vertex_fn(u)) {
        out.overflow = true;
        return false;
      }
      out.did_work = true;
      return true;
    });
  };

  if constexpr (S == Strategy::Citron) {
    if (cfg.k == 3) {
      visit([&](VertexId u) { return citron_vertex3(d, u, cfg.prune, ctr, acc, iters); });
    } else {
      SubgraphWorkspace ws(capacity, cfg.k);
      visit([&](VertexId u) { return citron_vertex(d, u, cfg.k, cfg.prune, ws, ctr, acc, iters); });
      out.max_bytes = ws.max_subgraph_bytes();
    }
  } else {
    LabelWorkspace ws(d.num_vertices(), capacity, cfg.k);
    visit([&](VertexId u) { return baseline_vertex(d, u, cfg.k, cfg.prune, ws, ctr, acc, iters); });
    out.max_bytes = ws.footprint_bytes();
  }
  out.partial = acc;
  out.iterations = iters;
  out.accesses = ctr.value();
}

void dispatch_worker(const Dag& d, const CountConfig& cfg, uint32_t capacity,
                     VertexScheduler& sched, int w, WorkerOut& out) {
  if (cfg.strategy == Strategy::Citron) {
    if (cfg.instrument)
      run_worker<Strategy::Citron, AccessCount>(d, cfg, capacity, sched, w, out);
    else
      run_worker<Strategy::Citron, NoAccessCount>(d, cfg, capacity, sched, w, out);
  } else {
    if (cfg.instrument)
      run_worker<Strategy::Baseline, AccessCount>(d, cfg, capacity, sched, w, out);
    else
      run_worker<Strategy::Baseline, NoAccessCount>(d, cfg, capacity, sched, w, out);
  }
}

}  // namespace

bool prune_skip(PruneMode mode, int level, uint64_t n) {
  switch (mode) {
    case PruneMode::Off:
      return false;
    case PruneMode::On:
      return n < static_cast<uint64_t>(level);
    case PruneMode::Paper:
      return n + 2 < static_cast<uint64_t>(level);
  }
  return false;
}

bool parse_schedule(const std::string& text, Schedule& out) {
  if (text == "static") {
    out = {Schedule::Kind::Static, 64};
    return true;
  }
  if (text == "cyclic") {
    out = {Schedule::Kind::Cyclic, 64};
    return true;
  }
  if (text == "dynamic") {
    out = {Schedule::Kind::Dynamic, 64};
    return true;
  }
  if (text.rfind("dynamic:", 0) == 0) {
    std::string num = text.substr(8);
    if (num.empty() || num.size() > 9 || num.find_first_not_of("0123456789") != std::string::npos)
      return false;
    uint32_t chunk = static_cast<uint32_t>(std::stoul(num));
    if (chunk == 0) return false;
    out = {Schedule::Kind::Dynamic, chunk};
    return true;
  }
  return false;
}

uint64_t aggregate_partials(std::span<const uint64_t> partials) {
  uint64_t total = 0;
  for (uint64_t p : partials)
    if (!checked_add(total, p))
      throw OverflowError("aggregated clique count exceeds uint64 range");
  return total;
}

CountResult count_on_dag(const Dag& d, const CountConfig& cfg) {
  if (cfg.k < 3) throw std::invalid_argument("k must be at least 3");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (cfg.schedule.kind == Schedule::Kind::Dynamic && cfg.schedule.chunk == 0)
    throw std::invalid_argument("dynamic schedule chunk must be positive");

  auto t0 = Clock::now();
  uint32_t capacity = max_out_degree(d);
  VertexScheduler sched(cfg.schedule, d.num_vertices(), cfg.workers);
  std::vector<WorkerOut> outs(static_cast<size_t>(cfg.workers));

  if (cfg.workers == 1) {
    dispatch_worker(d, cfg, capacity, sched, 0, outs[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(cfg.workers) - 1);
    for (int w = 1; w < cfg.workers; ++w)
      threads.emplace_back(
          [&, w] { dispatch_worker(d, cfg, capacity, sched, w, outs[static_cast<size_t>(w)]); });
    dispatch_worker(d, cfg, capacity, sched, 0, outs[0]);
    for (auto& t : threads) t.join();
  }

  CountResult res;
  res.stats.counting_seconds = seconds_since(t0);

  bool any_work = false, any_overflow = false;
  for (const WorkerOut& o : outs) {
    any_work |= o.did_work;
    any_overflow |= o.overflow;
  }
  if (any_overflow) throw OverflowError("clique count exceeds uint64 range", any_work);

  std::vector<uint64_t> partials;
  partials.reserve(outs.size());
  for (const WorkerOut& o : outs) partials.push_back(o.partial);
  try {
    res.cliques = aggregate_partials(partials);
  } catch (const OverflowError&) {
    throw OverflowError("clique count exceeds uint64 range", any_work);
  }

  res.stats.max_out_degree = capacity;
  try {
    res.stats.work_model = work_model(d);
  } catch (const OverflowError&) {
    res.stats.work_model = std::numeric_limits<uint64_t>::max();
  }
  for (const WorkerOut& o : outs) {
    res.stats.array_accesses += o.accesses;
    res.stats.max_subgraph_bytes = std::max(res.stats.max_subgraph_bytes, o.max_bytes);
    res.stats.per_worker_iterations.push_back(o.iterations);
  }
  res.stats.total_seconds = res.stats.counting_seconds;
  return res;
}

CountResult count_cliques(const UndirectedGraph& g, const CountConfig& cfg) {
  auto t0 = Clock::now();
  Dag d = directionalize(g, cfg.ordering, cfg.workers);
  double ordering_s = seconds_since(t0);
  CountResult res = count_on_dag(d, cfg);
  res.stats.ordering_seconds = ordering_s;
  res.stats.total_seconds = res.stats.ordering_seconds + res.stats.counting_seconds;
  return res;
}

}  // namespace kclique
