#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kclique/count.hpp"
#include "kclique/errors.hpp"
#include "kclique/ingest.hpp"
#include "kclique/metrics.hpp"
#include "kclique/oracle.hpp"
#include "kclique/ordering.hpp"

namespace {

using namespace kclique;
using Clock = std::chrono::steady_clock;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitGuard = 4;

struct Opts {
  std::string graph;
  int k = 3;
  std::string ordering = "degree";
  std::string strategy = "citron";
  int workers = 1;
  std::string schedule = "dynamic:64";
  int trials = 1;
  std::string prune = "on";
  bool instrument = false;
  std::string output = "human";
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_s(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

OrderingKind to_ordering(const std::string& s) {
  return s == "core" ? OrderingKind::Core : OrderingKind::Degree;
}

Strategy to_strategy(const std::string& s) {
  return s == "baseline" ? Strategy::Baseline : Strategy::Citron;
}

PruneMode to_prune(const std::string& s) {
  if (s == "off") return PruneMode::Off;
  if (s == "paper") return PruneMode::Paper;
  return PruneMode::On;
}

CountConfig make_config(const Opts& o) {
  CountConfig cfg;
  cfg.k = o.k;
  cfg.ordering = to_ordering(o.ordering);
  cfg.strategy = to_strategy(o.strategy);
  cfg.workers = o.workers;
  parse_schedule(o.schedule, cfg.schedule);
  cfg.prune = to_prune(o.prune);
  cfg.instrument = o.instrument;
  return cfg;
}

std::string record_line(const Opts& o, int workers, int k, int trial, const CountResult& r) {
  std::string line = "graph=" + o.graph + " k=" + std::to_string(k) + " ordering=" + o.ordering +
                     " strategy=" + o.strategy + " workers=" + std::to_string(workers) +
                     " trial=" + std::to_string(trial) +
                     " ordering_s=" + fmt_s(r.stats.ordering_seconds) +
                     " counting_s=" + fmt_s(r.stats.counting_seconds) +
                     " total_s=" + fmt_s(r.stats.total_seconds) +
                     " cliques=" + std::to_string(r.cliques);
  if (o.instrument) {
    line += " array_accesses=" + std::to_string(r.stats.array_accesses) +
            " work_model=" + std::to_string(r.stats.work_model);
  }
  return line;
}

std::string join_counts(const std::vector<uint64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

int run_count(const Opts& o) {
  auto t0 = Clock::now();
  UndirectedGraph g = load_graph_file(o.graph);
  double load_s = seconds_since(t0);
  CountConfig cfg = make_config(o);
  bool human = o.output == "human";

  if (human) {
    std::cout << "graph=" << o.graph << " vertices=" << g.num_vertices()
              << " edges=" << g.num_edges() << " load_s=" << fmt_s(load_s) << "\n";
  }

  std::vector<CountResult> results;
  for (int t = 0; t < o.trials; ++t) {
    CountResult r = count_cliques(g, cfg);
    if (human) {
      std::cout << "trial=" << t << " ordering_s=" << fmt_s(r.stats.ordering_seconds)
                << " counting_s=" << fmt_s(r.stats.counting_seconds)
                << " total_s=" << fmt_s(r.stats.total_seconds) << " cliques=" << r.cliques << "\n";
    } else {
      std::cout << record_line(o, o.workers, o.k, t, r) << "\n";
    }
    results.push_back(std::move(r));
  }

  if (human) {
    double mo = 0, mc = 0, mt = 0;
    for (const CountResult& r : results) {
      mo += r.stats.ordering_seconds;
      mc += r.stats.counting_seconds;
      mt += r.stats.total_seconds;
    }
    size_t n = results.size();
    std::cout << "mean ordering_s=" << fmt_s(mo / n) << " counting_s=" << fmt_s(mc / n)
              << " total_s=" << fmt_s(mt / n) << "\n";
    const RunStats& st = results.back().stats;
    std::cout << "max_out_degree=" << st.max_out_degree << " work_model=" << st.work_model
              << " max_subgraph_bytes=" << st.max_subgraph_bytes << "\n";
    std::cout << "per_worker_iterations=" << join_counts(st.per_worker_iterations)
              << " load_imbalance=" << fmt_s(load_imbalance(st)) << "\n";
    if (o.instrument) std::cout << "array_accesses=" << st.array_accesses << "\n";
    std::cout << "cliques=" << results.back().cliques << "\n";
  }
  return 0;
}

int run_validate(const Opts& o) {
  UndirectedGraph g = load_graph_file(o.graph);
  const std::pair<const char*, OrderingKind> orderings[] = {{"core", OrderingKind::Core},
                                                            {"degree", OrderingKind::Degree}};
  const std::pair<const char*, Strategy> strategies[] = {{"baseline", Strategy::Baseline},
                                                         {"citron", Strategy::Citron}};
  int mismatches = 0;
  for (int k = 3; k <= o.k; ++k) {
    uint64_t expected = brute_force_count(g, k);
    std::string line = "k=" + std::to_string(k) + " oracle=" + std::to_string(expected);
    bool ok = true;
    for (auto [oname, okind] : orderings) {
      for (auto [sname, skind] : strategies) {
        CountConfig cfg = make_config(o);
        cfg.k = k;
        cfg.ordering = okind;
        cfg.strategy = skind;
        uint64_t got = count_cliques(g, cfg).cliques;
        line += std::string(" ") + oname + "/" + sname + "=" + std::to_string(got);
        if (got != expected) ok = false;
      }
    }
    if (!ok) {
      ++mismatches;
      line += " MISMATCH";
    }
    std::cout << line << "\n";
  }
  if (mismatches) {
    std::cout << "validate: " << mismatches << " k value(s) disagree with the oracle\n";
    return kExitMismatch;
  }
  std::cout << "validate: all configurations agree with the oracle for k=3.." << o.k << "\n";
  return 0;
}

int run_bench(const Opts& o) {
  auto t0 = Clock::now();
  UndirectedGraph g = load_graph_file(o.graph);
  double load_s = seconds_since(t0);
  bool human = o.output == "human";

  std::vector<int> worker_list;
  for (int w = 1; w < o.workers; w *= 2) worker_list.push_back(w);
  worker_list.push_back(o.workers);

  CountConfig base = make_config(o);
  auto td = Clock::now();
  Dag dag = directionalize(g, base.ordering, o.workers);
  double ordering_s = seconds_since(td);

  if (human) {
    std::cout << "graph=" << o.graph << " vertices=" << g.num_vertices()
              << " edges=" << g.num_edges() << " load_s=" << fmt_s(load_s)
              << " ordering=" << o.ordering << " ordering_s=" << fmt_s(ordering_s)
              << " strategy=" << o.strategy << " trials=" << o.trials << "\n";
  }

  int rc = 0;
  for (int k = 3; k <= o.k; ++k) {
    uint64_t reference = 0;
    double base_time = 0;
    for (int w : worker_list) {
      CountConfig cfg = base;
      cfg.k = k;
      cfg.workers = w;
      double mean_counting = 0;
      uint64_t cliques = 0;
      for (int t = 0; t < o.trials; ++t) {
        CountResult r = count_on_dag(dag, cfg);
        r.stats.ordering_seconds = ordering_s;
        r.stats.total_seconds = ordering_s + r.stats.counting_seconds;
        mean_counting += r.stats.counting_seconds;
        cliques = r.cliques;
        if (!human) std::cout << record_line(o, w, k, t, r) << "\n";
      }
      mean_counting /= o.trials;
      if (w == worker_list.front()) {
        reference = cliques;
        base_time = mean_counting;
      }
      if (human) {
        char spd[32];
        std::snprintf(spd, sizeof(spd), "%.2f", mean_counting > 0 ? base_time / mean_counting : 1.0);
        std::cout << "k=" << k << " workers=" << w << " counting_s=" << fmt_s(mean_counting)
                  << " speedup=" << spd << " cliques=" << cliques << "\n";
      }
      if (cliques != reference) {
        std::cerr << "bench: count changed with worker count (k=" << k << ", workers=" << w
                  << "): " << cliques << " != " << reference << "\n";
        rc = kExitMismatch;
      }
    }
  }
  return rc;
}

int run_convert(const Opts& o) {
  UndirectedGraph g = load_graph_file(o.graph);
  std::filesystem::path out(o.graph);
  out.replace_extension(".csrbin");
  save_csr(g, out);
  uint32_t maxdeg = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) maxdeg = std::max(maxdeg, g.degree(u));
  std::cout << "vertices=" << g.num_vertices() << " edges=" << g.num_edges()
            << " max_degree=" << maxdeg << " out=" << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-clique counting over degree- or core-ordered DAGs"};
  app.require_subcommand(1);

  Opts o;
  auto add_common = [&](CLI::App* cmd, bool needs_k) {
    cmd->add_option("--graph", o.graph, "edge list (.txt) or binary cache (.csrbin)")->required();
    auto* kopt = cmd->add_option("-k", o.k, "clique size (max of range for validate/bench)")
                     ->check(CLI::Range(3, 1000));
    if (needs_k) kopt->required();
    cmd->add_option("--ordering", o.ordering)->check(CLI::IsMember({"core", "degree"}));
    cmd->add_option("--strategy", o.strategy)->check(CLI::IsMember({"baseline", "citron"}));
    cmd->add_option("--workers", o.workers)->check(CLI::Range(1, 4096));
    cmd->add_option("--schedule", o.schedule)->check([](const std::string& s) -> std::string {
      Schedule sc;
      return parse_schedule(s, sc) ? "" : "expected static, cyclic, or dynamic:N";
    });
    cmd->add_option("--trials", o.trials)->check(CLI::Range(1, 1000));
    cmd->add_option("--prune", o.prune)->check(CLI::IsMember({"on", "off", "paper"}));
    cmd->add_flag("--instrument", o.instrument, "count first-level construction array accesses");
    cmd->add_option("--output", o.output)->check(CLI::IsMember({"human", "records"}));
  };

  CLI::App* c_count = app.add_subcommand("count", "count k-cliques");
  add_common(c_count, true);
  CLI::App* c_validate = app.add_subcommand("validate", "cross-check all configurations against the reference counter");
  add_common(c_validate, false);
  CLI::App* c_bench = app.add_subcommand("bench", "worker-count scaling sweep");
  add_common(c_bench, true);
  CLI::App* c_convert = app.add_subcommand("convert", "cache a text edge list as .csrbin");
  c_convert->add_option("--graph", o.graph, "edge list to convert")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (c_validate->parsed() && c_validate->get_option("-k")->count() == 0) o.k = 5;
  if (c_bench->parsed()) {
    if (c_bench->get_option("--workers")->count() == 0)
      o.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (c_bench->get_option("--trials")->count() == 0) o.trials = 2;
  }

  try {
    if (c_count->parsed()) return run_count(o);
    if (c_validate->parsed()) return run_validate(o);
    if (c_bench->parsed()) return run_bench(o);
    if (c_convert->parsed()) return run_convert(o);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
