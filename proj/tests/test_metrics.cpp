#include <doctest.h>

#include <vector>

#include "kclique/errors.hpp"
#include "kclique/generate.hpp"
#include "kclique/metrics.hpp"
#include "kclique/ordering.hpp"

#include "support.hpp"

using namespace kclique;
using namespace testsupport;

TEST_SUITE("metrics") {
  TEST_CASE("work model golden values for the seven-vertex example") {
    UndirectedGraph g = seven_graph();
    CHECK(work_model(directionalize(g, OrderingKind::Degree)) == kSevenWorkModelDegree);
    CHECK(work_model(directionalize(g, OrderingKind::Core)) == kSevenWorkModelCore);
  }

  TEST_CASE("work model is invariant under renaming plus consistent re-ranking") {
    UndirectedGraph g = er_graph(80, 0.15, 41);
    for (OrderingKind o : {OrderingKind::Core, OrderingKind::Degree}) {
      Dag d = directionalize(g, o);
      uint64_t reference = work_model(d);
      for (uint64_t seed = 0; seed < 20; ++seed) {
        Dag permuted = permute_dag(d, random_permutation(d.num_vertices(), 50 + seed));
        CHECK(work_model(permuted) == reference);
      }
    }
  }

  TEST_CASE("work model of hub-free dags is exact by hand") {
    // Path 0->1->2: only the pair (0,1) contributes 1*1.
    Dag path({0, 1, 2, 2}, {1, 2});
    CHECK(work_model(path) == 1);
    // Star 0->{1,2,3} with sinks: every term is zero.
    Dag star({0, 3, 3, 3, 3}, {1, 2, 3});
    CHECK(work_model(star) == 0);
    CHECK(work_model(Dag{}) == 0);
  }

  TEST_CASE("work model raises once the total exceeds 64 bits") {
    // The model is pure row arithmetic, so a deliberately degenerate CSR
    // (one vertex whose row repeats itself D times) produces a D^3 total
    // from only D entries: D = 5e6 gives ~1.25e20 > 2^64-1.
    const uint64_t d = 5'000'000;
    Dag degenerate({0, d}, std::vector<VertexId>(d, 0));
    CHECK_THROWS_AS(work_model(degenerate), OverflowError);
  }

  TEST_CASE("load imbalance formula") {
    CHECK(load_imbalance(std::vector<uint64_t>{}) == 0.0);
    CHECK(load_imbalance(std::vector<uint64_t>{0, 0, 0}) == 0.0);
    CHECK(load_imbalance(std::vector<uint64_t>{5}) == 0.0);
    CHECK(load_imbalance(std::vector<uint64_t>{7, 7, 7, 7}) == 0.0);
    double v = load_imbalance(std::vector<uint64_t>{9, 10, 11});
    CHECK(v == doctest::Approx(0.0816496580927726));
    // Perfectly lopsided two-worker split: stddev == mean.
    CHECK(load_imbalance(std::vector<uint64_t>{0, 10}) == doctest::Approx(1.0));
  }

  TEST_CASE("run stats wrapper uses per-worker iterations") {
    RunStats s;
    s.per_worker_iterations = {9, 10, 11};
    CHECK(load_imbalance(s) == doctest::Approx(0.0816496580927726));
  }
}
