#include <doctest.h>

#include <random>

#include "pmsched/baselines.hpp"
#include "pmsched/dp_deviation.hpp"
#include "pmsched/generator.hpp"
#include "pmsched/objective.hpp"

using namespace pmsched;

namespace {

Instance make(std::vector<std::pair<std::int64_t, std::int64_t>> pw, int m) {
  Instance inst;
  inst.machines = m;
  for (std::size_t j = 0; j < pw.size(); ++j)
    inst.jobs.push_back(Job{int(j), pw[j].first, pw[j].second});
  return inst;
}

}  // namespace

TEST_CASE("deviation bound values") {
  CHECK(deviation_bound(make({{1, 2}}, 2)) == 2);
  CHECK(deviation_bound(make({{1, 1}}, 1)) == 1);
  CHECK(deviation_bound(make({{3, 1}}, 2)) == 12);
}

TEST_CASE("build_y_sets scales and filters") {
  Instance inst = make({{1, 1}, {2, 2}}, 2);
  EfficiencyClasses classes = efficiency_classes(inst);
  ClassDistributions dists = class_distributions(inst, classes);
  auto ys = build_y_sets(classes, dists, 2, deviation_bound(inst));
  REQUIRE(ys.size() == 1);
  CHECK(ys[0] == std::vector<std::vector<std::int64_t>>{{-3, 3}, {-1, 1}, {1, -1}, {3, -3}});

  // tight c filters out the extreme steps: 2cm = 4 removes nothing here with
  // scaled entries in [-4, 4], but c = 0 keeps only balanced steps
  auto tight = build_y_sets(classes, dists, 2, 0);
  CHECK(tight[0].empty());
}

TEST_CASE("solve on the worked examples") {
  SUBCASE("three jobs") {
    SolveResult res = solve_deviation(make({{1, 1}, {1, 1}, {2, 2}}, 2));
    CHECK(res.objective == 7);
    CHECK(!validate_schedule(make({{1, 1}, {1, 1}, {2, 2}}, 2), res.schedule, true));
  }
  SUBCASE("two equal jobs split") {
    SolveResult res = solve_deviation(make({{2, 2}, {2, 2}}, 2));
    CHECK(res.objective == 8);
    CHECK(res.schedule.machines[0].size() == 1);
    CHECK(res.schedule.machines[1].size() == 1);
  }
  SUBCASE("single job") {
    SolveResult res = solve_deviation(make({{3, 5}}, 2));
    CHECK(res.objective == 15);
  }
  SUBCASE("empty instance") {
    SolveResult res = solve_deviation(make({}, 3));
    CHECK(res.objective == 0);
    CHECK(res.schedule.machines.size() == 3);
  }
  SUBCASE("single machine routes to WSPT") {
    SolveResult res = solve_deviation(make({{1, 2}, {2, 1}}, 1));
    CHECK(res.objective == 5);
  }
  SUBCASE("machine limit enforced") {
    CHECK_THROWS_AS(solve_deviation(make({{1, 1}}, 5)), std::invalid_argument);
  }
}

TEST_CASE("matches brute force on random instances") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = 2 + int(rng() % 2);
    const int n = int(rng() % 9);
    Instance inst = generate_instance(n, m, 1 + std::int64_t(rng() % 6),
                                      1 + std::int64_t(rng() % 6), rng());
    DeviationDiagnostics diag;
    SolveResult res = solve_deviation(inst, 4, &diag);
    BruteResult oracle = brute_force(inst);
    CHECK(res.objective == oracle.objective);

    CHECK(!validate_schedule(inst, res.schedule, true));
    CHECK(total_weighted_completion(inst, res.schedule) == res.objective);

    // reconstructed optimum satisfies the scaled deviation bound
    if (n > 0) {
      EfficiencyClasses classes = efficiency_classes(inst);
      auto x = prefix_loads(inst, classes, res.schedule);
      std::int64_t prefix = 0;
      const int128 bound = int128(m) * m * m * inst.max_weight() * inst.max_processing() *
                           inst.max_processing() * inst.max_processing() * inst.max_processing();
      for (int i = 0; i < classes.k(); ++i) {
        prefix += classes.classes[std::size_t(i)].load;
        for (int l = 0; l < m; ++l) {
          const int128 v = int128(prefix) - int128(m) * x[std::size_t(i)][std::size_t(l)];
          CHECK(v * v <= bound);
        }
      }

      // monotone stage minima, bounded table sizes
      for (std::size_t i = 1; i < diag.stage_min.size(); ++i)
        CHECK(diag.stage_min[i] >= diag.stage_min[i - 1]);
      const std::int64_t cm = diag.c * m;
      std::size_t cap = 1;
      bool overflow = false;
      for (int t = 0; t < m - 1; ++t)
        if (__builtin_mul_overflow(cap, std::size_t(2 * cm + 1), &cap)) overflow = true;
      if (!overflow)
        for (std::size_t sz : diag.table_sizes) CHECK(sz <= cap);
    }
  }
}
