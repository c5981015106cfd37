#include <doctest.h>

#include <random>

#include "pmsched/baselines.hpp"
#include "pmsched/dp_deviation.hpp"
#include "pmsched/dp_two.hpp"
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

TEST_CASE("worked examples") {
  CHECK(solve_two(make({{1, 1}, {1, 1}, {2, 2}}, 2)).objective == 7);
  CHECK(solve_two(make({{1, 2}, {2, 1}}, 2)).objective == 4);
  SolveResult empty = solve_two(make({}, 2));
  CHECK(empty.objective == 0);
  CHECK(empty.schedule.machines.size() == 2);
  CHECK_THROWS_AS(solve_two(make({{1, 1}}, 3)), std::invalid_argument);
}

TEST_CASE("build_scalar_y") {
  Instance inst = make({{1, 1}, {2, 2}}, 2);
  EfficiencyClasses classes = efficiency_classes(inst);
  ClassDistributions dists = class_distributions(inst, classes);
  CHECK(build_scalar_y(classes, dists, 3) ==
        std::vector<std::vector<std::int64_t>>{{-3, -1, 1, 3}});
  CHECK(build_scalar_y(classes, dists, 1) == std::vector<std::vector<std::int64_t>>{{-1, 1}});

  Instance even = make({{1, 1}, {1, 1}}, 2);
  classes = efficiency_classes(even);
  dists = class_distributions(even, classes);
  CHECK(build_scalar_y(classes, dists, 2) ==
        std::vector<std::vector<std::int64_t>>{{-2, 0, 2}});
}

TEST_CASE("agrees with brute force and the general DP") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = int(rng() % 11);
    Instance inst = generate_instance(n, 2, 1 + std::int64_t(rng() % 6),
                                      1 + std::int64_t(rng() % 6), rng());
    TwoMachineDiagnostics diag;
    SolveResult res = solve_two(inst, &diag);
    CHECK(res.objective == brute_force(inst).objective);
    CHECK(res.objective == solve_deviation(inst).objective);

    CHECK(!validate_schedule(inst, res.schedule, true));
    CHECK(total_weighted_completion(inst, res.schedule) == res.objective);
    if (n == 0) continue;

    // reconstructed optimum satisfies |delta_i| <= sqrt(wmax) * pmax^2
    EfficiencyClasses classes = efficiency_classes(inst);
    const int128 bound = int128(inst.max_weight()) * inst.max_processing() *
                         inst.max_processing() * inst.max_processing() * inst.max_processing();
    for (std::int64_t d : delta_profile(inst, classes, res.schedule))
      CHECK(int128(d) * d <= bound);

    // g2 = 2g on the reconstructed schedule
    CHECK(g2_value(inst, res.schedule) == Rational(2) * g_value(inst, res.schedule));

    // table sizes within the structural limits
    const std::int64_t c = diag.c;
    for (std::size_t sz : diag.y_sizes) CHECK(sz <= std::size_t(4 * c + 1));
    for (std::size_t sz : diag.table_sizes) CHECK(sz <= std::size_t(2 * c + 1));
    for (std::size_t i = 1; i < diag.stage_min.size(); ++i)
      CHECK(diag.stage_min[i] >= diag.stage_min[i - 1]);
  }
}
