#include <doctest.h>

#include <random>

#include "pmsched/generator.hpp"
#include "pmsched/model.hpp"

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

TEST_CASE("parse_instance basic") {
  Instance inst = parse_instance("2 2\n1 2\n2 1\n");
  CHECK(inst.n() == 2);
  CHECK(inst.machines == 2);
  CHECK(inst.jobs[0].p == 1);
  CHECK(inst.jobs[0].w == 2);
  CHECK(inst.jobs[1].p == 2);
  CHECK(inst.jobs[1].w == 1);

  Instance single = parse_instance("1 1\n5 3\n");
  CHECK(single.total_processing() == 5);
  CHECK(single.max_processing() == 5);
  CHECK(single.max_weight() == 3);
}

TEST_CASE("parse_instance errors name the line") {
  CHECK_THROWS_WITH_AS(parse_instance("1 1\n0 3\n"),
                       "parse error at line 2: processing time must be >= 1",
                       std::runtime_error);
  CHECK_THROWS_AS(parse_instance("1 1\n3 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_instance("2 1\n1 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_instance("1 0\n1 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_instance("1 1\n1 1\n9 9\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_instance(""), std::runtime_error);
}

TEST_CASE("format round-trips") {
  Instance inst = generate_instance(20, 3, 9, 9, 42);
  Instance again = parse_instance(format_instance(inst));
  CHECK(again.machines == inst.machines);
  REQUIRE(again.n() == inst.n());
  for (int j = 0; j < inst.n(); ++j) {
    CHECK(again.jobs[std::size_t(j)].p == inst.jobs[std::size_t(j)].p);
    CHECK(again.jobs[std::size_t(j)].w == inst.jobs[std::size_t(j)].w);
  }
}

TEST_CASE("efficiency classes") {
  SUBCASE("distinct ratios merge") {
    Instance inst = make({{1, 2}, {2, 4}, {1, 1}}, 1);
    EfficiencyClasses ec = efficiency_classes(inst);
    REQUIRE(ec.k() == 2);
    CHECK(ec.classes[0].efficiency == Rational(2));
    CHECK(ec.classes[0].members == std::vector<int>{0, 1});
    CHECK(ec.classes[1].efficiency == Rational(1));
    CHECK(ec.classes[1].members == std::vector<int>{2});
  }
  SUBCASE("single job") {
    EfficiencyClasses ec = efficiency_classes(make({{3, 3}}, 1));
    REQUIRE(ec.k() == 1);
    CHECK(ec.classes[0].efficiency == Rational(1));
  }
  SUBCASE("all ratios reduce to one class") {
    EfficiencyClasses ec = efficiency_classes(make({{1, 1}, {2, 2}, {3, 3}}, 1));
    REQUIRE(ec.k() == 1);
    CHECK(ec.classes[0].members.size() == 3);
    CHECK(ec.classes[0].load == 6);
  }
}

TEST_CASE("wspt_order") {
  CHECK(wspt_order(make({{2, 1}, {1, 3}}, 1)) == std::vector<int>{1, 0});
  CHECK(wspt_order(make({{1, 1}, {2, 2}}, 1)) == std::vector<int>{0, 1});
  CHECK(wspt_order(make({}, 1)).empty());
}

TEST_CASE("validate_schedule") {
  Instance inst = make({{1, 1}, {2, 2}}, 2);
  CHECK(!validate_schedule(inst, Schedule{{{0}, {1}}}));
  CHECK(*validate_schedule(inst, Schedule{{{0, 0}, {}}}) == "job 0 appears twice");
  CHECK(*validate_schedule(inst, Schedule{{{0}, {}}}) == "job 1 unscheduled");
  CHECK(validate_schedule(inst, Schedule{{{0, 1}}}).has_value());  // machine count mismatch
  // WSPT flag: job 1 (e=1) before job 0 (e=1) is fine; reversed efficiencies are not
  Instance uneq = make({{2, 1}, {1, 3}}, 1);
  CHECK(validate_schedule(uneq, Schedule{{{0, 1}}}, true).has_value());
  CHECK(!validate_schedule(uneq, Schedule{{{1, 0}}}, true));
}

TEST_CASE("random properties: classes partition, order is a permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = int(rng() % 12);
    Instance inst = generate_instance(n, 1 + int(rng() % 4), 1 + std::int64_t(rng() % 9),
                                      1 + std::int64_t(rng() % 9), rng());
    (void)n;

    std::vector<int> order = wspt_order(inst);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < inst.n(); ++j) CHECK(sorted[std::size_t(j)] == j);

    EfficiencyClasses ec = efficiency_classes(inst);
    std::size_t total_members = 0;
    std::int64_t total_load = 0;
    for (int i = 0; i < ec.k(); ++i) {
      total_members += ec.classes[std::size_t(i)].members.size();
      total_load += ec.classes[std::size_t(i)].load;
      if (i > 0)
        CHECK(ec.classes[std::size_t(i)].efficiency < ec.classes[std::size_t(i) - 1].efficiency);
    }
    CHECK(total_members == std::size_t(inst.n()));
    CHECK(total_load == inst.total_processing());
    CHECK(std::int64_t(ec.k()) <= inst.max_weight() * inst.max_processing());
  }
}

TEST_CASE("cross-multiplication matches Rational comparison") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    Job a{0, 1 + std::int64_t(rng() % 1000000), 1 + std::int64_t(rng() % 1000000)};
    Job b{1, 1 + std::int64_t(rng() % 1000000), 1 + std::int64_t(rng() % 1000000)};
    CHECK(efficiency_greater(a, b) == (Rational(a.w, a.p) > Rational(b.w, b.p)));
    CHECK(efficiency_equal(a, b) == (Rational(a.w, a.p) == Rational(b.w, b.p)));
  }
}

TEST_CASE("schedule file format round-trips") {
  Schedule s{{{2}, {0, 1}, {}}};
  auto [parsed, objective] = parse_schedule(format_schedule(s, 7));
  CHECK(objective == 7);
  CHECK(parsed.machines == s.machines);
  CHECK_THROWS_AS(parse_schedule("garbage"), std::runtime_error);
}
