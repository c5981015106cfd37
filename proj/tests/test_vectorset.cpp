#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pmsched/vectorset.hpp"

using namespace pmsched;

namespace {

using Point = std::vector<std::int64_t>;

std::set<Point> as_set(const VectorSet& v) {
  auto pts = v.points();
  return std::set<Point>(pts.begin(), pts.end());
}

std::set<Point> naive_minkowski(const std::set<Point>& xs, const std::set<Point>& ys) {
  std::set<Point> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Point p(x.size());
      for (std::size_t t = 0; t < x.size(); ++t) p[t] = x[t] + y[t];
      out.insert(p);
    }
  return out;
}

VectorSet from_points(int d, std::int64_t bound, const std::set<Point>& pts) {
  VectorSet v(d, bound);
  for (const auto& p : pts) v.insert(p);
  return v;
}

/// Brute-force X^d(J'): every assignment of each job to one of d machines or
/// "unassigned".
std::set<Point> naive_load_distribution(const std::vector<Job>& jobs, int d) {
  std::set<Point> out;
  std::vector<int> assign(jobs.size(), 0);
  std::size_t count = 1;
  for (std::size_t j = 0; j < jobs.size(); ++j) count *= std::size_t(d) + 1;
  for (std::size_t it = 0; it < count; ++it) {
    Point load(std::size_t(d), 0);
    for (std::size_t j = 0; j < jobs.size(); ++j)
      if (assign[j] > 0) load[std::size_t(assign[j]) - 1] += jobs[j].p;
    out.insert(load);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (++assign[j] <= d) break;
      assign[j] = 0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("kronecker encode/decode round-trips") {
  VectorSet v(3, 7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Point p{std::int64_t(rng() % 8), std::int64_t(rng() % 8), std::int64_t(rng() % 8)};
    CHECK(v.point_at(v.index_of(p)) == p);
  }
  CHECK_THROWS_AS(v.index_of(Point{8, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(v.index_of(Point{0, 0}), std::invalid_argument);
}

TEST_CASE("minkowski sum small examples") {
  VectorSet x = from_points(2, 2, {{0, 0}, {1, 2}});
  VectorSet y = from_points(2, 3, {{0, 0}, {3, 1}});
  VectorSet sum = minkowski_sum(x, y);
  CHECK(as_set(sum) == std::set<Point>{{0, 0}, {1, 2}, {3, 1}, {4, 3}});

  VectorSet zero = from_points(2, 0, {{0, 0}});
  CHECK(as_set(minkowski_sum(x, zero)) == as_set(x));

  VectorSet empty(2, 4);
  CHECK(minkowski_sum(empty, y).empty());
  CHECK_THROWS_AS(minkowski_sum(x, VectorSet(3, 1)), std::invalid_argument);
}

TEST_CASE("both convolution backends equal the naive pairwise construction") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + int(rng() % 3);
    const std::int64_t bx = std::int64_t(rng() % 21);
    const std::int64_t by = std::int64_t(rng() % 21);
    std::set<Point> xs, ys;
    for (int i = 0; i < int(rng() % 12); ++i) {
      Point p(static_cast<std::size_t>(d));
      for (auto& c : p) c = std::int64_t(rng() % std::uint64_t(bx + 1));
      xs.insert(p);
    }
    for (int i = 0; i < int(rng() % 12); ++i) {
      Point p(static_cast<std::size_t>(d));
      for (auto& c : p) c = std::int64_t(rng() % std::uint64_t(by + 1));
      ys.insert(p);
    }
    VectorSet x = from_points(d, bx, xs);
    VectorSet y = from_points(d, by, ys);
    const std::set<Point> expected = (xs.empty() || ys.empty())
                                         ? std::set<Point>{}
                                         : naive_minkowski(xs, ys);
    CHECK(as_set(minkowski_sum(x, y, ConvolutionBackend::Bitset)) == expected);
    CHECK(as_set(minkowski_sum(x, y, ConvolutionBackend::Fft)) == expected);
  }
}

TEST_CASE("load_distribution base cases") {
  std::vector<Job> one{{0, 1, 1}};
  CHECK(as_set(load_distribution(one, 2)) == std::set<Point>{{0, 0}, {1, 0}, {0, 1}});
  std::vector<Job> two{{0, 1, 1}, {1, 2, 1}};
  CHECK(as_set(load_distribution(two, 1)) == std::set<Point>{{0}, {1}, {2}, {3}});
  CHECK(as_set(load_distribution({}, 3)) == std::set<Point>{{0, 0, 0}});
}

TEST_CASE("load_distribution equals brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + int(rng() % 3);
    const int count = int(rng() % 9);
    std::vector<Job> jobs;
    for (int j = 0; j < count; ++j) jobs.push_back(Job{j, 1 + std::int64_t(rng() % 5), 1});
    CHECK(as_set(load_distribution(jobs, d)) == naive_load_distribution(jobs, d));
    CHECK(as_set(load_distribution(jobs, d, ConvolutionBackend::Fft)) ==
          naive_load_distribution(jobs, d));
  }
}

TEST_CASE("divide point does not matter (associativity spot check)") {
  std::vector<Job> jobs;
  std::mt19937_64 rng(29);
  for (int j = 0; j < 7; ++j) jobs.push_back(Job{j, 1 + std::int64_t(rng() % 4), 1});
  const auto reference = as_set(load_distribution(jobs, 2));
  for (std::size_t split = 1; split + 1 < jobs.size(); ++split) {
    std::span<const Job> all(jobs);
    VectorSet combined = minkowski_sum(load_distribution(all.subspan(0, split), 2),
                                       load_distribution(all.subspan(split), 2));
    CHECK(as_set(combined) == reference);
  }
}

TEST_CASE("class distributions") {
  Instance inst;
  inst.machines = 2;
  inst.jobs = {Job{0, 1, 1}, Job{1, 2, 2}};
  EfficiencyClasses ec = efficiency_classes(inst);
  REQUIRE(ec.k() == 1);
  ClassDistributions dists = class_distributions(inst, ec);
  std::set<Point> got(dists.per_class[0].begin(), dists.per_class[0].end());
  CHECK(got == std::set<Point>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});

  inst.jobs = {Job{0, 2, 1}};
  ec = efficiency_classes(inst);
  dists = class_distributions(inst, ec);
  got = std::set<Point>(dists.per_class[0].begin(), dists.per_class[0].end());
  CHECK(got == std::set<Point>{{0, 2}, {2, 0}});

  inst.jobs = {Job{0, 1, 1}, Job{1, 1, 1}};
  ec = efficiency_classes(inst);
  dists = class_distributions(inst, ec);
  got = std::set<Point>(dists.per_class[0].begin(), dists.per_class[0].end());
  CHECK(got == std::set<Point>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("class distribution vectors sum to the class load") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst;
    inst.machines = 2 + int(rng() % 2);
    const int n = 1 + int(rng() % 7);
    for (int j = 0; j < n; ++j)
      inst.jobs.push_back(Job{j, 1 + std::int64_t(rng() % 4), 1 + std::int64_t(rng() % 4)});
    EfficiencyClasses ec = efficiency_classes(inst);
    ClassDistributions dists = class_distributions(inst, ec);
    for (int i = 0; i < ec.k(); ++i) {
      const std::int64_t load = ec.classes[std::size_t(i)].load;
      const auto& vectors = dists.per_class[std::size_t(i)];
      std::size_t limit = 1;
      for (int t = 0; t < inst.machines - 1; ++t) limit *= std::size_t(load) + 1;
      CHECK(vectors.size() <= limit);
      for (const auto& x : vectors) {
        std::int64_t sum = 0;
        for (std::int64_t v : x) {
          CHECK(v >= 0);
          sum += v;
        }
        CHECK(sum == load);
      }
    }
  }
}
