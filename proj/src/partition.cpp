#include "pmsched/partition.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace pmsched {

std::vector<int> partition_for_loads(const std::vector<Job>& jobs,
                                     const std::vector<std::int64_t>& loads) {
  const int m = static_cast<int>(loads.size());
  if (m < 1) throw std::invalid_argument("partition_for_loads needs at least one machine");
  std::int64_t total = 0;
  for (const Job& j : jobs) total += j.p;
  std::int64_t load_sum = 0;
  for (std::int64_t l : loads) {
    if (l < 0) throw std::invalid_argument("negative target load");
    load_sum += l;
  }
  if (load_sum != total) throw std::logic_error("target loads do not sum to total processing time");
  if (m == 1) return std::vector<int>(jobs.size(), 0);

  // State: loads of machines 0..m-2 (machine m-1 is the residual).
  std::vector<std::size_t> stride(static_cast<std::size_t>(m - 1));
  std::size_t cap = 1;
  for (int t = 0; t < m - 1; ++t) {
    stride[std::size_t(t)] = cap;
    if (__builtin_mul_overflow(cap, std::size_t(loads[std::size_t(t)]) + 1, &cap) ||
        cap > (std::size_t(1) << 28))
      throw std::length_error("partition state space too large");
  }

  const std::size_t n = jobs.size();
  // parent[j][state] = machine chosen for job j-1 to reach state, or -1.
  std::vector<std::vector<std::int8_t>> parent(n + 1, std::vector<std::int8_t>(cap, -1));
  parent[0][0] = 0;  // sentinel: stage-0 origin

  std::vector<std::int64_t> coords(static_cast<std::size_t>(m - 1));
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t p = jobs[j].p;
    for (std::size_t s = 0; s < cap; ++s) {
      if (parent[j][s] < 0) continue;
      // residual machine
      if (parent[j + 1][s] < 0) parent[j + 1][s] = std::int8_t(m - 1);
      // tracked machines
      std::size_t rem = s;
      for (int t = 0; t < m - 1; ++t) {
        coords[std::size_t(t)] =
            std::int64_t(rem % (std::size_t(loads[std::size_t(t)]) + 1));
        rem /= std::size_t(loads[std::size_t(t)]) + 1;
      }
      for (int t = 0; t < m - 1; ++t) {
        if (coords[std::size_t(t)] + p > loads[std::size_t(t)]) continue;
        const std::size_t ns = s + std::size_t(p) * stride[std::size_t(t)];
        if (parent[j + 1][ns] < 0) parent[j + 1][ns] = std::int8_t(t);
      }
    }
  }

  std::size_t target = 0;
  for (int t = 0; t < m - 1; ++t)
    target += std::size_t(loads[std::size_t(t)]) * stride[std::size_t(t)];
  if (parent[n][target] < 0) throw std::logic_error("no partition realizes the target loads");

  std::vector<int> assignment(n, 0);
  std::size_t s = target;
  for (std::size_t j = n; j > 0; --j) {
    const int t = parent[j][s];
    assignment[j - 1] = t;
    if (t < m - 1) s -= std::size_t(jobs[j - 1].p) * stride[std::size_t(t)];
  }
  return assignment;
}

}  // namespace pmsched
