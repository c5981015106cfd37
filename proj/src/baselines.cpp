#include "pmsched/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pmsched/objective.hpp"

namespace pmsched {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

}  // namespace

SolveResult lawler_moore(const Instance& inst) {
  const int m = inst.machines;
  const std::vector<int> order = wspt_order(inst);
  const std::size_t n = order.size();

  if (m == 1) {
    Schedule s;
    s.machines.push_back(order);
    return {n == 0 ? 0 : total_weighted_completion(inst, s), s};
  }
  if (n == 0) return {0, Schedule{std::vector<std::vector<int>>(std::size_t(m))}};

  const std::int64_t P = inst.total_processing();
  const std::size_t side = std::size_t(P) + 1;
  std::size_t cap = 1;
  for (int t = 0; t < m - 1; ++t)
    if (__builtin_mul_overflow(cap, side, &cap) || cap > (std::size_t(1) << 31))
      throw std::length_error("Lawler-Moore table too large for this instance");

  std::vector<std::int64_t> prev(cap, kInf), cur(cap, kInf);
  prev[0] = 0;
  // choice[j][state]: machine for the j-th WSPT job that reaches state.
  std::vector<std::vector<std::int8_t>> choice(n, std::vector<std::int8_t>(cap, -1));

  std::vector<std::size_t> stride(static_cast<std::size_t>(m - 1));
  for (int t = 0; t < m - 1; ++t) {
    stride[std::size_t(t)] = 1;
    for (int u = 0; u < t; ++u) stride[std::size_t(t)] *= side;
  }

  std::int64_t prefix = 0;
  std::vector<std::int64_t> coords(static_cast<std::size_t>(m - 1));
  for (std::size_t j = 0; j < n; ++j) {
    const Job& job = inst.jobs[std::size_t(order[j])];
    prefix += job.p;
    std::fill(cur.begin(), cur.end(), kInf);
    for (std::size_t s = 0; s < cap; ++s) {
      std::size_t rem = s;
      std::int64_t tracked = 0;
      for (int t = 0; t < m - 1; ++t) {
        coords[std::size_t(t)] = std::int64_t(rem % side);
        tracked += coords[std::size_t(t)];
        rem /= side;
      }
      if (tracked > prefix) continue;
      // tracked machines: job j completes at coords[t]
      for (int t = 0; t < m - 1; ++t) {
        if (coords[std::size_t(t)] < job.p) continue;
        const std::size_t ps = s - std::size_t(job.p) * stride[std::size_t(t)];
        if (prev[ps] == kInf) continue;
        const std::int64_t val = prev[ps] + job.w * coords[std::size_t(t)];
        if (val < cur[s]) {
          cur[s] = val;
          choice[j][s] = std::int8_t(t);
        }
      }
      // residual machine: job j completes at prefix - tracked
      if (prev[s] != kInf && prefix - tracked >= job.p) {
        const std::int64_t val = prev[s] + job.w * (prefix - tracked);
        if (val < cur[s]) {
          cur[s] = val;
          choice[j][s] = std::int8_t(m - 1);
        }
      }
    }
    std::swap(prev, cur);
  }

  std::size_t best_state = 0;
  std::int64_t best = kInf;
  for (std::size_t s = 0; s < cap; ++s)
    if (prev[s] < best) {
      best = prev[s];
      best_state = s;
    }
  if (best == kInf) throw std::logic_error("Lawler-Moore found no feasible state");

  Schedule schedule;
  schedule.machines.assign(std::size_t(m), {});
  std::size_t s = best_state;
  for (std::size_t j = n; j > 0; --j) {
    const int t = choice[j - 1][s];
    if (t < 0) throw std::logic_error("Lawler-Moore backtracking failed");
    schedule.machines[std::size_t(t)].push_back(order[j - 1]);
    if (t < m - 1) s -= std::size_t(inst.jobs[std::size_t(order[j - 1])].p) * stride[std::size_t(t)];
  }
  for (auto& machine : schedule.machines) std::reverse(machine.begin(), machine.end());
  return {best, std::move(schedule)};
}

BruteResult brute_force(const Instance& inst, std::int64_t cap) {
  const int m = inst.machines;
  const std::size_t n = inst.jobs.size();
  std::int64_t count = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (__builtin_mul_overflow(count, std::int64_t(m), &count) || count > cap)
      throw std::length_error("brute force refused: m^n exceeds cap");
  }

  const std::vector<int> order = wspt_order(inst);
  BruteResult result;
  result.objective = kInf;
  std::vector<int> assign(n, 0);
  std::vector<std::int64_t> time(static_cast<std::size_t>(m));
  for (std::int64_t it = 0; it < count; ++it) {
    std::fill(time.begin(), time.end(), 0);
    std::int64_t obj = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Job& job = inst.jobs[std::size_t(order[j])];
      auto& t = time[std::size_t(assign[j])];
      t += job.p;
      obj += job.w * t;
    }
    if (obj <= result.objective) {
      if (obj < result.objective) {
        result.objective = obj;
        result.optima.clear();
      }
      Schedule s;
      s.machines.assign(std::size_t(m), {});
      for (std::size_t j = 0; j < n; ++j)
        s.machines[std::size_t(assign[j])].push_back(order[j]);
      result.optima.push_back(std::move(s));
    }
    // next assignment, base m
    for (std::size_t j = 0; j < n; ++j) {
      if (++assign[j] < m) break;
      assign[j] = 0;
    }
  }
  return result;
}

Schedule wspt_load_balance(const Instance& inst) {
  Schedule s;
  s.machines.assign(std::size_t(inst.machines), {});
  std::vector<std::int64_t> load(std::size_t(inst.machines), 0);
  for (int id : wspt_order(inst)) {
    std::size_t target = 0;
    for (std::size_t l = 1; l < load.size(); ++l)
      if (load[l] < load[target]) target = l;
    s.machines[target].push_back(id);
    load[target] += inst.jobs[std::size_t(id)].p;
  }
  return s;
}

}  // namespace pmsched
