#include "pmsched/dp_deviation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pmsched/objective.hpp"
#include "pmsched/partition.hpp"

namespace pmsched {

namespace {

Rational efficiency_gap(const EfficiencyClasses& classes, int i) {
  const Rational& e_i = classes.classes[std::size_t(i)].efficiency;
  if (i + 1 < classes.k()) return e_i - classes.classes[std::size_t(i) + 1].efficiency;
  return e_i;
}

Schedule wspt_single_machine(const Instance& inst) {
  Schedule s;
  s.machines.assign(std::size_t(inst.machines), {});
  s.machines[0] = wspt_order(inst);
  return s;
}

struct Entry {
  Rational cost;
  std::int32_t y_idx = -1;
};

}  // namespace

std::int64_t deviation_bound(const Instance& inst) {
  const uint128 m = uint128(std::uint64_t(inst.machines));
  const uint128 w = uint128(std::uint64_t(inst.max_weight()));
  const uint128 p = uint128(std::uint64_t(inst.max_processing()));
  const uint128 v = m * w * p * p * p * p;
  const uint128 c = isqrt128(v);
  if (c > uint128(std::uint64_t(INT64_MAX))) throw_overflow("deviation bound overflow");
  return std::int64_t(std::uint64_t(c));
}

std::vector<std::vector<std::vector<std::int64_t>>> build_y_sets(const EfficiencyClasses& classes,
                                                                 const ClassDistributions& dists,
                                                                 int m, std::int64_t c) {
  std::vector<std::vector<std::vector<std::int64_t>>> out;
  const std::int64_t lim = 2 * c * m;
  for (int i = 0; i < classes.k(); ++i) {
    const std::int64_t load = classes.classes[std::size_t(i)].load;
    std::vector<std::vector<std::int64_t>> ys;
    for (const auto& x : dists.per_class[std::size_t(i)]) {
      std::vector<std::int64_t> y(static_cast<std::size_t>(m));
      bool in_range = true;
      for (int l = 0; l < m; ++l) {
        y[std::size_t(l)] = load - m * x[std::size_t(l)];
        if (y[std::size_t(l)] < -lim || y[std::size_t(l)] > lim) in_range = false;
      }
      if (in_range) ys.push_back(std::move(y));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    out.push_back(std::move(ys));
  }
  return out;
}

SolveResult solve_deviation(const Instance& inst, int max_machines, DeviationDiagnostics* diag) {
  const int m = inst.machines;
  if (inst.n() == 0) return {0, Schedule{std::vector<std::vector<int>>(std::size_t(m))}};
  if (m == 1) {
    Schedule s = wspt_single_machine(inst);
    return {total_weighted_completion(inst, s), s};
  }
  if (m > max_machines)
    throw std::invalid_argument("deviation DP supports up to " + std::to_string(max_machines) +
                                " machines (got m = " + std::to_string(m) + ")");

  const EfficiencyClasses classes = efficiency_classes(inst);
  const int k = classes.k();
  const ClassDistributions dists = class_distributions(inst, classes);
  const std::int64_t c = deviation_bound(inst);
  const auto ysets = build_y_sets(classes, dists, m, c);

  // Scaled deviations v = m * Delta live in [-cm, cm]^m with sum 0; tables
  // index the first m-1 coordinates.
  const std::int64_t cm = c * std::int64_t(m);
  const std::uint64_t side = std::uint64_t(2 * cm + 1);
  std::uint64_t key_cap = 1;
  for (int t = 0; t < m - 1; ++t)
    if (__builtin_mul_overflow(key_cap, side, &key_cap))
      throw std::length_error("deviation DP state space exceeds 64-bit indexing");

  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::uint64_t key = 0, stride = 1;
    for (int t = 0; t < m - 1; ++t) {
      key += std::uint64_t(v[std::size_t(t)] + cm) * stride;
      stride *= side;
    }
    return key;
  };
  auto decode = [&](std::uint64_t key) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(m));
    std::int64_t sum = 0;
    for (int t = 0; t < m - 1; ++t) {
      v[std::size_t(t)] = std::int64_t(key % side) - cm;
      sum += v[std::size_t(t)];
      key /= side;
    }
    v[std::size_t(m - 1)] = -sum;
    return v;
  };

  std::vector<std::unordered_map<std::uint64_t, Entry>> tables(std::size_t(k) + 1);
  tables[0].emplace(encode(std::vector<std::int64_t>(std::size_t(m), 0)), Entry{Rational(0), -1});

  if (diag) {
    diag->c = c;
    diag->table_sizes.clear();
    diag->stage_min.clear();
  }

  std::vector<std::uint64_t> keys;
  for (int i = 1; i <= k; ++i) {
    const Rational gap = efficiency_gap(classes, i - 1);
    const auto& ys = ysets[std::size_t(i - 1)];
    auto& prev = tables[std::size_t(i) - 1];
    auto& cur = tables[std::size_t(i)];

    keys.clear();
    keys.reserve(prev.size());
    for (const auto& [key, entry] : prev) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    for (std::uint64_t key : keys) {
      const Entry& entry = prev.at(key);
      const std::vector<std::int64_t> v = decode(key);
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        const auto& y = ys[yi];
        std::vector<std::int64_t> nv(static_cast<std::size_t>(m));
        bool in_range = true;
        std::int64_t sq = 0;
        for (int l = 0; l < m; ++l) {
          nv[std::size_t(l)] = v[std::size_t(l)] + y[std::size_t(l)];
          if (nv[std::size_t(l)] < -cm || nv[std::size_t(l)] > cm) {
            in_range = false;
            break;
          }
          sq += nv[std::size_t(l)] * nv[std::size_t(l)];
        }
        if (!in_range) continue;
        Rational cost = entry.cost + gap * Rational::from_int128(sq, int128(m) * m);
        const std::uint64_t nkey = encode(nv);
        auto it = cur.find(nkey);
        if (it == cur.end() || cost < it->second.cost)
          cur[nkey] = Entry{std::move(cost), std::int32_t(yi)};
      }
    }
    if (cur.empty()) throw std::logic_error("deviation DP stage has no reachable state");
    if (diag) {
      diag->table_sizes.push_back(cur.size());
      Rational best = cur.begin()->second.cost;
      for (const auto& [kk, e] : cur) best = std::min(best, e.cost, [](const Rational& a,
                                                                       const Rational& b) {
        return a < b;
      });
      diag->stage_min.push_back(best);
    }
  }

  // Minimizing final entry; ties broken by lexicographically smallest state.
  const auto& last = tables[std::size_t(k)];
  bool have = false;
  Rational best_cost = 0;
  std::vector<std::int64_t> best_state;
  std::uint64_t best_key = 0;
  keys.clear();
  for (const auto& [key, entry] : last) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys) {
    const Entry& entry = last.at(key);
    std::vector<std::int64_t> v = decode(key);
    if (!have || entry.cost < best_cost || (entry.cost == best_cost && v < best_state)) {
      have = true;
      best_cost = entry.cost;
      best_state = v;
      best_key = key;
    }
  }

  // Objective via 2f = g + sum w p + sum_i gap_i * m * mu_i^2.
  Rational wp = 0;
  for (const Job& j : inst.jobs) wp += Rational(j.w) * Rational(j.p);
  Rational instance_term = 0;
  std::int64_t prefix_total = 0;
  for (int i = 0; i < k; ++i) {
    prefix_total += classes.classes[std::size_t(i)].load;
    Rational mu(prefix_total, std::int64_t(m));
    instance_term += efficiency_gap(classes, i) * Rational(std::int64_t(m)) * mu * mu;
  }
  Rational f = Rational(1, 2) * (best_cost + wp + instance_term);
  const std::int64_t objective = f.as_int64();

  // Backtrack the chosen y per class, then realize each class split.
  Schedule schedule;
  schedule.machines.assign(std::size_t(m), {});
  std::uint64_t key = best_key;
  std::vector<std::vector<std::int64_t>> chosen_loads(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    const Entry& entry = tables[std::size_t(i)].at(key);
    const auto& y = ysets[std::size_t(i - 1)][std::size_t(entry.y_idx)];
    const std::int64_t load = classes.classes[std::size_t(i) - 1].load;
    std::vector<std::int64_t> x(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
      const std::int64_t scaled = load - y[std::size_t(l)];
      if (scaled % m != 0) throw std::logic_error("non-integral class load in backtracking");
      x[std::size_t(l)] = scaled / m;
    }
    chosen_loads[std::size_t(i) - 1] = x;
    std::vector<std::int64_t> v = decode(key);
    for (int t = 0; t < m - 1; ++t) v[std::size_t(t)] -= y[std::size_t(t)];
    key = encode(v);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Job> members;
    for (int id : classes.classes[std::size_t(i)].members) members.push_back(inst.jobs[std::size_t(id)]);
    const std::vector<int> assignment = partition_for_loads(members, chosen_loads[std::size_t(i)]);
    for (std::size_t t = 0; t < members.size(); ++t)
      schedule.machines[std::size_t(assignment[t])].push_back(members[t].id);
  }

  return {objective, std::move(schedule)};
}

}  // namespace pmsched
