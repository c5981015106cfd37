#include "pmsched/dp_two.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmsched {

namespace {

Rational efficiency_gap(const EfficiencyClasses& classes, int i) {
  const Rational& e_i = classes.classes[std::size_t(i)].efficiency;
  if (i + 1 < classes.k()) return e_i - classes.classes[std::size_t(i) + 1].efficiency;
  return e_i;
}

/// Row-per-job subset-sum bitsets for one class; row j holds the attainable
/// machine-1 loads using the first j members.
struct SubsetSums {
  std::int64_t load = 0;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  bool test(std::size_t row, std::int64_t v) const {
    if (v < 0 || v > load) return false;
    return (rows[row][std::size_t(v) / 64] >> (std::size_t(v) % 64)) & 1;
  }
};

SubsetSums class_subset_sums(const Instance& inst, const EfficiencyClass& cls) {
  SubsetSums ss;
  ss.load = cls.load;
  ss.words = std::size_t(cls.load) / 64 + 1;
  ss.rows.reserve(cls.members.size() + 1);
  std::vector<std::uint64_t> row(ss.words, 0);
  row[0] = 1;
  ss.rows.push_back(row);
  for (int id : cls.members) {
    const std::int64_t p = inst.jobs[std::size_t(id)].p;
    const std::size_t word = std::size_t(p) / 64, bit = std::size_t(p) % 64;
    std::vector<std::uint64_t> next(ss.words, 0);
    if (bit == 0) {
      for (std::size_t i = word; i < ss.words; ++i) next[i] = row[i - word];
    } else {
      for (std::size_t i = word; i < ss.words; ++i) {
        next[i] = row[i - word] << bit;
        if (i > word) next[i] |= row[i - word - 1] >> (64 - bit);
      }
    }
    for (std::size_t i = 0; i < ss.words; ++i) next[i] |= row[i];
    row = next;
    ss.rows.push_back(row);
  }
  return ss;
}

template <class Cost>
struct DpOut {
  std::vector<std::vector<std::int32_t>> choice;  // per stage, index = delta + c
  std::int64_t best_delta = 0;
  Cost best_cost{};
  std::vector<std::size_t> table_sizes;
  std::vector<Cost> stage_min;
};

/// Stage DP over delta in [-c, c]; stage_term(i, d) is the cost added by
/// finishing stage i at delta = d. Cost is either int128 (scaled by the common
/// gap denominator) or Rational.
template <class Cost, class StageTerm>
DpOut<Cost> run_delta_dp(int k, std::int64_t c,
                         const std::vector<std::vector<std::int64_t>>& ysets,
                         StageTerm&& stage_term, bool want_diag) {
  const std::size_t width = std::size_t(2 * c + 1);
  DpOut<Cost> out;
  out.choice.assign(std::size_t(k) + 1, std::vector<std::int32_t>(width, -1));
  std::vector<Cost> pcost(width), ncost(width);
  std::vector<char> pfin(width, 0), nfin(width, 0);
  pfin[std::size_t(c)] = 1;
  for (int i = 1; i <= k; ++i) {
    const auto& ys = ysets[std::size_t(i - 1)];
    std::fill(nfin.begin(), nfin.end(), 0);
    std::size_t entries = 0;
    for (std::int64_t d = -c; d <= c; ++d) {
      const std::size_t di = std::size_t(d + c);
      std::int32_t best = -1;
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        const std::int64_t prev = d - ys[yi];
        if (prev < -c || prev > c) continue;
        const std::size_t pi = std::size_t(prev + c);
        if (!pfin[pi]) continue;
        if (best < 0 || pcost[pi] < ncost[di]) {
          ncost[di] = pcost[pi];
          best = std::int32_t(yi);
        }
      }
      if (best >= 0) {
        ncost[di] = ncost[di] + stage_term(i - 1, d);
        nfin[di] = 1;
        out.choice[std::size_t(i)][di] = best;
        ++entries;
      }
    }
    if (entries == 0) throw std::logic_error("two-machine DP stage has no reachable state");
    if (want_diag) {
      out.table_sizes.push_back(entries);
      bool have = false;
      Cost bc{};
      for (std::size_t di = 0; di < width; ++di)
        if (nfin[di] && (!have || ncost[di] < bc)) {
          have = true;
          bc = ncost[di];
        }
      out.stage_min.push_back(bc);
    }
    pcost.swap(ncost);
    pfin.swap(nfin);
  }
  // Best final entry; ties broken towards the smallest delta.
  bool have = false;
  for (std::int64_t d = -c; d <= c; ++d) {
    const std::size_t di = std::size_t(d + c);
    if (!pfin[di]) continue;
    if (!have || pcost[di] < out.best_cost) {
      have = true;
      out.best_cost = pcost[di];
      out.best_delta = d;
    }
  }
  return out;
}

}  // namespace

std::int64_t deviation_bound_two(const Instance& inst) {
  const uint128 w = uint128(std::uint64_t(inst.max_weight()));
  const uint128 p = uint128(std::uint64_t(inst.max_processing()));
  const uint128 c = isqrt128(w * p * p * p * p);
  if (c > uint128(std::uint64_t(INT64_MAX))) throw_overflow("deviation bound overflow");
  return std::int64_t(std::uint64_t(c));
}

std::vector<std::vector<std::int64_t>> build_scalar_y(const EfficiencyClasses& classes,
                                                      const ClassDistributions& dists,
                                                      std::int64_t c) {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < classes.k(); ++i) {
    std::vector<std::int64_t> ys;
    for (const auto& x : dists.per_class[std::size_t(i)]) {
      const std::int64_t y = x[0] - x[1];
      if (y >= -2 * c && y <= 2 * c) ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    out.push_back(std::move(ys));
  }
  return out;
}

SolveResult solve_two(const Instance& inst, TwoMachineDiagnostics* diag) {
  if (inst.machines != 2)
    throw std::invalid_argument("two-machine solver requires m=2 (got m = " +
                                std::to_string(inst.machines) + ")");
  if (inst.n() == 0) return {0, Schedule{{{}, {}}}};

  const EfficiencyClasses classes = efficiency_classes(inst);
  const int k = classes.k();
  const std::int64_t c = deviation_bound_two(inst);
  const std::size_t width = std::size_t(2 * c + 1);
  if (width > (std::size_t(1) << 26)) throw std::length_error("two-machine DP table too large");

  // Per class: attainable machine-1 loads and the scalar steps y = 2*x1 - P(J_i).
  std::vector<SubsetSums> sums;
  std::vector<std::vector<std::int64_t>> ysets(static_cast<std::size_t>(k));
  sums.reserve(std::size_t(k));
  for (int i = 0; i < k; ++i) {
    sums.push_back(class_subset_sums(inst, classes.classes[std::size_t(i)]));
    const SubsetSums& ss = sums.back();
    auto& ys = ysets[std::size_t(i)];
    const std::size_t last = ss.rows.size() - 1;
    for (std::int64_t x1 = 0; x1 <= ss.load; ++x1) {
      if (!ss.test(last, x1)) continue;
      const std::int64_t y = 2 * x1 - ss.load;
      if (y >= -2 * c && y <= 2 * c) ys.push_back(y);
    }
  }

  if (diag) {
    diag->c = c;
    diag->y_sizes.clear();
    diag->table_sizes.clear();
    diag->stage_min.clear();
    for (const auto& ys : ysets) diag->y_sizes.push_back(ys.size());
  }

  std::vector<Rational> gaps;
  gaps.reserve(std::size_t(k));
  for (int i = 0; i < k; ++i) gaps.push_back(efficiency_gap(classes, i));

  // Integer fast path: scale every gap by the lcm of the denominators so stage
  // costs become exact int128 values. Fall back to rational costs whenever the
  // scale or the worst-case accumulated cost could overflow.
  uint128 den_lcm = 1;
  std::vector<int128> scaled_gaps;
  bool scaled_ok = true;
  for (const Rational& g : gaps) {
    const uint128 den = uint128(g.den());
    const uint128 mult = den / gcd128(den_lcm, den);
    if (mult != 0 && den_lcm > (uint128(1) << 62) / mult) {
      scaled_ok = false;
      break;
    }
    den_lcm *= mult;
  }
  if (scaled_ok) {
    uint128 total = 0;
    for (const Rational& g : gaps) {
      const uint128 factor = den_lcm / uint128(g.den());
      const uint128 num = uint128(g.num());
      if (num != 0 && factor > (uint128(1) << 100) / num) {
        scaled_ok = false;
        break;
      }
      scaled_gaps.push_back(int128(num * factor));
      total += num * factor;
    }
    // Worst case accumulated cost: total * c^2 must stay well inside int128.
    const uint128 c2 = uint128(std::uint64_t(c)) * uint128(std::uint64_t(c)) + 1;
    if (scaled_ok && total != 0 && c2 > (uint128(1) << 120) / total) scaled_ok = false;
  }

  std::vector<std::vector<std::int32_t>> choice;
  std::int64_t best_delta = 0;
  Rational best_cost;
  std::vector<std::size_t> table_sizes;
  std::vector<Rational> stage_min;
  if (scaled_ok) {
    auto out = run_delta_dp<int128>(
        k, c, ysets,
        [&](int i, std::int64_t d) { return scaled_gaps[std::size_t(i)] * d * d; },
        diag != nullptr);
    choice = std::move(out.choice);
    best_delta = out.best_delta;
    best_cost = Rational::from_int128(out.best_cost, int128(den_lcm));
    table_sizes = std::move(out.table_sizes);
    for (int128 v : out.stage_min) stage_min.push_back(Rational::from_int128(v, int128(den_lcm)));
  } else {
    auto out = run_delta_dp<Rational>(
        k, c, ysets,
        [&](int i, std::int64_t d) { return gaps[std::size_t(i)] * Rational(d) * Rational(d); },
        diag != nullptr);
    choice = std::move(out.choice);
    best_delta = out.best_delta;
    best_cost = out.best_cost;
    table_sizes = std::move(out.table_sizes);
    stage_min = std::move(out.stage_min);
  }
  if (diag) {
    diag->table_sizes = std::move(table_sizes);
    diag->stage_min = std::move(stage_min);
  }

  // Objective via 4f = g2 + sum_i gap_i * S_i^2 + 2 * sum w p.
  Rational wp = 0;
  for (const Job& j : inst.jobs) wp += Rational(j.w) * Rational(j.p);
  Rational total_term = 0;
  std::int64_t prefix_total = 0;
  for (int i = 0; i < k; ++i) {
    prefix_total += classes.classes[std::size_t(i)].load;
    Rational S(prefix_total);
    total_term += efficiency_gap(classes, i) * S * S;
  }
  Rational f = Rational(1, 4) * (best_cost + total_term + Rational(2) * wp);
  const std::int64_t objective = f.as_int64();

  // Backtrack: per class the chosen y fixes x1 = (P(J_i) + y) / 2.
  Schedule schedule;
  schedule.machines.assign(2, {});
  std::int64_t d = best_delta;
  std::vector<std::int64_t> chosen_x1(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    const std::int32_t yi = choice[std::size_t(i)][std::size_t(d + c)];
    const std::int64_t y = ysets[std::size_t(i - 1)][std::size_t(yi)];
    const std::int64_t load = classes.classes[std::size_t(i) - 1].load;
    if ((load + y) % 2 != 0) throw std::logic_error("odd class split in backtracking");
    chosen_x1[std::size_t(i - 1)] = (load + y) / 2;
    d -= y;
  }
  for (int i = 0; i < k; ++i) {
    const EfficiencyClass& cls = classes.classes[std::size_t(i)];
    const SubsetSums& ss = sums[std::size_t(i)];
    std::int64_t target = chosen_x1[std::size_t(i)];
    std::vector<int> on_first(cls.members.size(), 0);
    for (std::size_t j = cls.members.size(); j > 0; --j) {
      const std::int64_t p = inst.jobs[std::size_t(cls.members[j - 1])].p;
      if (target >= p && ss.test(j - 1, target - p)) {
        on_first[j - 1] = 1;
        target -= p;
      } else if (!ss.test(j - 1, target)) {
        throw std::logic_error("subset-sum backtracking failed");
      }
    }
    for (std::size_t j = 0; j < cls.members.size(); ++j)
      schedule.machines[on_first[j] ? 0 : 1].push_back(cls.members[j]);
  }

  return {objective, std::move(schedule)};
}

}  // namespace pmsched
