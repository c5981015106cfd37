#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/rational.hpp"
#include "pmsched/solve_types.hpp"
#include "pmsched/vectorset.hpp"

namespace pmsched {

/// c = floor(sqrt(m * w_max) * p_max^2), via integer square root.
std::int64_t deviation_bound(const Instance& inst);

/// Per class i: scaled load-difference steps y_hat with y_hat_l = P(J_i) - m*x_l,
/// filtered to [-2cm, 2cm]^m, deduplicated and sorted lexicographically.
std::vector<std::vector<std::vector<std::int64_t>>> build_y_sets(const EfficiencyClasses& classes,
                                                                 const ClassDistributions& dists,
                                                                 int m, std::int64_t c);

struct DeviationDiagnostics {
  std::int64_t c = 0;
  std::vector<std::size_t> table_sizes;  // finite entries per stage 1..k
  std::vector<Rational> stage_min;       // min cost per stage 1..k
};

/// Dynamic program over bounded load-deviation vectors (general fixed m).
/// Supports 2 <= m <= max_machines; m = 1 falls back to plain WSPT.
SolveResult solve_deviation(const Instance& inst, int max_machines = 4,
                            DeviationDiagnostics* diag = nullptr);

}  // namespace pmsched
