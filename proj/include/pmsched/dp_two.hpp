#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/rational.hpp"
#include "pmsched/solve_types.hpp"
#include "pmsched/vectorset.hpp"

namespace pmsched {

/// c = floor(sqrt(w_max) * p_max^2) for the two-machine DP.
std::int64_t deviation_bound_two(const Instance& inst);

/// Per class i: scalar load differences {x_1 - x_2 : x in X_i}, deduplicated,
/// sorted, filtered to [-2c, 2c].
std::vector<std::vector<std::int64_t>> build_scalar_y(const EfficiencyClasses& classes,
                                                      const ClassDistributions& dists,
                                                      std::int64_t c);

struct TwoMachineDiagnostics {
  std::int64_t c = 0;
  std::vector<std::size_t> y_sizes;       // |Y*_i| per class
  std::vector<std::size_t> table_sizes;   // finite entries per stage 1..k
  std::vector<Rational> stage_min;        // min cost per stage 1..k
};

/// Two-machine DP over the scalar load difference delta_i. Requires m = 2.
SolveResult solve_two(const Instance& inst, TwoMachineDiagnostics* diag = nullptr);

}  // namespace pmsched
