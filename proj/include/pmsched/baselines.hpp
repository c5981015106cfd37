#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/solve_types.hpp"

namespace pmsched {

/// Classical DP over prefix loads of the first m-1 machines, O(P^{m-1} * n).
SolveResult lawler_moore(const Instance& inst);

struct BruteResult {
  std::int64_t objective = 0;
  std::vector<Schedule> optima;  // every optimal WSPT schedule (full argmin set)
};

/// Exhaustive oracle over all m^n machine assignments with WSPT order per
/// machine. Refuses when m^n exceeds the cap.
BruteResult brute_force(const Instance& inst, std::int64_t cap = 2'000'000);

/// Greedy list scheduling over WSPT-ordered jobs, always to the least loaded
/// machine (ties towards the lowest machine index).
Schedule wspt_load_balance(const Instance& inst);

}  // namespace pmsched
