#pragma once

#include <cstdint>
#include <vector>

#include "pmsched/model.hpp"

namespace pmsched {

/// Finds an assignment of the given jobs to machines 0..m-1 such that machine
/// t carries exactly loads[t] total processing time (sum of loads must equal
/// the total processing time of the jobs). Returns one machine index per job.
/// Throws std::logic_error if no such assignment exists.
std::vector<int> partition_for_loads(const std::vector<Job>& jobs,
                                     const std::vector<std::int64_t>& loads);

}  // namespace pmsched
