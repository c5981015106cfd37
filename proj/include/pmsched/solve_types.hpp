#pragma once

#include <cstdint>

#include "pmsched/model.hpp"

namespace pmsched {

struct SolveResult {
  std::int64_t objective = 0;
  Schedule schedule;
};

}  // namespace pmsched
