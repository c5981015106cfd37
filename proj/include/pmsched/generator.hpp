#pragma once

#include <cstdint>

#include "pmsched/model.hpp"

namespace pmsched {

/// Deterministic instance generator: p_j and w_j uniform in [1, p_max] and
/// [1, w_max], drawn from std::mt19937_64 seeded with `seed` (p then w per
/// job, reduced by modulo). Identical parameters yield identical instances.
Instance generate_instance(int n, int m, std::int64_t p_max, std::int64_t w_max,
                           std::uint64_t seed);

}  // namespace pmsched
