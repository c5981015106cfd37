#include "pmsched/generator.hpp"

#include <random>
#include <stdexcept>

namespace pmsched {

Instance generate_instance(int n, int m, std::int64_t p_max, std::int64_t w_max,
                           std::uint64_t seed) {
  if (n < 0 || m < 1 || p_max < 1 || w_max < 1)
    throw std::invalid_argument("generator parameters must be positive");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.machines = m;
  inst.jobs.reserve(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    // Modulo reduction keeps the stream portable across standard libraries.
    const std::int64_t p = 1 + std::int64_t(rng() % std::uint64_t(p_max));
    const std::int64_t w = 1 + std::int64_t(rng() % std::uint64_t(w_max));
    inst.jobs.push_back(Job{j, p, w});
  }
  return inst;
}

}  // namespace pmsched
