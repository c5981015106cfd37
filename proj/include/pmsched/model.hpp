#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmsched/rational.hpp"

namespace pmsched {

struct Job {
  int id = 0;
  std::int64_t p = 1;  // processing time, >= 1
  std::int64_t w = 1;  // weight, >= 1
};

/// Compares job efficiencies w/p by cross-multiplication (exact).
inline bool efficiency_greater(const Job& a, const Job& b) {
  return int128(a.w) * b.p > int128(b.w) * a.p;
}
inline bool efficiency_equal(const Job& a, const Job& b) {
  return int128(a.w) * b.p == int128(b.w) * a.p;
}

struct Instance {
  std::vector<Job> jobs;
  int machines = 1;

  int n() const { return static_cast<int>(jobs.size()); }
  std::int64_t total_processing() const;
  std::int64_t max_processing() const;  // 0 when empty
  std::int64_t max_weight() const;      // 0 when empty
};

/// Jobs grouped by distinct efficiency, strictly decreasing.
struct EfficiencyClass {
  Rational efficiency;
  std::vector<int> members;  // job ids, ascending
  std::int64_t load = 0;     // P(J_i)
};

struct EfficiencyClasses {
  std::vector<EfficiencyClass> classes;
  int k() const { return static_cast<int>(classes.size()); }
};

struct Schedule {
  std::vector<std::vector<int>> machines;  // per-machine job ids, in processing order
};

/// Parses the instance text format: "n m" then n lines of "p w".
/// Throws std::runtime_error naming the offending line.
Instance parse_instance(std::string_view text);

std::string format_instance(const Instance& inst);

EfficiencyClasses efficiency_classes(const Instance& inst);

/// Job ids sorted by non-increasing efficiency; ties by ascending id.
std::vector<int> wspt_order(const Instance& inst);

/// True when every machine sequence is in non-increasing efficiency order.
bool is_wspt(const Instance& inst, const Schedule& s);

/// nullopt when valid, otherwise a human-readable violation.
std::optional<std::string> validate_schedule(const Instance& inst, const Schedule& s,
                                             bool require_wspt = false);

/// Schedule text format: "objective <v>" header then one id line per machine.
std::string format_schedule(const Schedule& s, std::int64_t objective);
std::pair<Schedule, std::int64_t> parse_schedule(std::string_view text);

}  // namespace pmsched
