#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmsched/model.hpp"
#include "pmsched/rational.hpp"

namespace pmsched {

/// Direct evaluation of sum of w_j * C_j from per-machine prefix sums.
std::int64_t total_weighted_completion(const Instance& inst, const Schedule& s);

/// x[i][l] = load of classes 1..i+1 on machine l (prefix loads per class).
std::vector<std::vector<std::int64_t>> prefix_loads(const Instance& inst,
                                                    const EfficiencyClasses& classes,
                                                    const Schedule& s);

/// delta[i][l] = mu_i - x[i][l], exact rationals.
std::vector<std::vector<Rational>> deviation_profile(const Instance& inst,
                                                     const EfficiencyClasses& classes,
                                                     const Schedule& s);

/// Prefix-load-squared formulation of the objective; requires a WSPT schedule.
Rational f_value(const Instance& inst, const Schedule& s);

/// Deviation-weighted quadratic potential; requires a WSPT schedule.
Rational g_value(const Instance& inst, const Schedule& s);

/// Two-machine potential over load differences delta_i; requires m = 2.
Rational g2_value(const Instance& inst, const Schedule& s);

/// delta_i = machine-1 prefix load minus machine-2 prefix load (m = 2).
std::vector<std::int64_t> delta_profile(const Instance& inst, const EfficiencyClasses& classes,
                                        const Schedule& s);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks the algebraic identities tying f, g, g_2 and the direct objective
/// together, in exact rational arithmetic.
IdentityReport check_identities(const Instance& inst, const Schedule& s);

}  // namespace pmsched
