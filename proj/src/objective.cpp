#include "pmsched/objective.hpp"

#include <stdexcept>

namespace pmsched {

namespace {

std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("objective overflow");
  return r;
}

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("objective overflow");
  return r;
}

std::vector<int> class_of_job(const Instance& inst, const EfficiencyClasses& classes) {
  std::vector<int> cls(static_cast<size_t>(inst.n()), -1);
  for (int i = 0; i < classes.k(); ++i)
    for (int id : classes.classes[static_cast<size_t>(i)].members)
      cls[static_cast<size_t>(id)] = i;
  return cls;
}

void require_wspt(const Instance& inst, const Schedule& s, const char* op) {
  if (!is_wspt(inst, s))
    throw std::invalid_argument(std::string(op) + " requires a WSPT-ordered schedule");
}

/// Sentinel e_(k+1) = 0 appended; gap_i = e_(i) - e_(i+1).
Rational efficiency_gap(const EfficiencyClasses& classes, int i) {
  const Rational& e_i = classes.classes[static_cast<size_t>(i)].efficiency;
  if (i + 1 < classes.k()) return e_i - classes.classes[static_cast<size_t>(i) + 1].efficiency;
  return e_i;
}

}  // namespace

std::int64_t total_weighted_completion(const Instance& inst, const Schedule& s) {
  if (auto err = validate_schedule(inst, s)) throw std::invalid_argument(*err);
  std::int64_t total = 0;
  for (const auto& machine : s.machines) {
    std::int64_t time = 0;
    for (int id : machine) {
      const Job& job = inst.jobs[static_cast<size_t>(id)];
      time = checked_add64(time, job.p);
      total = checked_add64(total, checked_mul64(job.w, time));
    }
  }
  return total;
}

std::vector<std::vector<std::int64_t>> prefix_loads(const Instance& inst,
                                                    const EfficiencyClasses& classes,
                                                    const Schedule& s) {
  const int k = classes.k();
  const int m = inst.machines;
  std::vector<int> cls = class_of_job(inst, classes);
  std::vector<std::vector<std::int64_t>> x(static_cast<size_t>(k),
                                           std::vector<std::int64_t>(static_cast<size_t>(m), 0));
  for (int l = 0; l < m; ++l)
    for (int id : s.machines[static_cast<size_t>(l)]) {
      int i = cls[static_cast<size_t>(id)];
      x[static_cast<size_t>(i)][static_cast<size_t>(l)] += inst.jobs[static_cast<size_t>(id)].p;
    }
  for (int i = 1; i < k; ++i)
    for (int l = 0; l < m; ++l)
      x[static_cast<size_t>(i)][static_cast<size_t>(l)] +=
          x[static_cast<size_t>(i) - 1][static_cast<size_t>(l)];
  return x;
}

std::vector<std::vector<Rational>> deviation_profile(const Instance& inst,
                                                     const EfficiencyClasses& classes,
                                                     const Schedule& s) {
  auto x = prefix_loads(inst, classes, s);
  const int m = inst.machines;
  std::vector<std::vector<Rational>> delta;
  std::int64_t prefix_total = 0;
  for (int i = 0; i < classes.k(); ++i) {
    prefix_total += classes.classes[static_cast<size_t>(i)].load;
    Rational mu(prefix_total, m);
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l)
      row.push_back(mu - Rational(x[static_cast<size_t>(i)][static_cast<size_t>(l)]));
    delta.push_back(std::move(row));
  }
  return delta;
}

Rational f_value(const Instance& inst, const Schedule& s) {
  if (auto err = validate_schedule(inst, s)) throw std::invalid_argument(*err);
  require_wspt(inst, s, "f_value");
  EfficiencyClasses classes = efficiency_classes(inst);
  auto x = prefix_loads(inst, classes, s);
  Rational sum = 0;
  for (int i = 0; i < classes.k(); ++i) {
    Rational sq = 0;
    for (int l = 0; l < inst.machines; ++l) {
      Rational xv(x[static_cast<size_t>(i)][static_cast<size_t>(l)]);
      sq += xv * xv;
    }
    sum += efficiency_gap(classes, i) * sq;
  }
  Rational wp = 0;
  for (const Job& j : inst.jobs) wp += Rational(checked_mul64(j.w, j.p));
  return Rational(1, 2) * (sum + wp);
}

Rational g_value(const Instance& inst, const Schedule& s) {
  if (auto err = validate_schedule(inst, s)) throw std::invalid_argument(*err);
  require_wspt(inst, s, "g_value");
  EfficiencyClasses classes = efficiency_classes(inst);
  auto delta = deviation_profile(inst, classes, s);
  Rational g = 0;
  for (int i = 0; i < classes.k(); ++i) {
    Rational sq = 0;
    for (const Rational& d : delta[static_cast<size_t>(i)]) sq += d * d;
    g += efficiency_gap(classes, i) * sq;
  }
  return g;
}

std::vector<std::int64_t> delta_profile(const Instance& inst, const EfficiencyClasses& classes,
                                        const Schedule& s) {
  if (inst.machines != 2) throw std::invalid_argument("delta_profile requires m = 2");
  auto x = prefix_loads(inst, classes, s);
  std::vector<std::int64_t> delta;
  delta.reserve(static_cast<size_t>(classes.k()));
  for (int i = 0; i < classes.k(); ++i)
    delta.push_back(x[static_cast<size_t>(i)][0] - x[static_cast<size_t>(i)][1]);
  return delta;
}

Rational g2_value(const Instance& inst, const Schedule& s) {
  if (inst.machines != 2) throw std::invalid_argument("g2_value requires m = 2");
  if (auto err = validate_schedule(inst, s)) throw std::invalid_argument(*err);
  require_wspt(inst, s, "g2_value");
  EfficiencyClasses classes = efficiency_classes(inst);
  auto delta = delta_profile(inst, classes, s);
  Rational g2 = 0;
  for (int i = 0; i < classes.k(); ++i) {
    Rational d(delta[static_cast<size_t>(i)]);
    g2 += efficiency_gap(classes, i) * d * d;
  }
  return g2;
}

IdentityReport check_identities(const Instance& inst, const Schedule& s) {
  IdentityReport report;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };

  EfficiencyClasses classes = efficiency_classes(inst);
  const int m = inst.machines;
  Rational f = f_value(inst, s);
  Rational g = g_value(inst, s);
  Rational wp = 0;
  for (const Job& j : inst.jobs) wp += Rational(checked_mul64(j.w, j.p));

  std::int64_t direct = total_weighted_completion(inst, s);
  if (f != Rational(direct))
    fail("f = " + f.str() + " but direct evaluation = " + std::to_string(direct));

  // 2f = g + sum w_j p_j + sum_i gap_i * m * mu_i^2
  Rational instance_term = 0;
  std::int64_t prefix_total = 0;
  for (int i = 0; i < classes.k(); ++i) {
    prefix_total += classes.classes[static_cast<size_t>(i)].load;
    Rational mu(prefix_total, m);
    instance_term += efficiency_gap(classes, i) * Rational(std::int64_t(m)) * mu * mu;
  }
  Rational lhs = Rational(2) * f;
  Rational rhs = g + wp + instance_term;
  if (lhs != rhs)
    fail("2f = " + lhs.str() + " but g + sum(w p) + instance term = " + rhs.str());

  // Per class prefix: sum x^2 = sum (mu - x)^2 + m mu^2
  auto x = prefix_loads(inst, classes, s);
  prefix_total = 0;
  for (int i = 0; i < classes.k(); ++i) {
    prefix_total += classes.classes[static_cast<size_t>(i)].load;
    Rational mu(prefix_total, m);
    Rational sum_sq = 0, sum_dev = 0;
    for (int l = 0; l < m; ++l) {
      Rational xv(x[static_cast<size_t>(i)][static_cast<size_t>(l)]);
      sum_sq += xv * xv;
      Rational d = mu - xv;
      sum_dev += d * d;
    }
    Rational right = sum_dev + Rational(std::int64_t(m)) * mu * mu;
    if (sum_sq != right)
      fail("class prefix " + std::to_string(i + 1) + ": sum x^2 = " + sum_sq.str() +
           " but deviation form = " + right.str());
  }

  if (m == 2) {
    // 2f = g2/2 + (1/2) sum_i gap_i * S_i^2 + sum w_j p_j
    Rational g2 = g2_value(inst, s);
    Rational total_term = 0;
    prefix_total = 0;
    for (int i = 0; i < classes.k(); ++i) {
      prefix_total += classes.classes[static_cast<size_t>(i)].load;
      Rational S(prefix_total);
      total_term += efficiency_gap(classes, i) * S * S;
    }
    Rational rhs2 = Rational(1, 2) * g2 + Rational(1, 2) * total_term + wp;
    if (lhs != rhs2)
      fail("two-machine identity: 2f = " + lhs.str() + " but g2 form = " + rhs2.str());
    if (g2 != Rational(2) * g)
      fail("g2 = " + g2.str() + " but 2g =" + (Rational(2) * g).str());
  }

  return report;
}

}  // namespace pmsched
