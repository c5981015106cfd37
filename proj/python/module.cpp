#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmsched/baselines.hpp"
#include "pmsched/dp_deviation.hpp"
#include "pmsched/dp_two.hpp"
#include "pmsched/generator.hpp"
#include "pmsched/objective.hpp"

namespace py = pybind11;
using namespace pmsched;

namespace {

Instance make_instance(const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m) {
  Instance inst;
  inst.machines = m;
  inst.jobs.reserve(jobs.size());
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (jobs[j].first < 1 || jobs[j].second < 1)
      throw std::invalid_argument("processing times and weights must be >= 1");
    inst.jobs.push_back(Job{int(j), jobs[j].first, jobs[j].second});
  }
  return inst;
}

Schedule make_schedule(const std::vector<std::vector<int>>& machines) {
  return Schedule{machines};
}

py::dict solve_py(const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m,
                  const std::string& algo) {
  Instance inst = make_instance(jobs, m);
  SolveResult res;
  std::string used = algo;
  if (algo == "deviation") {
    res = solve_deviation(inst);
  } else if (algo == "two-machine") {
    res = solve_two(inst);
  } else if (algo == "lawler-moore") {
    res = lawler_moore(inst);
  } else if (algo == "brute") {
    BruteResult b = brute_force(inst);
    res = {b.objective, b.optima.empty()
                            ? Schedule{std::vector<std::vector<int>>(std::size_t(m))}
                            : b.optima.front()};
  } else if (algo == "auto") {
    used = m == 2 ? "two-machine" : "deviation";
    res = m == 2 ? solve_two(inst) : solve_deviation(inst);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  py::dict out;
  out["objective"] = res.objective;
  out["machines"] = res.schedule.machines;
  out["algorithm"] = used;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact solvers for minimizing total weighted completion time on "
              "identical parallel machines";

  mod.def("solve", &solve_py, py::arg("jobs"), py::arg("m"), py::arg("algo") = "auto",
          "Solve an instance given as [(p, w), ...]; returns objective, machines, algorithm.");

  mod.def(
      "evaluate",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m,
         const std::vector<std::vector<int>>& machines) {
        return total_weighted_completion(make_instance(jobs, m), make_schedule(machines));
      },
      py::arg("jobs"), py::arg("m"), py::arg("machines"));

  mod.def(
      "wspt_order",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs) {
        return wspt_order(make_instance(jobs, 1));
      },
      py::arg("jobs"));

  mod.def(
      "load_balance",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m) {
        return wspt_load_balance(make_instance(jobs, m)).machines;
      },
      py::arg("jobs"), py::arg("m"));

  mod.def(
      "check_identities",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m,
         const std::vector<std::vector<int>>& machines) {
        IdentityReport rep = check_identities(make_instance(jobs, m), make_schedule(machines));
        py::dict out;
        out["ok"] = rep.ok;
        out["failures"] = rep.failures;
        return out;
      },
      py::arg("jobs"), py::arg("m"), py::arg("machines"));

  mod.def(
      "generate",
      [](int n, int m, std::int64_t pmax, std::int64_t wmax, std::uint64_t seed) {
        Instance inst = generate_instance(n, m, pmax, wmax, seed);
        std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
        for (const Job& j : inst.jobs) jobs.emplace_back(j.p, j.w);
        return jobs;
      },
      py::arg("n"), py::arg("m"), py::arg("pmax"), py::arg("wmax"), py::arg("seed"));

  mod.def("parse_instance", [](const std::string& text) {
    Instance inst = parse_instance(text);
    std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
    for (const Job& j : inst.jobs) jobs.emplace_back(j.p, j.w);
    return py::make_tuple(jobs, inst.machines);
  });

  mod.def("format_instance",
          [](const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, int m) {
            return format_instance(make_instance(jobs, m));
          });
}
