#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmsched/baselines.hpp"
#include "pmsched/dp_deviation.hpp"
#include "pmsched/dp_two.hpp"
#include "pmsched/generator.hpp"
#include "pmsched/objective.hpp"

namespace {

using namespace pmsched;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string resolve_auto(const Instance& inst) {
  const int m = inst.machines;
  if (m == 1) return "wspt";
  const long double P = (long double)inst.total_processing();
  const long double n = (long double)inst.n();
  const long double w = (long double)inst.max_weight();
  const long double p = (long double)inst.max_processing();
  if (m == 2) {
    if (w * w * std::pow(p, 5.0L) < P * n) return "two-machine";
    return "lawler-moore";
  }
  if (m <= 4 && std::pow(w, (long double)(m + 1)) * std::pow(p, (long double)(4 * m + 1)) <
                    std::pow(P, (long double)(m - 1)) * n)
    return "deviation";
  return "lawler-moore";
}

SolveResult run_algo(const Instance& inst, const std::string& algo, std::int64_t brute_cap) {
  if (algo == "deviation") return solve_deviation(inst);
  if (algo == "two-machine") return solve_two(inst);
  if (algo == "lawler-moore") return lawler_moore(inst);
  if (algo == "brute") {
    BruteResult b = brute_force(inst, brute_cap);
    if (b.optima.empty()) return {0, Schedule{std::vector<std::vector<int>>(std::size_t(inst.machines))}};
    return {b.objective, b.optima.front()};
  }
  if (algo == "balance") {
    Schedule s = wspt_load_balance(inst);
    return {total_weighted_completion(inst, s), s};
  }
  if (algo == "wspt") {
    if (inst.machines != 1) throw std::runtime_error("wspt solver requires m=1");
    Schedule s;
    s.machines.assign(std::size_t(inst.machines), {});
    s.machines[0] = wspt_order(inst);
    return {inst.n() == 0 ? 0 : total_weighted_completion(inst, s), s};
  }
  throw std::runtime_error("unknown algorithm: " + algo);
}

int cmd_solve(const std::string& path, std::string algo, const std::string& out_path,
              std::int64_t brute_cap) {
  Instance inst = parse_instance(read_file(path));
  if (algo == "auto") algo = resolve_auto(inst);

  const auto start = std::chrono::steady_clock::now();
  SolveResult res = run_algo(inst, algo, brute_cap);
  const auto stop = std::chrono::steady_clock::now();
  const double millis = std::chrono::duration<double, std::milli>(stop - start).count();

  // Re-verify before emitting anything.
  if (auto err = validate_schedule(inst, res.schedule))
    throw std::runtime_error("solver produced invalid schedule: " + *err);
  const std::int64_t check = total_weighted_completion(inst, res.schedule);
  if (check != res.objective)
    throw std::runtime_error("solver objective " + std::to_string(res.objective) +
                             " does not match schedule value " + std::to_string(check));

  std::cout << "algorithm " << algo << "\n";
  std::cout << format_schedule(res.schedule, res.objective);
  std::fprintf(stderr, "millis %.3f\n", millis);
  if (!out_path.empty()) write_file(out_path, format_schedule(res.schedule, res.objective));
  return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sched_path) {
  Instance inst = parse_instance(read_file(inst_path));
  auto [schedule, claimed] = parse_schedule(read_file(sched_path));
  if (auto err = validate_schedule(inst, schedule)) {
    std::cout << "invalid schedule: " << *err << "\n";
    return 1;
  }

  const std::int64_t direct = total_weighted_completion(inst, schedule);
  std::cout << "objective(direct) " << direct << "\n";
  if (claimed != direct) {
    std::cout << "claimed objective " << claimed << " does not match\n";
    return 1;
  }
  if (!is_wspt(inst, schedule)) {
    std::cout << "schedule is not in WSPT order; formulation checks skipped\n";
    return 0;
  }

  const EfficiencyClasses classes = efficiency_classes(inst);
  std::cout << "objective(formulation) " << f_value(inst, schedule).str() << "\n";
  std::cout << "g " << g_value(inst, schedule).str() << "\n";

  // max |Delta| and the structure bound, in scaled integers.
  const int m = inst.machines;
  auto x = prefix_loads(inst, classes, schedule);
  std::int64_t prefix_total = 0;
  int128 max_scaled = 0;
  for (int i = 0; i < classes.k(); ++i) {
    prefix_total += classes.classes[std::size_t(i)].load;
    for (int l = 0; l < m; ++l) {
      int128 v = int128(prefix_total) - int128(m) * x[std::size_t(i)][std::size_t(l)];
      if (v < 0) v = -v;
      max_scaled = std::max(max_scaled, v);
    }
  }
  std::cout << "max|Delta| " << Rational::from_int128(max_scaled, m).str() << "\n";
  const int128 bound_sq = int128(m) * m * m * inst.max_weight() * inst.max_processing() *
                          inst.max_processing() * inst.max_processing() * inst.max_processing();
  const bool bound_ok = max_scaled * max_scaled <= bound_sq;
  std::cout << "deviation bound (optimal-schedule guarantee) "
            << (bound_ok ? "holds" : "exceeded") << "\n";

  if (m == 2) {
    Rational g2 = g2_value(inst, schedule);
    std::cout << "g2 " << g2.str() << "\n";
    std::cout << "delta";
    for (std::int64_t d : delta_profile(inst, classes, schedule)) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "g2 = 2g " << (g2 == Rational(2) * g_value(inst, schedule) ? "ok" : "VIOLATED")
              << "\n";
  }

  IdentityReport report = check_identities(inst, schedule);
  if (!report.ok) {
    for (const auto& msg : report.failures) std::cout << "identity violation: " << msg << "\n";
    return 1;
  }
  std::cout << "identities ok\n";
  return 0;
}

int cmd_gen(int n, int m, std::int64_t pmax, std::int64_t wmax, std::uint64_t seed,
            const std::string& out_path) {
  const std::string text = format_instance(generate_instance(n, m, pmax, wmax, seed));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key)) continue;
    if (key[0] == '#') continue;
    std::getline(ls, value);
    const auto first = value.find_first_not_of(" \t");
    cfg[key] = first == std::string::npos ? "" : value.substr(first);
  }
  return cfg;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(tok.substr(a, b - a + 1));
  }
  return out;
}

int cmd_bench(const std::string& config_path, const std::string& out_path) {
  auto cfg = parse_config(read_file(config_path));
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
  };
  const int m = std::stoi(get("m", "2"));
  const std::int64_t pmax = std::stoll(get("pmax", "3"));
  const std::int64_t wmax = std::stoll(get("wmax", "3"));
  const std::uint64_t seed = std::stoull(get("seed", "1"));
  const int reps = std::stoi(get("reps", "5"));
  const std::vector<std::string> sizes = split_csv(get("n", "250,500,1000,2000"));
  const std::vector<std::string> solvers = split_csv(get("solvers", "two-machine,lawler-moore"));

  std::ostringstream csv;
  csv << "n,m,pmax,wmax,seed,solver,objective,millis\n";
  for (const std::string& ns : sizes) {
    const int n = std::stoi(ns);
    Instance inst = generate_instance(n, m, pmax, wmax, seed);
    std::int64_t reference = -1;
    std::string reference_solver;
    for (const std::string& solver : solvers) {
      std::vector<double> times;
      std::int64_t objective = 0;
      for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        SolveResult res = run_algo(inst, solver, 2'000'000);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        objective = res.objective;
      }
      std::sort(times.begin(), times.end());
      const double median = times[times.size() / 2];
      if (solver != "balance") {
        if (reference < 0) {
          reference = objective;
          reference_solver = solver;
        } else if (objective != reference) {
          std::cerr << "objective mismatch at n=" << n << ": " << reference_solver << "="
                    << reference << " vs " << solver << "=" << objective << "\n";
          return 1;
        }
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", median);
      csv << n << "," << m << "," << pmax << "," << wmax << "," << seed << "," << solver << ","
          << objective << "," << buf << "\n";
    }
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for total weighted completion time on identical parallel machines"};
  app.require_subcommand(1);

  std::string inst_path, sched_path, out_path, algo = "auto", config_path;
  std::int64_t brute_cap = 2'000'000;
  int n = 1, m = 1;
  std::int64_t pmax = 1, wmax = 1;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", inst_path)->required();
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember({"auto", "deviation", "two-machine", "lawler-moore", "brute",
                             "balance", "wspt"}));
  solve->add_option("--out", out_path, "Write the schedule to this file");
  solve->add_option("--brute-cap", brute_cap);

  auto* verify = app.add_subcommand("verify", "Verify a schedule against an instance");
  verify->add_option("file", inst_path)->required();
  verify->add_option("schedule", sched_path)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", n)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--pmax", pmax)->required();
  gen->add_option("--wmax", wmax)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite from a config file");
  bench->add_option("--config", config_path)->required();
  bench->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(inst_path, algo, out_path, brute_cap);
    if (verify->parsed()) return cmd_verify(inst_path, sched_path);
    if (gen->parsed()) return cmd_gen(n, m, pmax, wmax, seed, out_path);
    if (bench->parsed()) return cmd_bench(config_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
