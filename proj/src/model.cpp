#include "pmsched/model.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pmsched {

std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  uint128 u = neg ? uint128(-(v + 1)) + 1 : uint128(v);
  std::string s;
  while (u != 0) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::int64_t Instance::total_processing() const {
  std::int64_t sum = 0;
  for (const Job& j : jobs) {
    if (__builtin_add_overflow(sum, j.p, &sum)) throw_overflow("total processing time overflow");
  }
  return sum;
}

std::int64_t Instance::max_processing() const {
  std::int64_t m = 0;
  for (const Job& j : jobs) m = std::max(m, j.p);
  return m;
}

std::int64_t Instance::max_weight() const {
  std::int64_t m = 0;
  for (const Job& j : jobs) m = std::max(m, j.w);
  return m;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg);
}

std::vector<std::int64_t> parse_int_line(const std::string& line, int lineno, size_t expect) {
  std::vector<std::int64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) parse_fail(lineno, "expected integer, got '" + std::string(p, end) + "'");
    out.push_back(v);
    p = next;
  }
  if (out.size() != expect)
    parse_fail(lineno, "expected " + std::to_string(expect) + " integers, got " +
                           std::to_string(out.size()));
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) parse_fail(1, "missing header line \"n m\"");
  ++lineno;
  auto header = parse_int_line(line, lineno, 2);
  std::int64_t n = header[0], m = header[1];
  if (n < 0) parse_fail(lineno, "job count must be >= 0");
  if (m < 1) parse_fail(lineno, "machine count must be >= 1");

  Instance inst;
  inst.machines = static_cast<int>(m);
  inst.jobs.reserve(static_cast<size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, "missing job line (expected " +
                                                           std::to_string(n) + " jobs)");
    ++lineno;
    auto vals = parse_int_line(line, lineno, 2);
    if (vals[0] < 1) parse_fail(lineno, "processing time must be >= 1");
    if (vals[1] < 1) parse_fail(lineno, "weight must be >= 1");
    inst.jobs.push_back(Job{static_cast<int>(j), vals[0], vals[1]});
  }
  while (std::getline(in, line)) {
    ++lineno;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') parse_fail(lineno, "trailing content after job list");
  }
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.machines) + "\n";
  for (const Job& j : inst.jobs)
    out += std::to_string(j.p) + " " + std::to_string(j.w) + "\n";
  return out;
}

EfficiencyClasses efficiency_classes(const Instance& inst) {
  std::vector<int> order = wspt_order(inst);
  EfficiencyClasses ec;
  for (int id : order) {
    const Job& job = inst.jobs[static_cast<size_t>(id)];
    if (ec.classes.empty() ||
        !efficiency_equal(inst.jobs[static_cast<size_t>(ec.classes.back().members.front())], job)) {
      EfficiencyClass cls;
      cls.efficiency = Rational(job.w, job.p);
      ec.classes.push_back(std::move(cls));
    }
    ec.classes.back().members.push_back(id);
    ec.classes.back().load += job.p;
  }
  return ec;
}

std::vector<int> wspt_order(const Instance& inst) {
  std::vector<int> order(static_cast<size_t>(inst.n()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return efficiency_greater(inst.jobs[static_cast<size_t>(a)], inst.jobs[static_cast<size_t>(b)]);
  });
  return order;
}

bool is_wspt(const Instance& inst, const Schedule& s) {
  for (const auto& machine : s.machines) {
    for (size_t t = 1; t < machine.size(); ++t) {
      if (efficiency_greater(inst.jobs[static_cast<size_t>(machine[t])],
                             inst.jobs[static_cast<size_t>(machine[t - 1])]))
        return false;
    }
  }
  return true;
}

std::optional<std::string> validate_schedule(const Instance& inst, const Schedule& s,
                                             bool require_wspt) {
  if (static_cast<int>(s.machines.size()) != inst.machines)
    return "schedule has " + std::to_string(s.machines.size()) + " machines, instance has " +
           std::to_string(inst.machines);
  std::vector<int> seen(static_cast<size_t>(inst.n()), 0);
  for (const auto& machine : s.machines) {
    for (int id : machine) {
      if (id < 0 || id >= inst.n()) return "job " + std::to_string(id) + " does not exist";
      if (seen[static_cast<size_t>(id)]++) return "job " + std::to_string(id) + " appears twice";
    }
  }
  for (int id = 0; id < inst.n(); ++id)
    if (!seen[static_cast<size_t>(id)]) return "job " + std::to_string(id) + " unscheduled";
  if (require_wspt && !is_wspt(inst, s)) return std::string("machine order violates WSPT");
  return std::nullopt;
}

std::string format_schedule(const Schedule& s, std::int64_t objective) {
  std::string out = "objective " + std::to_string(objective) + "\n";
  for (const auto& machine : s.machines) {
    for (size_t t = 0; t < machine.size(); ++t) {
      if (t) out += ' ';
      out += std::to_string(machine[t]);
    }
    out += '\n';
  }
  return out;
}

std::pair<Schedule, std::int64_t> parse_schedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("schedule file is empty");
  std::istringstream header(line);
  std::string tag;
  std::int64_t objective = 0;
  if (!(header >> tag >> objective) || tag != "objective")
    throw std::runtime_error("schedule file must start with \"objective <value>\"");
  Schedule s;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> ids;
    int id = 0;
    while (ls >> id) ids.push_back(id);
    s.machines.push_back(std::move(ids));
  }
  return {std::move(s), objective};
}

}  // namespace pmsched
