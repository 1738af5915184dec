#include "bdhd/flow_solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bdhd/errors.hpp"
#include "bdhd/geometry.hpp"
#include "bdhd/verify.hpp"

namespace bdhd {

namespace {

std::string edge_var(const FlowEdge& e) {
  return "e_" + std::to_string(e.from) + "_" + std::to_string(e.to) + "_" +
         std::to_string(e.defender + 1);
}

std::string event_var(int i) { return "x_" + std::to_string(i); }

// in/out edge indices keyed by (node, defender); node 0 = source.
struct Adjacency {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> in;   // (n+1) x k, row 0 unused
  std::vector<std::vector<int>> out;  // (n+1) x k

  explicit Adjacency(const FlowModel& m) : n(m.n()), k(m.k()) {
    const std::size_t rows =
        static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k);
    in.resize(rows);
    out.resize(rows);
    for (std::size_t idx = 0; idx < m.edges.size(); ++idx) {
      const FlowEdge& e = m.edges[idx];
      out[at(e.from, e.defender)].push_back(static_cast<int>(idx));
      in[at(e.to, e.defender)].push_back(static_cast<int>(idx));
    }
  }

  std::size_t at(int node, int d) const {
    return static_cast<std::size_t>(node) * static_cast<std::size_t>(k) +
           static_cast<std::size_t>(d);
  }
};

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", s);
  return buf;
}

}  // namespace

FlowModel build_flow_model(const Instance& inst,
                           const ReachabilityRelation& rel) {
  FlowModel model{inst, rel, {}};
  const int n = inst.n();
  const int k = inst.k();
  for (int a = 0; a <= n; ++a) {
    for (int d = 0; d < k; ++d) {
      for (int b : rel.next(a, d)) {
        if (b > a) model.edges.push_back({a, b, d});
      }
    }
  }
  std::sort(model.edges.begin(), model.edges.end(),
            [](const FlowEdge& x, const FlowEdge& y) {
              if (x.from != y.from) return x.from < y.from;
              if (x.to != y.to) return x.to < y.to;
              return x.defender < y.defender;
            });
  return model;
}

namespace {

// DFS over events in time order; each node either hands the event to a
// defender that can make it or drops it. The bound adds one for every
// not-yet-considered event some defender could still reach directly, which
// never undercounts: any interception deeper in the tree implies direct
// reachability via the triangle inequality.
class BnbSearch {
 public:
  BnbSearch(const FlowModel& model, double time_limit_s)
      : inst_(model.inst),
        n_(model.n()),
        k_(model.k()),
        last_(model.k(), 0),
        cur_assign_(model.n() + 1, -1),
        best_assign_(model.n() + 1, -1) {
    use_matrix_ = static_cast<std::size_t>(n_) * n_ <= (std::size_t{1} << 22);
    if (use_matrix_) {
      dist_ee_.resize(static_cast<std::size_t>(n_) * n_);
      for (int a = 1; a <= n_; ++a) {
        dist_ee_[idx(a, a)] = 0.0;
        for (int b = a + 1; b <= n_; ++b) {
          const double d = geodesic_distance(inst_.space, inst_.events[a - 1].loc,
                                             inst_.events[b - 1].loc);
          dist_ee_[idx(a, b)] = d;
          dist_ee_[idx(b, a)] = d;
        }
      }
    }
    dist_0e_.resize(static_cast<std::size_t>(k_) * n_);
    for (int d = 0; d < k_; ++d) {
      for (int b = 1; b <= n_; ++b) {
        dist_0e_[static_cast<std::size_t>(d) * n_ + (b - 1)] = geodesic_distance(
            inst_.space, inst_.defenders[d].initial_loc, inst_.events[b - 1].loc);
      }
    }
    if (time_limit_s < 1e9) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_limit_s));
      has_deadline_ = true;
    }
  }

  FlowSolveResult run() {
    dfs(1);
    FlowSolveResult out;
    out.status = timed_out_ ? SolveStatus::FeasibleTimeout : SolveStatus::Optimal;
    out.plan = InterceptionPlan::empty(k_);
    if (best_count_ > 0) {
      out.plan.intercepted_count = best_count_;
      for (int e = 1; e <= n_; ++e) {
        if (best_assign_[e] != -1) out.plan.assignments[best_assign_[e]].push_back(e);
      }
    }
    return out;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
  }

  bool reachable(int d, int from, int b) const {
    const AttackEvent& ev = inst_.events[b - 1];
    double dist;
    double dt;
    if (from == 0) {
      dist = dist_0e_[static_cast<std::size_t>(d) * n_ + (b - 1)];
      dt = ev.t;
    } else {
      dist = use_matrix_ ? dist_ee_[idx(from, b)]
                         : geodesic_distance(inst_.space,
                                             inst_.events[from - 1].loc, ev.loc);
      dt = ev.t - inst_.events[from - 1].t;
    }
    return dist <= inst_.defenders[d].speed * dt + kEps;
  }

  int future_bound(int e) const {
    int cnt = 0;
    for (int b = e; b <= n_; ++b) {
      for (int d = 0; d < k_; ++d) {
        if (reachable(d, last_[d], b)) {
          ++cnt;
          break;
        }
      }
    }
    return cnt;
  }

  void dfs(int e) {
    if (timed_out_) return;
    if (has_deadline_ && (++nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (e > n_) {
      if (cur_count_ > best_count_) {
        best_count_ = cur_count_;
        best_assign_ = cur_assign_;
      }
      return;
    }
    if (cur_count_ + future_bound(e) <= best_count_) return;
    for (int d = 0; d < k_; ++d) {
      if (!reachable(d, last_[d], e)) continue;
      const int saved = last_[d];
      last_[d] = e;
      cur_assign_[e] = d;
      ++cur_count_;
      dfs(e + 1);
      last_[d] = saved;
      cur_assign_[e] = -1;
      --cur_count_;
      if (timed_out_) return;
    }
    dfs(e + 1);
  }

  const Instance& inst_;
  int n_;
  int k_;
  std::vector<int> last_;
  std::vector<int> cur_assign_;
  std::vector<int> best_assign_;
  int cur_count_ = 0;
  int best_count_ = -1;
  std::vector<double> dist_ee_;
  std::vector<double> dist_0e_;
  bool use_matrix_ = false;
  std::uint64_t nodes_ = 0;
  bool has_deadline_ = false;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

FlowSolveResult solve_branch_and_bound(const FlowModel& model,
                                       double time_limit_s) {
  BnbSearch search(model, time_limit_s);
  return search.run();
}

std::string lp_text(const FlowModel& model) {
  const int n = model.n();
  const int k = model.k();
  const Adjacency adj(model);
  std::ostringstream os;

  os << "Maximize\n obj:";
  for (int i = 1; i <= n; ++i) {
    os << (i == 1 ? " " : " + ") << event_var(i);
  }
  os << "\nSubject To\n";

  for (int i = 1; i <= n; ++i) {
    os << " intercept_" << i << ":";
    bool first = true;
    for (int d = 0; d < k; ++d) {
      for (int idx : adj.in[adj.at(i, d)]) {
        os << (first ? " " : " + ") << edge_var(model.edges[idx]);
        first = false;
      }
    }
    os << " - " << event_var(i) << " >= 0\n";
  }
  for (int i = 1; i <= n; ++i) {
    for (int d = 0; d < k; ++d) {
      const auto& outs = adj.out[adj.at(i, d)];
      const auto& ins = adj.in[adj.at(i, d)];
      if (outs.empty() && ins.empty()) continue;
      os << " flow_" << i << "_" << (d + 1) << ":";
      bool first = true;
      for (int idx : outs) {
        os << (first ? " " : " + ") << edge_var(model.edges[idx]);
        first = false;
      }
      for (int idx : ins) {
        os << " - " << edge_var(model.edges[idx]);
        first = false;
      }
      os << " <= 0\n";
    }
  }
  for (int d = 0; d < k; ++d) {
    const auto& outs = adj.out[adj.at(0, d)];
    if (outs.empty()) continue;
    os << " source_" << (d + 1) << ":";
    bool first = true;
    for (int idx : outs) {
      os << (first ? " " : " + ") << edge_var(model.edges[idx]);
      first = false;
    }
    os << " <= 1\n";
  }

  os << "Binary\n";
  for (const FlowEdge& e : model.edges) os << " " << edge_var(e) << "\n";
  for (int i = 1; i <= n; ++i) os << " " << event_var(i) << "\n";
  os << "End\n";
  return os.str();
}

void export_lp(const FlowModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << lp_text(model);
  if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

FlowValues plan_to_flow_values(const FlowModel& model,
                               const InterceptionPlan& plan) {
  FlowValues values;
  values.edge_value.assign(model.edges.size(), 0);
  values.intercept_value.assign(static_cast<std::size_t>(model.n()), 0);
  auto edge_index = [&](int from, int to, int d) -> int {
    const FlowEdge key{from, to, d};
    auto it = std::lower_bound(model.edges.begin(), model.edges.end(), key,
                               [](const FlowEdge& x, const FlowEdge& y) {
                                 if (x.from != y.from) return x.from < y.from;
                                 if (x.to != y.to) return x.to < y.to;
                                 return x.defender < y.defender;
                               });
    if (it == model.edges.end() || !(*it == key)) {
      throw InvalidPlanError("plan hop " + std::to_string(from) + " -> " +
                             std::to_string(to) + " (defender " +
                             std::to_string(d + 1) +
                             ") has no arc in the model");
    }
    return static_cast<int>(it - model.edges.begin());
  };
  for (int d = 0; d < static_cast<int>(plan.assignments.size()); ++d) {
    int prev = 0;
    for (int e : plan.assignments[d]) {
      values.edge_value[edge_index(prev, e, d)] = 1;
      values.intercept_value[e - 1] = 1;
      prev = e;
    }
  }
  return values;
}

std::vector<std::string> flow_violations(const FlowModel& model,
                                         const FlowValues& values) {
  assert(values.edge_value.size() == model.edges.size());
  assert(values.intercept_value.size() == static_cast<std::size_t>(model.n()));
  const Adjacency adj(model);
  std::vector<std::string> bad;
  auto sum = [&](const std::vector<int>& idxs) {
    int s = 0;
    for (int i : idxs) s += values.edge_value[i];
    return s;
  };
  for (int i = 1; i <= model.n(); ++i) {
    int in = 0;
    for (int d = 0; d < model.k(); ++d) in += sum(adj.in[adj.at(i, d)]);
    if (in < values.intercept_value[i - 1]) {
      bad.push_back("intercept_" + std::to_string(i));
    }
  }
  for (int i = 1; i <= model.n(); ++i) {
    for (int d = 0; d < model.k(); ++d) {
      if (sum(adj.out[adj.at(i, d)]) > sum(adj.in[adj.at(i, d)])) {
        bad.push_back("flow_" + std::to_string(i) + "_" + std::to_string(d + 1));
      }
    }
  }
  for (int d = 0; d < model.k(); ++d) {
    if (sum(adj.out[adj.at(0, d)]) > 1) {
      bad.push_back("source_" + std::to_string(d + 1));
    }
  }
  return bad;
}

namespace {

// Solution files are "name value" per line; blank lines and #-comments are
// ignored, omitted variables default to zero.
FlowValues parse_solution_file(const FlowModel& model, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UnparsableSolutionError("no readable solution file at " + path);
  }
  FlowValues values;
  values.edge_value.assign(model.edges.size(), 0);
  values.intercept_value.assign(static_cast<std::size_t>(model.n()), 0);

  auto to_binary = [&](double v, const std::string& name) -> int {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-4 || (r != 0.0 && r != 1.0)) {
      throw UnparsableSolutionError("variable " + name +
                                    " has non-binary value " +
                                    std::to_string(v));
    }
    return static_cast<int>(r);
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#') continue;
    double value = 0.0;
    if (!(ls >> value)) {
      throw UnparsableSolutionError("line " + std::to_string(lineno) +
                                    ": expected 'name value', got '" + line +
                                    "'");
    }
    if (name.rfind("x_", 0) == 0) {
      char* end = nullptr;
      const long i = std::strtol(name.c_str() + 2, &end, 10);
      if (*end != '\0' || i < 1 || i > model.n()) {
        throw UnparsableSolutionError("unknown variable " + name);
      }
      values.intercept_value[i - 1] = to_binary(value, name);
    } else if (name.rfind("e_", 0) == 0) {
      int from = -1, to = -1, d = -1;
      if (std::sscanf(name.c_str(), "e_%d_%d_%d", &from, &to, &d) != 3) {
        throw UnparsableSolutionError("unknown variable " + name);
      }
      const FlowEdge key{from, to, d - 1};
      auto it = std::lower_bound(model.edges.begin(), model.edges.end(), key,
                                 [](const FlowEdge& x, const FlowEdge& y) {
                                   if (x.from != y.from) return x.from < y.from;
                                   if (x.to != y.to) return x.to < y.to;
                                   return x.defender < y.defender;
                                 });
      if (it == model.edges.end() || !(*it == key)) {
        throw UnparsableSolutionError("unknown variable " + name);
      }
      values.edge_value[it - model.edges.begin()] = to_binary(value, name);
    } else {
      throw UnparsableSolutionError("unknown variable " + name);
    }
  }
  return values;
}

}  // namespace

FlowSolveResult solve_external(const FlowModel& model,
                               const std::string& lp_path,
                               const std::string& solver_command,
                               double time_limit_s) {
  if (solver_command.empty()) {
    throw SolverNotFoundError("external solver command is empty");
  }
  export_lp(model, lp_path);
  const std::string sol_path = lp_path + ".sol";
  std::remove(sol_path.c_str());  // never trust a stale solution file
  const std::string tl = format_seconds(time_limit_s);

  const pid_t pid = fork();
  if (pid < 0) throw SolverNotFoundError("fork failed");
  if (pid == 0) {
    const char* argv[] = {solver_command.c_str(), lp_path.c_str(),
                          "--time-limit",         tl.c_str(),
                          "--sol",                sol_path.c_str(),
                          nullptr};
    execvp(argv[0], const_cast<char* const*>(argv));
    _exit(127);
  }
  int status = 0;
  if (waitpid(pid, &status, 0) < 0) {
    throw SolverNotFoundError("waitpid failed");
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) == 127) {
    throw SolverNotFoundError("cannot run external solver '" + solver_command +
                              "'");
  }
  if (WEXITSTATUS(status) != 0) {
    throw UnparsableSolutionError("external solver exited with code " +
                                  std::to_string(WEXITSTATUS(status)));
  }

  const FlowValues values = parse_solution_file(model, sol_path);
  const auto bad = flow_violations(model, values);
  if (!bad.empty()) {
    std::string msg = "solution violates";
    for (const auto& b : bad) msg += " " + b;
    throw InvalidPlanError(msg);
  }

  // Per-defender chains all start at the source (anything else would have
  // tripped a flow constraint above).
  const Adjacency adj(model);
  const int n = model.n();
  const int k = model.k();
  std::vector<int> claimed(static_cast<std::size_t>(n) + 1, 0);
  FlowSolveResult out;
  out.status = SolveStatus::External;
  out.plan = InterceptionPlan::empty(k);
  for (int d = 0; d < k; ++d) {
    int node = 0;
    while (true) {
      int next_node = -1;
      for (int idx : adj.out[adj.at(node, d)]) {
        if (values.edge_value[idx]) {
          next_node = model.edges[idx].to;
          break;
        }
      }
      if (next_node == -1) break;
      if (values.intercept_value[next_node - 1] && !claimed[next_node]) {
        claimed[next_node] = 1;
        out.plan.assignments[d].push_back(next_node);
        ++out.plan.intercepted_count;
      }
      node = next_node;
    }
  }
  int wanted = 0;
  for (int i = 1; i <= n; ++i) wanted += values.intercept_value[i - 1];
  if (wanted != out.plan.intercepted_count) {
    throw InvalidPlanError("solution claims " + std::to_string(wanted) +
                           " interceptions but its paths serve " +
                           std::to_string(out.plan.intercepted_count));
  }
  const CheckReport audit = check_plan(model.inst, out.plan);
  if (!audit.valid) {
    std::string msg = "reconstructed plan fails audit:";
    for (const auto& v : audit.violations) msg += " [" + v.detail + "]";
    throw InvalidPlanError(msg);
  }
  return out;
}

}  // namespace bdhd
