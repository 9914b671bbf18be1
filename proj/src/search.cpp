#include "search.h"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "verify.h"

namespace gridsat {

const char* toString(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Pathwidth: return "pathwidth";
    case ProblemKind::Bandwidth: return "bandwidth";
    case ProblemKind::StOrientation: return "st-orientation";
    case ProblemKind::BarVisibility: return "bar-visibility";
    case ProblemKind::BarKVisibility: return "bar-k-visibility";
    case ProblemKind::Boxicity: return "boxicity";
  }
  return "?";
}

const char* toString(SearchStatus status) {
  switch (status) {
    case SearchStatus::Optimal: return "OPTIMAL";
    case SearchStatus::Timeout: return "TIMEOUT";
    case SearchStatus::InfeasibleInRange: return "INFEASIBLE_IN_RANGE";
  }
  return "?";
}

std::pair<int, int> defaultBounds(const Problem& problem) {
  const Graph& g = problem.graph;
  switch (problem.kind) {
    case ProblemKind::Pathwidth:
      return g.m() == 0 ? std::pair{0, 0} : std::pair{1, std::max(1, g.n - 1)};
    case ProblemKind::Bandwidth:
      return g.m() == 0 ? std::pair{0, 0} : std::pair{(g.maxDegree() + 1) / 2, g.n - 1};
    case ProblemKind::StOrientation:
      return g.n <= 2 ? std::pair{2, 2} : std::pair{3, g.n};
    case ProblemKind::BarVisibility:
    case ProblemKind::BarKVisibility:
      return {1, std::max(1, g.n)};
    case ProblemKind::Boxicity:
      return {3, std::max(3, g.n)};
  }
  throw std::logic_error("unknown problem kind");
}

Encoding encodeProblem(const Problem& problem, int param) {
  const Graph& g = problem.graph;
  const ProblemConfig& c = problem.config;
  int rows = c.rows > 0 ? c.rows : g.n;
  switch (problem.kind) {
    case ProblemKind::Pathwidth: return encodePathwidth(g, param, c.encode);
    case ProblemKind::Bandwidth: return encodeBandwidth(g, param, c.encode);
    case ProblemKind::StOrientation: return encodeStOrientation(g, c.s, c.t, param, c.encode);
    case ProblemKind::BarVisibility: return encodeBarVisibility(g, rows, param, c.encode);
    case ProblemKind::BarKVisibility:
      return encodeBarKVisibility(g, rows, param, c.crossBudget, c.encode);
    case ProblemKind::Boxicity: return encodeBoxicity(g, c.dim, param, c.encode);
  }
  throw std::logic_error("unknown problem kind");
}

Solution decodeAndVerify(const Problem& problem, const Encoding& enc, const Assignment& a,
                         int param) {
  const Graph& g = problem.graph;
  Solution solution;
  VerifyResult check;
  switch (problem.kind) {
    case ProblemKind::Pathwidth: {
      Layout1D intervals = decodePathwidth(enc, a);
      check = verifyPathwidth(g, intervals, param);
      solution = std::move(intervals);
      break;
    }
    case ProblemKind::Bandwidth: {
      Positions positions = decodeBandwidth(enc, a);
      check = verifyBandwidth(g, positions, param);
      solution = std::move(positions);
      break;
    }
    case ProblemKind::StOrientation: {
      StOrientation st = decodeStOrientation(g, enc, a);
      check = verifyStOrientation(g, st, problem.config.s, problem.config.t, param);
      solution = std::move(st);
      break;
    }
    case ProblemKind::BarVisibility:
    case ProblemKind::BarKVisibility: {
      Layout2D layout = decodeLayout2d(enc, a);
      check = verifyBarVisibility(g, layout, enc.k);
      solution = std::move(layout);
      break;
    }
    case ProblemKind::Boxicity: {
      BoxLayout layout = decodeBoxicity(enc, a);
      check = verifyBoxicity(g, layout);
      solution = std::move(layout);
      break;
    }
  }
  if (!check)
    throw EncodingError(std::string(toString(problem.kind)) +
                        ": decoded solution fails verification: " + check.reason);
  return solution;
}

SearchOutcome solveMinParameter(const Problem& problem, const SearchOptions& options) {
  auto [lo, hi] = defaultBounds(problem);
  if (options.minParam) lo = *options.minParam;
  if (options.maxParam) hi = *options.maxParam;
  if (lo > hi) throw std::invalid_argument("search: lower bound exceeds upper bound");

  SearchOutcome outcome;
  outcome.lower = lo;
  outcome.upper = hi;
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  double limit = options.timeLimitSeconds;

  for (int param = lo; param <= hi; param++) {
    double remaining = limit < 0 ? 0.0 : limit - elapsed();
    if (limit >= 0 && remaining <= 0) {
      outcome.status = SearchStatus::Timeout;
      break;
    }
    double iterStart = elapsed();
    Encoding enc = encodeProblem(problem, param);

    SolveResult result;
    if (options.solver.externalCommand.empty()) {
      SolverOptions solverOptions;
      solverOptions.timeLimitSeconds = remaining;
      solverOptions.seed = options.solver.seed;
      result = solveInternal(enc.builder.formula(), solverOptions);
    } else {
      result = solveExternal(enc.builder.formula(), options.solver.externalCommand, remaining);
    }

    IterationRecord record;
    record.param = param;
    record.status = result.status;
    record.vars = enc.vars();
    record.clauses = enc.clauses();
    record.seconds = elapsed() - iterStart;
    outcome.iterations.push_back(record);

    if (result.status == SolveStatus::Timeout) {
      outcome.status = SearchStatus::Timeout;
      break;
    }
    if (result.status == SolveStatus::Sat) {
      outcome.solution = decodeAndVerify(problem, enc, result.assignment, param);
      outcome.status = SearchStatus::Optimal;
      outcome.optimum = param;
      break;
    }
  }
  outcome.totalSeconds = elapsed();
  return outcome;
}

namespace {

struct WorkItem {
  std::string name;
  Graph graph;
  int s = -1, t = -1;
  bool stEdgeAdded = false;
};

BenchRow runOne(ProblemKind kind, const WorkItem& item, const BenchOptions& options) {
  Problem problem;
  problem.kind = kind;
  problem.graph = item.graph;
  problem.config.s = item.s;
  problem.config.t = item.t;
  problem.config.encode = options.encode;

  SearchOptions search;
  search.minParam = options.minParam;
  search.maxParam = options.maxParam;
  search.timeLimitSeconds = options.perInstanceTimeout;
  search.solver = options.solver;
  SearchOutcome outcome = solveMinParameter(problem, search);

  BenchRow row;
  row.name = item.name;
  row.n = item.graph.n;
  row.m = item.graph.m();
  row.status = outcome.status;
  row.optimum = outcome.optimum;
  row.iterations = (int)outcome.iterations.size();
  row.seconds = outcome.totalSeconds;
  if (!outcome.iterations.empty()) {
    row.vars = outcome.iterations.back().vars;
    row.clauses = outcome.iterations.back().clauses;
  }
  row.seed = options.seed;
  row.s = item.s;
  row.t = item.t;
  row.stEdgeAdded = item.stEdgeAdded;
  return row;
}

}  // namespace

std::vector<BenchRow> runBenchmark(ProblemKind kind, const std::vector<BenchInstance>& instances,
                                   const BenchOptions& options) {
  std::vector<WorkItem> items;
  for (const BenchInstance& instance : instances) {
    if (kind == ProblemKind::StOrientation) {
      Graph g = instance.graph;
      g.name = instance.name;
      for (const Block& block : biconnectedComponents(g)) {
        if (block.graph.n < 3) continue;
        items.push_back({block.graph.name, block.graph});
      }
    } else {
      items.push_back({instance.name, instance.graph});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const WorkItem& a, const WorkItem& b) {
    return a.graph.n + a.graph.m() < b.graph.n + b.graph.m();
  });

  if (kind == ProblemKind::StOrientation) {
    std::mt19937_64 rng(options.seed);
    for (WorkItem& item : items) {
      item.s = (int)(rng() % item.graph.n);
      do {
        item.t = (int)(rng() % item.graph.n);
      } while (item.t == item.s);
      if (!item.graph.hasEdge(item.s, item.t)) {
        auto edges = item.graph.edges;
        edges.push_back({item.s, item.t});
        item.graph = Graph(item.graph.n, std::move(edges), item.graph.name);
        item.stEdgeAdded = true;
      }
    }
  }

  std::vector<std::optional<BenchRow>> slots(items.size());
  std::mutex mutex;
  size_t nextItem = 0;     // next index to hand out
  size_t frontier = 0;     // first slot not yet decided
  int consecutiveTimeouts = 0;
  bool stopped = false;

  auto worker = [&] {
    while (true) {
      size_t mine;
      {
        std::lock_guard lock(mutex);
        if (stopped || nextItem >= items.size()) return;
        mine = nextItem++;
      }
      BenchRow row = runOne(kind, items[mine], options);
      {
        std::lock_guard lock(mutex);
        slots[mine] = std::move(row);
        while (frontier < slots.size() && slots[frontier]) {
          if (slots[frontier]->status == SearchStatus::Timeout) {
            if (++consecutiveTimeouts >= options.earlyStop) stopped = true;
          } else {
            consecutiveTimeouts = 0;
          }
          frontier++;
        }
      }
    }
  };

  int workers = std::max(1, options.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; w++) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();

  std::vector<BenchRow> rows;
  for (auto& slot : slots)
    if (slot) rows.push_back(std::move(*slot));
  return rows;
}

std::string benchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "name,n,m,status,optimum,iterations,seconds,vars,clauses,seed,s,t,st_edge_added\n";
  for (const BenchRow& row : rows) {
    std::string name = row.name;
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      name = quoted + "\"";
    }
    out << name << ',' << row.n << ',' << row.m << ',' << toString(row.status) << ','
        << row.optimum << ',' << row.iterations << ',' << row.seconds << ',' << row.vars << ','
        << row.clauses << ',' << row.seed << ',' << row.s << ',' << row.t << ','
        << (row.stEdgeAdded ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string benchJsonl(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  for (const BenchRow& row : rows) {
    nlohmann::json record = {
        {"name", row.name},       {"n", row.n},
        {"m", row.m},             {"status", toString(row.status)},
        {"optimum", row.optimum}, {"iterations", row.iterations},
        {"seconds", row.seconds}, {"vars", row.vars},
        {"clauses", row.clauses}, {"seed", row.seed},
    };
    if (row.s >= 0) {
      record["s"] = row.s;
      record["t"] = row.t;
      record["st_edge_added"] = row.stEdgeAdded;
    }
    out << record.dump() << '\n';
  }
  return out.str();
}

}  // namespace gridsat
