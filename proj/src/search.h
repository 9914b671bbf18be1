#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "encodings.h"
#include "graph.h"
#include "solver.h"

namespace gridsat {

enum class ProblemKind {
  Pathwidth,
  Bandwidth,
  StOrientation,
  BarVisibility,
  BarKVisibility,
  Boxicity,
};

const char* toString(ProblemKind kind);

/// The decoded witness for whichever problem was solved.
using Solution =
    std::variant<std::monostate, Layout1D, Positions, StOrientation, Layout2D, BoxLayout>;

struct SolverConfig {
  std::string externalCommand;  // empty: use the built-in solver
  uint64_t seed = 0;
};

/// Fixed inputs a problem needs besides the graph and the swept parameter.
struct ProblemConfig {
  int s = -1, t = -1;  // orientation endpoints
  int rows = -1;       // visibility: grid height, -1 means n
  int crossBudget = 1; // bar-k visibility
  int dim = 2;         // boxicity
  EncodeOptions encode;
};

struct Problem {
  ProblemKind kind = ProblemKind::Pathwidth;
  Graph graph;
  ProblemConfig config;
};

/// Inclusive sweep range used when the caller overrides neither bound.
std::pair<int, int> defaultBounds(const Problem& problem);

/// Builds the CNF for one decision query at the given parameter value.
Encoding encodeProblem(const Problem& problem, int param);

/// Decodes a model and checks it with the independent verifier; a rejected
/// witness is an encoder bug and raises EncodingError.
Solution decodeAndVerify(const Problem& problem, const Encoding& enc, const Assignment& a,
                         int param);

enum class SearchStatus { Optimal, Timeout, InfeasibleInRange };
const char* toString(SearchStatus status);

struct IterationRecord {
  int param = 0;
  SolveStatus status = SolveStatus::Timeout;
  long long vars = 0, clauses = 0;
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::InfeasibleInRange;
  int lower = 0, upper = -1;  // the range actually swept
  int optimum = -1;           // meaningful when status == Optimal
  Solution solution;
  std::vector<IterationRecord> iterations;
  double totalSeconds = 0.0;
};

struct SearchOptions {
  std::optional<int> minParam, maxParam;  // default: defaultBounds(problem)
  double timeLimitSeconds = -1.0;         // whole-search budget; < 0 means none
  SolverConfig solver;
};

/// Scans the parameter upward from the lower bound; the first satisfiable
/// value, with its verified witness, is the optimum. Each iteration may use
/// the entire remaining budget.
SearchOutcome solveMinParameter(const Problem& problem, const SearchOptions& options = {});

struct BenchInstance {
  std::string name;
  Graph graph;
};

struct BenchOptions {
  double perInstanceTimeout = 300.0;  // < 0 means none
  int earlyStop = 400;                // consecutive timeouts before giving up
  int workers = 1;
  uint64_t seed = 1;  // draws s,t for orientation instances
  std::optional<int> minParam, maxParam;
  SolverConfig solver;
  EncodeOptions encode;
};

struct BenchRow {
  std::string name;
  int n = 0, m = 0;
  SearchStatus status = SearchStatus::Timeout;
  int optimum = -1;
  int iterations = 0;
  double seconds = 0.0;
  long long vars = 0, clauses = 0;  // last iteration
  uint64_t seed = 0;
  int s = -1, t = -1;      // orientation instances only
  bool stEdgeAdded = false;
};

/// Sweeps every instance in ascending n+m order, stopping early after
/// earlyStop consecutive timeouts. Orientation runs split each instance into
/// biconnected blocks with at least 3 vertices, draw a seeded s,t pair per
/// block, and insert the edge st when missing.
std::vector<BenchRow> runBenchmark(ProblemKind kind, const std::vector<BenchInstance>& instances,
                                   const BenchOptions& options);

std::string benchCsv(const std::vector<BenchRow>& rows);
std::string benchJsonl(const std::vector<BenchRow>& rows);

}  // namespace gridsat
