#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "search.h"
#include "svg.h"

using nlohmann::json;

namespace gridsat {
namespace {

std::string readInput(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    text << in.rdbuf();
  }
  return text.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string baseName(const std::string& path) {
  if (path == "-") return "stdin";
  size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

Graph loadGraph(const std::string& path, const std::string& format) {
  std::string text = readInput(path);
  bool gml = format == "gml";
  if (format == "auto") {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".gml") {
      gml = true;
    } else if (path == "-") {
      gml = text.find("node") != std::string::npos && text.find('[') != std::string::npos;
    }
  }
  return gml ? parseGml(text, baseName(path)) : parseEdgeList(text, baseName(path));
}

ProblemKind kindFromName(const std::string& name) {
  if (name == "pathwidth") return ProblemKind::Pathwidth;
  if (name == "bandwidth") return ProblemKind::Bandwidth;
  if (name == "st-orient") return ProblemKind::StOrientation;
  if (name == "bar-vis") return ProblemKind::BarVisibility;
  if (name == "bar-k-vis") return ProblemKind::BarKVisibility;
  if (name == "boxicity") return ProblemKind::Boxicity;
  throw std::invalid_argument("unknown problem: " + name);
}

bool twoDimensional(ProblemKind kind) {
  return kind == ProblemKind::BarVisibility || kind == ProblemKind::BarKVisibility ||
         kind == ProblemKind::Boxicity;
}

std::pair<int, int> parseGridSpec(const std::string& spec) {
  size_t x = spec.find('x');
  if (x == std::string::npos) throw std::invalid_argument("--grid expects HxW, e.g. 5x7");
  try {
    int h = std::stoi(spec.substr(0, x));
    int w = std::stoi(spec.substr(x + 1));
    if (h < 1 || w < 1) throw std::invalid_argument("");
    return {h, w};
  } catch (const std::exception&) {
    throw std::invalid_argument("--grid expects HxW with positive sizes, e.g. 5x7");
  }
}

json solutionJson(ProblemKind kind, const Solution& solution) {
  switch (kind) {
    case ProblemKind::Pathwidth: {
      json intervals = json::array();
      for (auto [lo, hi] : std::get<Layout1D>(solution)) intervals.push_back({lo, hi});
      return {{"intervals", intervals}};
    }
    case ProblemKind::Bandwidth:
      return {{"positions", std::get<Positions>(solution)}};
    case ProblemKind::StOrientation: {
      const auto& st = std::get<StOrientation>(solution);
      json edges = json::array();
      for (auto [tail, head] : st.directedEdges) edges.push_back({tail, head});
      return {{"levels", st.levels}, {"orientation", edges}};
    }
    case ProblemKind::BarVisibility:
    case ProblemKind::BarKVisibility: {
      const auto& layout = std::get<Layout2D>(solution);
      json vbars = json::array(), ebars = json::array();
      for (const HBar& bar : layout.vertexBars)
        vbars.push_back({{"row", bar.row}, {"colLo", bar.colLo}, {"colHi", bar.colHi}});
      for (const VBar& bar : layout.edgeBars)
        ebars.push_back({{"col", bar.col}, {"rowLo", bar.rowLo}, {"rowHi", bar.rowHi}});
      return {{"rows", layout.rows},
              {"cols", layout.cols},
              {"vertexBars", vbars},
              {"edgeBars", ebars}};
    }
    case ProblemKind::Boxicity: {
      const auto& layout = std::get<BoxLayout>(solution);
      json boxes = json::array();
      for (const GridBox& box : layout.boxes) boxes.push_back({{"lo", box.lo}, {"hi", box.hi}});
      return {{"dim", layout.dim}, {"side", layout.side}, {"boxes", boxes}};
    }
  }
  return {};
}

struct ProblemCmd {
  CLI::App* sub = nullptr;
  ProblemKind kind = ProblemKind::Pathwidth;
  std::string input, format = "auto", solver = "internal", emitCnf, svgPath, gridSpec;
  double timeout = 0.0;
  uint64_t seed = 0;
  int minParam = 0, maxParam = 0, k = 1, s = -1, t = -1, dim = 2;
  bool noSten = false, seqCounters = false, svgGrid = false;
  CLI::Option* timeoutOpt = nullptr;
  CLI::Option* minOpt = nullptr;
  CLI::Option* maxOpt = nullptr;
  CLI::Option* paramOpt = nullptr;
};

void addProblemCommand(CLI::App& app, std::vector<ProblemCmd>& cmds, const std::string& name,
                       const std::string& description) {
  // options bind references to the fields, so the vector must never reallocate
  ProblemCmd& cmd = cmds.emplace_back();
  cmd.kind = kindFromName(name);
  CLI::App* sub = app.add_subcommand(name, description);
  cmd.sub = sub;
  sub->add_option("input", cmd.input, "graph file, or - for stdin")->required();
  sub->add_option("--format", cmd.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "gml"}))
      ->capture_default_str();
  cmd.timeoutOpt = sub->add_option(
      "--timeout", cmd.timeout,
      "time budget in seconds; 0 stops immediately, negative disables the limit");
  sub->add_option("--solver", cmd.solver, "internal, or a command run as: CMD file.cnf")
      ->capture_default_str();
  sub->add_option("--seed", cmd.seed, "random seed for solver tie-breaking and s,t draws");
  cmd.paramOpt = sub->add_option("--param", "test one parameter value instead of sweeping")
                     ->expected(0, 1);
  cmd.minOpt = sub->add_option("--min", cmd.minParam, "sweep lower bound override");
  cmd.maxOpt = sub->add_option("--max", cmd.maxParam, "sweep upper bound override");
  sub->add_flag("--seq-counters", cmd.seqCounters,
                "encode cardinality bounds with sequential counters");
  sub->add_option("--emit-cnf", cmd.emitCnf, "also write the last encoding as DIMACS");
  if (cmd.kind == ProblemKind::StOrientation) {
    sub->add_option("--s", cmd.s, "source vertex (default: seeded random)");
    sub->add_option("--t", cmd.t, "sink vertex (default: seeded random)");
  }
  if (cmd.kind == ProblemKind::BarVisibility || cmd.kind == ProblemKind::BarKVisibility) {
    sub->add_option("--grid", cmd.gridSpec, "grid as HxW; H fixes the height, W the tested width");
    sub->add_flag("--no-sten", cmd.noSten,
                  "drop the optional clauses pinning edge contacts to bar ends");
  }
  if (cmd.kind == ProblemKind::BarKVisibility)
    sub->add_option("--k", cmd.k, "crossing budget per edge")->capture_default_str();
  if (cmd.kind == ProblemKind::Boxicity)
    sub->add_option("--dim", cmd.dim, "box dimension")->capture_default_str();
  if (twoDimensional(cmd.kind)) {
    sub->add_option("--svg", cmd.svgPath, "write the solution as SVG");
    sub->add_flag("--svg-grid", cmd.svgGrid, "draw grid lines in the SVG");
  }
}

int runProblem(const ProblemCmd& cmd) {
  Problem problem;
  problem.kind = cmd.kind;
  problem.graph = loadGraph(cmd.input, cmd.format);
  problem.config.encode.pinEdgeEndpoints = !cmd.noSten;
  problem.config.encode.sequentialCounters = cmd.seqCounters;
  problem.config.crossBudget = cmd.k;
  problem.config.dim = cmd.dim;

  json report;
  report["problem"] = toString(cmd.kind);
  report["graph"] = {{"name", problem.graph.name},
                     {"n", problem.graph.n},
                     {"m", problem.graph.m()}};
  report["solver"] = cmd.solver;
  report["seed"] = cmd.seed;

  json config = json::object();
  if (cmd.kind == ProblemKind::StOrientation) {
    if (problem.graph.n < 2)
      throw std::invalid_argument("orientation needs at least two vertices");
    std::mt19937_64 rng(cmd.seed);
    int s = cmd.s, t = cmd.t;
    if (s < 0) s = (int)(rng() % problem.graph.n);
    if (t < 0)
      do {
        t = (int)(rng() % problem.graph.n);
      } while (t == s);
    bool added = false;
    if (s != t && s >= 0 && s < problem.graph.n && t >= 0 && t < problem.graph.n &&
        !problem.graph.hasEdge(s, t)) {
      auto edges = problem.graph.edges;
      edges.push_back({s, t});
      problem.graph = Graph(problem.graph.n, std::move(edges), problem.graph.name);
      added = true;
    }
    problem.config.s = s;
    problem.config.t = t;
    config["s"] = s;
    config["t"] = t;
    config["stEdgeAdded"] = added;
  }
  int gridWidth = -1;
  if (!cmd.gridSpec.empty()) {
    auto [h, w] = parseGridSpec(cmd.gridSpec);
    problem.config.rows = h;
    gridWidth = w;
  }
  if (cmd.kind == ProblemKind::BarVisibility || cmd.kind == ProblemKind::BarKVisibility)
    config["rows"] = problem.config.rows > 0 ? problem.config.rows : problem.graph.n;
  if (cmd.kind == ProblemKind::BarKVisibility) config["crossBudget"] = cmd.k;
  if (cmd.kind == ProblemKind::Boxicity) config["dim"] = cmd.dim;
  if (!config.empty()) report["config"] = config;

  // a decision query is a one-value sweep
  SearchOptions options;
  bool decision = cmd.paramOpt->count() > 0;
  if (decision) {
    int param;
    if (!cmd.paramOpt->results()[0].empty()) {
      try {
        param = std::stoi(cmd.paramOpt->results()[0]);
      } catch (const std::exception&) {
        throw std::invalid_argument("--param expects an integer");
      }
    } else if (gridWidth > 0) {
      param = gridWidth;
    } else {
      throw std::invalid_argument("--param needs a value (or --grid HxW for bar visibility)");
    }
    options.minParam = options.maxParam = param;
  } else {
    if (cmd.minOpt->count() > 0) options.minParam = cmd.minParam;
    if (cmd.maxOpt->count() > 0) options.maxParam = cmd.maxParam;
  }
  options.timeLimitSeconds =
      cmd.timeoutOpt->count() > 0 ? cmd.timeout : (twoDimensional(cmd.kind) ? 600.0 : 300.0);
  options.solver.seed = cmd.seed;
  if (cmd.solver != "internal") options.solver.externalCommand = cmd.solver;

  SearchOutcome outcome = solveMinParameter(problem, options);

  report["mode"] = decision ? "decision" : "sweep";
  report["bounds"] = {outcome.lower, outcome.upper};
  json iterations = json::array();
  for (const IterationRecord& it : outcome.iterations)
    iterations.push_back({{"param", it.param},
                          {"status", toString(it.status)},
                          {"vars", it.vars},
                          {"clauses", it.clauses},
                          {"seconds", it.seconds}});
  report["iterations"] = iterations;
  report["totalSeconds"] = outcome.totalSeconds;

  int exitCode = 0;
  if (decision) {
    report["param"] = outcome.lower;
    switch (outcome.status) {
      case SearchStatus::Optimal: report["status"] = "SAT"; break;
      case SearchStatus::InfeasibleInRange: report["status"] = "UNSAT"; break;
      case SearchStatus::Timeout: report["status"] = "TIMEOUT"; exitCode = 2; break;
    }
  } else {
    report["status"] = toString(outcome.status);
    if (outcome.status == SearchStatus::Timeout) exitCode = 2;
  }
  report["optimum"] =
      outcome.status == SearchStatus::Optimal ? json(outcome.optimum) : json(nullptr);
  report["solution"] = outcome.status == SearchStatus::Optimal
                           ? solutionJson(cmd.kind, outcome.solution)
                           : json(nullptr);

  if (!cmd.emitCnf.empty()) {
    int param = outcome.iterations.empty() ? outcome.lower : outcome.iterations.back().param;
    writeFile(cmd.emitCnf, toDimacs(encodeProblem(problem, param).builder.formula()));
  }
  if (!cmd.svgPath.empty()) {
    if (outcome.status != SearchStatus::Optimal) {
      std::cerr << "no solution found; skipping " << cmd.svgPath << "\n";
    } else if (cmd.kind == ProblemKind::Boxicity) {
      writeFile(cmd.svgPath, boxLayoutToSvg(std::get<BoxLayout>(outcome.solution), cmd.svgGrid));
    } else {
      writeFile(cmd.svgPath, layout2dToSvg(std::get<Layout2D>(outcome.solution), cmd.svgGrid));
    }
  }

  std::cout << report.dump(2) << "\n";
  return exitCode;
}

struct SolveCnfCmd {
  CLI::App* sub = nullptr;
  std::string input, solver = "internal";
  double timeout = -1.0;
  uint64_t seed = 0;
  bool raw = false;
};

int runSolveCnf(const SolveCnfCmd& cmd) {
  CnfFormula formula = parseDimacs(readInput(cmd.input));
  SolveResult result;
  if (cmd.timeout == 0.0) {
    result.status = SolveStatus::Timeout;
  } else if (cmd.solver == "internal") {
    SolverOptions options;
    options.timeLimitSeconds = cmd.timeout < 0 ? 0.0 : cmd.timeout;
    options.seed = cmd.seed;
    result = solveInternal(formula, options);
  } else {
    result = solveExternal(formula, cmd.solver, cmd.timeout < 0 ? 0.0 : cmd.timeout);
  }

  if (cmd.raw) {
    // conventional solver output, so this binary works as an external solver
    switch (result.status) {
      case SolveStatus::Sat: {
        std::cout << "s SATISFIABLE\nv";
        for (int v = 1; v <= formula.numVars; v++)
          std::cout << ' ' << (result.assignment[v] ? v : -v);
        std::cout << " 0\n";
        break;
      }
      case SolveStatus::Unsat: std::cout << "s UNSATISFIABLE\n"; break;
      case SolveStatus::Timeout: std::cout << "s UNKNOWN\n"; break;
    }
  } else {
    json report = {{"status", toString(result.status)},
                   {"vars", formula.numVars},
                   {"clauses", formula.clauseCount()},
                   {"seconds", result.stats.seconds},
                   {"conflicts", result.stats.conflicts}};
    if (result.status == SolveStatus::Sat) {
      std::vector<int> model;
      for (int v = 1; v <= formula.numVars; v++) model.push_back(result.assignment[v] ? v : -v);
      report["model"] = model;
    } else {
      report["model"] = nullptr;
    }
    std::cout << report.dump(2) << "\n";
  }
  return result.status == SolveStatus::Timeout ? 2 : 0;
}

struct BenchCmd {
  CLI::App* sub = nullptr;
  std::string problem;
  std::vector<std::string> inputs;
  std::string format = "auto", solver = "internal", csvPath, jsonlPath;
  double timeout = 0.0;
  uint64_t seed = 1;
  int earlyStop = 400, workers = 1;
  int minParam = 0, maxParam = 0;
  bool seqCounters = false;
  CLI::Option* timeoutOpt = nullptr;
  CLI::Option* minOpt = nullptr;
  CLI::Option* maxOpt = nullptr;
};

int runBench(const BenchCmd& cmd) {
  ProblemKind kind = kindFromName(cmd.problem);
  std::vector<BenchInstance> instances;
  for (const std::string& path : cmd.inputs)
    instances.push_back({baseName(path), loadGraph(path, cmd.format)});

  BenchOptions options;
  options.perInstanceTimeout =
      cmd.timeoutOpt->count() > 0 ? cmd.timeout : (twoDimensional(kind) ? 600.0 : 300.0);
  options.earlyStop = cmd.earlyStop;
  options.workers = cmd.workers;
  options.seed = cmd.seed;
  if (cmd.minOpt->count() > 0) options.minParam = cmd.minParam;
  if (cmd.maxOpt->count() > 0) options.maxParam = cmd.maxParam;
  if (cmd.solver != "internal") options.solver.externalCommand = cmd.solver;
  options.solver.seed = cmd.seed;
  options.encode.sequentialCounters = cmd.seqCounters;

  std::vector<BenchRow> rows = runBenchmark(kind, instances, options);
  if (!cmd.csvPath.empty()) writeFile(cmd.csvPath, benchCsv(rows));
  if (!cmd.jsonlPath.empty()) writeFile(cmd.jsonlPath, benchJsonl(rows));
  if (cmd.csvPath.empty() && cmd.jsonlPath.empty()) std::cout << benchCsv(rows);

  int solved = 0;
  for (const BenchRow& row : rows)
    if (row.status == SearchStatus::Optimal) solved++;
  std::cerr << "bench: " << solved << "/" << rows.size() << " solved\n";
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"SAT toolkit for grid-layout graph problems"};
  app.require_subcommand(1);

  std::vector<ProblemCmd> problems;
  problems.reserve(6);
  addProblemCommand(app, problems, "pathwidth", "minimum interval-representation width");
  addProblemCommand(app, problems, "bandwidth", "minimum adjacency stretch over orderings");
  addProblemCommand(app, problems, "st-orient", "fewest levels of an st-orientation");
  addProblemCommand(app, problems, "bar-vis", "bar visibility layout, minimum width");
  addProblemCommand(app, problems, "bar-k-vis", "bar k-visibility layout, minimum width");
  addProblemCommand(app, problems, "boxicity", "box intersection representation, minimum side");

  SolveCnfCmd solveCmd;
  solveCmd.sub = app.add_subcommand("solve-cnf", "solve a DIMACS CNF file");
  solveCmd.sub->add_option("input", solveCmd.input, "CNF file, or - for stdin")->required();
  solveCmd.sub->add_option("--solver", solveCmd.solver, "internal, or an external command")
      ->capture_default_str();
  solveCmd.sub->add_option("--timeout", solveCmd.timeout,
                           "seconds; 0 stops immediately, negative disables the limit");
  solveCmd.sub->add_option("--seed", solveCmd.seed, "random seed");
  solveCmd.sub->add_flag("--raw", solveCmd.raw)->group("");  // conventional s/v output

  BenchCmd benchCmd;
  benchCmd.sub = app.add_subcommand("bench", "sweep a corpus of graphs and tabulate results");
  benchCmd.sub->add_option("problem", benchCmd.problem, "which problem to sweep")
      ->required()
      ->check(CLI::IsMember(
          {"pathwidth", "bandwidth", "st-orient", "bar-vis", "bar-k-vis", "boxicity"}));
  benchCmd.sub->add_option("inputs", benchCmd.inputs, "graph files")->required();
  benchCmd.sub->add_option("--format", benchCmd.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "gml"}))
      ->capture_default_str();
  benchCmd.timeoutOpt = benchCmd.sub->add_option(
      "--timeout", benchCmd.timeout, "per-instance seconds (default 300, 600 for 2-d problems)");
  benchCmd.sub->add_option("--early-stop", benchCmd.earlyStop,
                           "stop after this many consecutive timeouts")
      ->capture_default_str();
  benchCmd.sub->add_option("--workers", benchCmd.workers, "concurrent instances")
      ->capture_default_str();
  benchCmd.sub->add_option("--seed", benchCmd.seed, "seed for the s,t draws")
      ->capture_default_str();
  benchCmd.minOpt = benchCmd.sub->add_option("--min", benchCmd.minParam, "sweep lower bound");
  benchCmd.maxOpt = benchCmd.sub->add_option("--max", benchCmd.maxParam, "sweep upper bound");
  benchCmd.sub->add_option("--solver", benchCmd.solver, "internal, or an external command")
      ->capture_default_str();
  benchCmd.sub->add_flag("--seq-counters", benchCmd.seqCounters,
                         "encode cardinality bounds with sequential counters");
  benchCmd.sub->add_option("--csv", benchCmd.csvPath, "write results as CSV");
  benchCmd.sub->add_option("--jsonl", benchCmd.jsonlPath, "write results as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (const ProblemCmd& cmd : problems)
    if (cmd.sub->parsed()) return runProblem(cmd);
  if (solveCmd.sub->parsed()) return runSolveCnf(solveCmd);
  if (benchCmd.sub->parsed()) return runBench(benchCmd);
  return 1;
}

}  // namespace
}  // namespace gridsat

int main(int argc, char** argv) {
  try {
    return gridsat::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
