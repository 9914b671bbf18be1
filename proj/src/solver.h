#pragma once

#include <cstdint>
#include <string>

#include "cnf.h"

namespace gridsat {

enum class SolveStatus { Sat, Unsat, Timeout };
const char* toString(SolveStatus status);

struct SolverStats {
  int64_t decisions = 0;
  int64_t conflicts = 0;
  int64_t propagations = 0;
  double seconds = 0.0;
};

struct SolverOptions {
  double timeLimitSeconds = 0.0;  // 0 means no limit
  uint64_t seed = 0;
  double varDecay = 0.95;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  Assignment assignment;  // total, 1-based, only meaningful on Sat
  SolverStats stats;
};

/// Conflict-driven solver; deterministic for a fixed seed. A Sat result is
/// checked against every clause before it is returned.
SolveResult solveInternal(const CnfFormula& formula, const SolverOptions& options = {});

/// Runs `command <cnf-file>` with a wall-clock limit, parses SAT/UNSAT plus a
/// model line, and re-verifies any claimed model against the formula.
SolveResult solveExternal(const CnfFormula& formula, const std::string& command,
                          double timeLimitSeconds = 0.0);

}  // namespace gridsat
