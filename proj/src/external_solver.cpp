#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "solver.h"

namespace gridsat {

namespace {

std::filesystem::path tempPath(const char* suffix) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path();
  std::ostringstream name;
  name << "gridsat-" << getpid() << "-" << counter++ << suffix;
  return dir / name.str();
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* suffix) : path(tempPath(suffix)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

// Runs `/bin/sh -c command` in its own process group; kills the group on timeout.
// Returns true if the process finished on its own.
bool runWithTimeout(const std::string& command, double timeLimitSeconds, int& exitStatus) {
  pid_t pid = fork();
  if (pid < 0) throw ExternalSolverError("external solver: fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
    _exit(127);
  }
  setpgid(pid, pid);
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeLimitSeconds));
  bool unlimited = timeLimitSeconds <= 0.0;
  while (true) {
    int status = 0;
    pid_t done = waitpid(pid, &status, unlimited ? 0 : WNOHANG);
    if (done == pid) {
      exitStatus = status;
      return true;
    }
    if (done < 0) throw ExternalSolverError("external solver: waitpid failed");
    if (!unlimited && std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      return false;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
}

}  // namespace

SolveResult solveExternal(const CnfFormula& formula, const std::string& command,
                          double timeLimitSeconds) {
  auto start = std::chrono::steady_clock::now();
  TempFile cnf(".cnf");
  TempFile out(".out");
  {
    std::ofstream f(cnf.path);
    f << toDimacs(formula);
    if (!f) throw ExternalSolverError("external solver: cannot write " + cnf.path.string());
  }

  std::string full = command + " " + cnf.path.string() + " > " + out.path.string() + " 2>/dev/null";
  int exitStatus = 0;
  bool finished = runWithTimeout(full, timeLimitSeconds, exitStatus);

  SolveResult result;
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!finished) {
    result.status = SolveStatus::Timeout;
    return result;
  }

  std::ifstream in(out.path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  // Accept both bare and competition-style ("s ..."/"v ...") result lines.
  bool sawSat = false, sawUnsat = false;
  std::vector<long long> model;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token == "s" || token == "v") continue;
      if (token == "c") break;
      if (token == "UNSATISFIABLE" || token == "UNSAT") {
        sawUnsat = true;
      } else if (token == "SATISFIABLE" || token == "SAT") {
        sawSat = true;
      } else {
        long long lit;
        try {
          size_t used = 0;
          lit = std::stoll(token, &used);
          if (used != token.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ExternalSolverError("external solver: unexpected output token \"" + token + "\"");
        }
        if (sawSat && lit != 0) model.push_back(lit);
      }
    }
  }

  if (sawSat == sawUnsat) {
    std::ostringstream msg;
    msg << "external solver: no result line in output";
    if (exitStatus != 0) msg << " (exit status " << exitStatus << ")";
    throw ExternalSolverError(msg.str());
  }
  if (sawUnsat) {
    result.status = SolveStatus::Unsat;
    return result;
  }

  result.assignment.assign(formula.numVars + 1, 0);
  for (long long lit : model) {
    long long v = lit > 0 ? lit : -lit;
    if (v < 1 || v > formula.numVars)
      throw ExternalSolverError("external solver: model literal " + std::to_string(lit) +
                                " out of range");
    result.assignment[v] = lit > 0 ? 1 : 0;
  }
  if (!formula.satisfied(result.assignment))
    throw ExternalSolverError("external solver: claimed model fails verification");
  result.status = SolveStatus::Sat;
  return result;
}

}  // namespace gridsat
