#include "solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace gridsat {

const char* toString(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

// Internal literal encoding: variable v in 0..n-1, literal 2v (positive) or 2v+1.
inline int litOf(int dimacs) {
  int v = dimacs > 0 ? dimacs : -dimacs;
  return 2 * (v - 1) + (dimacs < 0 ? 1 : 0);
}
inline int neg(int lit) { return lit ^ 1; }
inline int varOf(int lit) { return lit >> 1; }

struct Clause {
  std::vector<int> lits;
  double activity = 0.0;
  bool learnt = false;
  bool deleted = false;
};

struct Watch {
  int clause;
  int blocker;
};

// Max-heap over variable activities with index lookup; ties break on the
// smaller variable so runs are reproducible.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& activity) : activity_(activity) {}

  void grow(int n) { pos_.resize(n, -1); }

  bool contains(int v) const { return pos_[v] >= 0; }

  void insert(int v) {
    if (contains(v)) return;
    pos_[v] = (int)heap_.size();
    heap_.push_back(v);
    up(pos_[v]);
  }

  int pop() {
    int top = heap_[0];
    swapAt(0, (int)heap_.size() - 1);
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

  void bumped(int v) {
    if (contains(v)) up(pos_[v]);
  }

  bool empty() const { return heap_.empty(); }

 private:
  bool before(int a, int b) const {
    if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
    return a < b;
  }
  void swapAt(int i, int j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }
  void up(int i) {
    while (i > 0 && before(heap_[i], heap_[(i - 1) / 2])) {
      swapAt(i, (i - 1) / 2);
      i = (i - 1) / 2;
    }
  }
  void down(int i) {
    while (true) {
      int l = 2 * i + 1, r = 2 * i + 2, best = i;
      if (l < (int)heap_.size() && before(heap_[l], heap_[best])) best = l;
      if (r < (int)heap_.size() && before(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      swapAt(i, best);
      i = best;
    }
  }

  const std::vector<double>& activity_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

int64_t luby(int64_t i) {
  // Luby restart sequence: 1 1 2 1 1 2 4 ...
  int64_t k = 1;
  while ((((int64_t)1 << k) - 1) < i + 1) k++;
  while ((((int64_t)1 << k) - 1) != i + 1) {
    i -= ((int64_t)1 << (k - 1)) - 1;
    k = 1;
    while ((((int64_t)1 << k) - 1) < i + 1) k++;
  }
  return (int64_t)1 << (k - 1);
}

class Cdcl {
 public:
  Cdcl(const CnfFormula& formula, const SolverOptions& options)
      : formula_(formula), options_(options), heap_(activity_) {}

  SolveResult run() {
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.status = solve();
    result.stats = stats_;
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.status == SolveStatus::Sat) {
      result.assignment.assign(n_ + 1, 0);
      for (int v = 0; v < n_; v++) result.assignment[v + 1] = assigns_[v] > 0 ? 1 : 0;
      if (!formula_.satisfied(result.assignment))
        throw EncodingError("solver produced a model that fails its own formula");
    }
    return result;
  }

 private:
  SolveStatus solve() {
    n_ = formula_.numVars;
    assigns_.assign(n_, 0);
    level_.assign(n_, 0);
    reason_.assign(n_, -1);
    activity_.assign(n_, 0.0);
    phase_.assign(n_, 0);
    seen_.assign(n_, 0);
    watches_.assign(2 * n_, {});
    heap_.grow(n_);

    if (options_.seed != 0) {
      // tiny deterministic perturbation so distinct seeds explore differently
      uint64_t state = options_.seed;
      for (int v = 0; v < n_; v++) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        activity_[v] = (double)(state >> 40) * 1e-12;
      }
    }
    for (int v = 0; v < n_; v++) heap_.insert(v);

    if (formula_.hasContradiction) return SolveStatus::Unsat;
    for (const auto& clause : formula_.clauses) {
      if (!addClause(clause, false)) return SolveStatus::Unsat;
    }
    if (propagate() >= 0) return SolveStatus::Unsat;

    deadline_ = options_.timeLimitSeconds > 0.0
                    ? std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(options_.timeLimitSeconds))
                    : std::chrono::steady_clock::time_point::max();

    int64_t restarts = 0;
    int64_t conflictsUntilRestart = 100 * luby(restarts);
    maxLearnts_ = std::max<int64_t>(2000, (int64_t)formula_.clauses.size() / 2);
    int64_t nextTimeCheck = 4096;

    while (true) {
      if (stats_.propagations + stats_.decisions >= nextTimeCheck) {
        nextTimeCheck = stats_.propagations + stats_.decisions + 4096;
        if (timedOut()) return SolveStatus::Timeout;
      }
      int confl = propagate();
      if (confl >= 0) {
        stats_.conflicts++;
        if (decisionLevel() == 0) return SolveStatus::Unsat;
        std::vector<int> learnt;
        int backLevel = 0;
        analyze(confl, learnt, backLevel);
        backtrack(backLevel);
        learn(learnt);
        decayActivities();
        if (--conflictsUntilRestart <= 0) {
          restarts++;
          conflictsUntilRestart = 100 * luby(restarts);
          backtrack(0);
        }
        if ((stats_.conflicts & 255) == 0 && timedOut()) return SolveStatus::Timeout;
      } else {
        if ((int64_t)learnts_.size() > maxLearnts_) reduceLearnts();
        int next = pickBranchVar();
        if (next < 0) return SolveStatus::Sat;
        stats_.decisions++;
        trailLim_.push_back((int)trail_.size());
        enqueue(2 * next + (phase_[next] ? 0 : 1), -1);
      }
    }
  }

  int decisionLevel() const { return (int)trailLim_.size(); }

  int valueLit(int lit) const {
    int8_t a = assigns_[varOf(lit)];
    if (a == 0) return 0;
    return ((a > 0) == ((lit & 1) == 0)) ? 1 : -1;
  }

  // Appends a clause to the database; returns false on immediate conflict at level 0.
  bool addClause(const std::vector<int>& dimacsLits, bool learnt) {
    std::vector<int> lits;
    lits.reserve(dimacsLits.size());
    for (int d : dimacsLits) lits.push_back(litOf(d));
    if (!learnt) {
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      for (size_t i = 0; i + 1 < lits.size(); i++)
        if (lits[i] == neg(lits[i + 1])) return true;  // tautology
      // drop literals already false at level 0, stop when satisfied
      std::vector<int> kept;
      for (int lit : lits) {
        int val = valueLit(lit);
        if (val > 0) return true;
        if (val == 0) kept.push_back(lit);
      }
      lits = std::move(kept);
    }
    if (lits.empty()) return false;
    if (lits.size() == 1) return enqueue(lits[0], -1);
    int idx = (int)clauses_.size();
    clauses_.push_back({std::move(lits), 0.0, learnt, false});
    if (learnt) learnts_.push_back(idx);
    watchClause(idx);
    return true;
  }

  void watchClause(int idx) {
    const auto& lits = clauses_[idx].lits;
    watches_[neg(lits[0])].push_back({idx, lits[1]});
    watches_[neg(lits[1])].push_back({idx, lits[0]});
  }

  bool enqueue(int lit, int reasonClause) {
    int v = varOf(lit);
    if (assigns_[v] != 0) return valueLit(lit) > 0;
    assigns_[v] = (lit & 1) ? -1 : 1;
    level_[v] = decisionLevel();
    reason_[v] = reasonClause;
    trail_.push_back(lit);
    return true;
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    while (qhead_ < (int)trail_.size()) {
      int p = trail_[qhead_++];
      stats_.propagations++;
      auto& list = watches_[p];
      size_t keep = 0;
      for (size_t i = 0; i < list.size(); i++) {
        Watch w = list[i];
        if (valueLit(w.blocker) > 0) {
          list[keep++] = w;
          continue;
        }
        Clause& c = clauses_[w.clause];
        auto& lits = c.lits;
        int falseLit = neg(p);
        if (lits[0] == falseLit) std::swap(lits[0], lits[1]);
        if (valueLit(lits[0]) > 0) {
          list[keep++] = {w.clause, lits[0]};
          continue;
        }
        bool moved = false;
        for (size_t j = 2; j < lits.size(); j++) {
          if (valueLit(lits[j]) >= 0) {
            std::swap(lits[1], lits[j]);
            watches_[neg(lits[1])].push_back({w.clause, lits[0]});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        // unit or conflicting
        list[keep++] = {w.clause, lits[0]};
        if (valueLit(lits[0]) < 0) {
          for (size_t j = i + 1; j < list.size(); j++) list[keep++] = list[j];
          list.resize(keep);
          qhead_ = (int)trail_.size();
          return w.clause;
        }
        enqueue(lits[0], w.clause);
      }
      list.resize(keep);
    }
    return -1;
  }

  void bumpVar(int v) {
    activity_[v] += varInc_;
    if (activity_[v] > 1e100) {
      for (int u = 0; u < n_; u++) activity_[u] *= 1e-100;
      varInc_ *= 1e-100;
    }
    heap_.bumped(v);
  }

  void bumpClause(Clause& c) {
    c.activity += clauseInc_;
    if (c.activity > 1e20) {
      for (int idx : learnts_) clauses_[idx].activity *= 1e-20;
      clauseInc_ *= 1e-20;
    }
  }

  void decayActivities() {
    varInc_ /= options_.varDecay;
    clauseInc_ /= 0.999;
  }

  // First-UIP conflict analysis; fills `learnt` (learnt[0] is the asserting
  // literal) and the level to backtrack to.
  void analyze(int conflClause, std::vector<int>& learnt, int& backLevel) {
    learnt.clear();
    learnt.push_back(0);  // placeholder for the asserting literal
    int counter = 0;
    int p = -1;  // trail literal whose reason is being expanded; -1 = conflict clause
    int idx = (int)trail_.size() - 1;
    int clause = conflClause;
    while (true) {
      Clause& c = clauses_[clause];
      if (c.learnt) bumpClause(c);
      for (int q : c.lits) {
        if (q == p) continue;  // the literal this clause propagated
        int v = varOf(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bumpVar(v);
          if (level_[v] >= decisionLevel())
            counter++;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[varOf(trail_[idx])]) idx--;
      p = trail_[idx];
      seen_[varOf(p)] = 0;
      counter--;
      if (counter == 0) break;
      clause = reason_[varOf(p)];
      idx--;
    }
    learnt[0] = neg(p);

    // drop literals whose reason clause lies entirely inside the learnt clause
    std::vector<int> examined;
    for (size_t i = 1; i < learnt.size(); i++) {
      seen_[varOf(learnt[i])] = 1;
      examined.push_back(varOf(learnt[i]));
    }
    size_t keep = 1;
    for (size_t i = 1; i < learnt.size(); i++) {
      int v = varOf(learnt[i]);
      if (reason_[v] < 0 || !redundant(learnt[i])) learnt[keep++] = learnt[i];
    }
    learnt.resize(keep);
    for (int v : examined) seen_[v] = 0;

    backLevel = 0;
    if (learnt.size() > 1) {
      size_t maxI = 1;
      for (size_t i = 2; i < learnt.size(); i++)
        if (level_[varOf(learnt[i])] > level_[varOf(learnt[maxI])]) maxI = i;
      std::swap(learnt[1], learnt[maxI]);
      backLevel = level_[varOf(learnt[1])];
    }
  }

  // A literal is redundant if its reason clause only contains seen literals.
  bool redundant(int lit) {
    int r = reason_[varOf(lit)];
    if (r < 0) return false;
    for (int q : clauses_[r].lits) {
      int v = varOf(q);
      if (v == varOf(lit)) continue;
      if (level_[v] > 0 && !seen_[v]) return false;
    }
    return true;
  }

  void backtrack(int toLevel) {
    if (decisionLevel() <= toLevel) return;
    int bound = trailLim_[toLevel];
    for (int i = (int)trail_.size() - 1; i >= bound; i--) {
      int v = varOf(trail_[i]);
      phase_[v] = assigns_[v] > 0;
      assigns_[v] = 0;
      reason_[v] = -1;
      heap_.insert(v);
    }
    trail_.resize(bound);
    trailLim_.resize(toLevel);
    qhead_ = bound;
  }

  void learn(const std::vector<int>& learnt) {
    if (learnt.size() == 1) {
      enqueue(learnt[0], -1);
      return;
    }
    int idx = (int)clauses_.size();
    clauses_.push_back({learnt, clauseInc_, true, false});
    learnts_.push_back(idx);
    watchClause(idx);
    enqueue(learnt[0], idx);
  }

  void reduceLearnts() {
    std::vector<char> locked(clauses_.size(), 0);
    for (int v = 0; v < n_; v++)
      if (assigns_[v] != 0 && reason_[v] >= 0) locked[reason_[v]] = 1;
    std::vector<int> candidates;
    for (int idx : learnts_)
      if (!locked[idx] && clauses_[idx].lits.size() > 2) candidates.push_back(idx);
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      if (clauses_[a].activity != clauses_[b].activity)
        return clauses_[a].activity < clauses_[b].activity;
      return a < b;
    });
    size_t dropCount = candidates.size() / 2;
    for (size_t i = 0; i < dropCount; i++) clauses_[candidates[i]].deleted = true;
    learnts_.erase(std::remove_if(learnts_.begin(), learnts_.end(),
                                  [&](int idx) { return clauses_[idx].deleted; }),
                   learnts_.end());
    for (auto& list : watches_) {
      list.erase(std::remove_if(list.begin(), list.end(),
                                [&](const Watch& w) { return clauses_[w.clause].deleted; }),
                 list.end());
    }
    for (auto& c : clauses_)
      if (c.deleted) c.lits.clear();
    maxLearnts_ = (int64_t)((double)maxLearnts_ * 1.3);
  }

  int pickBranchVar() {
    while (!heap_.empty()) {
      int v = heap_.pop();
      if (assigns_[v] == 0) return v;
    }
    return -1;
  }

  bool timedOut() const { return std::chrono::steady_clock::now() >= deadline_; }

  const CnfFormula& formula_;
  SolverOptions options_;
  int n_ = 0;
  std::vector<Clause> clauses_;
  std::vector<int> learnts_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::vector<int> trailLim_;
  int qhead_ = 0;
  std::vector<double> activity_;
  std::vector<uint8_t> phase_;
  std::vector<uint8_t> seen_;
  VarHeap heap_;
  double varInc_ = 1.0;
  double clauseInc_ = 1.0;
  int64_t maxLearnts_ = 0;
  SolverStats stats_;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

SolveResult solveInternal(const CnfFormula& formula, const SolverOptions& options) {
  Cdcl solver(formula, options);
  return solver.run();
}

}  // namespace gridsat
