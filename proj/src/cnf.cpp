#include "cnf.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gridsat {

std::string toString(const VarKey& key) {
  static const char* familyNames[] = {"x", "b", "e", "inc", "y", "aux"};
  std::ostringstream out;
  out << familyNames[(int)key.family] << "(";
  if (key.object >= 0) out << key.object;
  if (key.object2 >= 0) out << "," << key.object2;
  out << ")";
  if (key.dim >= 0) out << "d" << key.dim;
  if (key.index >= 0) out << "@" << key.index;
  return out.str();
}

int VarRegistry::add(const VarKey& key) {
  int id = (int)names_.size() + 1;
  auto [it, inserted] = ids_.insert({key, id});
  if (!inserted) throw std::invalid_argument("registry: duplicate variable " + toString(key));
  names_.push_back(key);
  return id;
}

int VarRegistry::lookup(const VarKey& key) const {
  auto it = ids_.find(key);
  if (it == ids_.end()) throw std::invalid_argument("registry: unknown variable " + toString(key));
  return it->second;
}

const VarKey& VarRegistry::name(int var) const {
  if (var < 1 || var > (int)names_.size())
    throw std::invalid_argument("registry: variable id " + std::to_string(var) + " out of range");
  return names_[var - 1];
}

bool CnfFormula::satisfied(const Assignment& a) const {
  if (hasContradiction) return false;
  for (const auto& clause : clauses) {
    bool ok = false;
    for (int lit : clause) {
      int v = lit > 0 ? lit : -lit;
      if ((lit > 0) == (a[v] != 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

long long binomial(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; i++) {
    result = result * (unsigned)(n - k + i) / (unsigned)i;
    if (result >= (unsigned __int128)cap) return cap;
  }
  return (long long)result;
}

CnfBuilder::CnfBuilder(BuilderOptions options) : options_(options) {
  if (options_.clauseGuard < 1) throw std::invalid_argument("builder: clause guard must be >= 1");
}

int CnfBuilder::addVar(const VarKey& key) {
  int id = registry_.add(key);
  formula_.numVars = registry_.count();
  return id;
}

int CnfBuilder::auxVar() {
  return addVar({VarFamily::Aux, -1, -1, -1, auxCount_++});
}

void CnfBuilder::checkLits(const std::vector<int>& lits) const {
  for (int lit : lits) {
    int v = lit > 0 ? lit : -lit;
    if (lit == 0 || v > formula_.numVars)
      throw std::invalid_argument("clause references unregistered variable " + std::to_string(lit));
  }
}

void CnfBuilder::addClause(std::vector<int> lits, const char* tag) {
  checkLits(lits);
  if (lits.empty()) throw std::invalid_argument("empty clause; use addContradiction");
  formula_.clauses.push_back(std::move(lits));
  if (options_.trackProvenance) formula_.provenance.push_back(tag ? tag : "");
}

void CnfBuilder::addContradiction(const char* tag) {
  formula_.clauses.push_back({});
  if (options_.trackProvenance) formula_.provenance.push_back(tag ? tag : "");
  formula_.hasContradiction = true;
}

void CnfBuilder::addAtLeastOneIf(int z, std::span<const int> ys, const char* tag) {
  if (ys.empty()) throw std::invalid_argument("addAtLeastOneIf: empty sum");
  std::vector<int> lits(ys.begin(), ys.end());
  lits.push_back(-z);
  addClause(std::move(lits), tag);
}

namespace {

// Visits all r-subsets of {0..k-1} in lexicographic order.
template <typename F>
void forEachSubset(int k, int r, F visit) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; i++) idx[i] = i;
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == k - r + i) i--;
    if (i < 0) return;
    idx[i]++;
    for (int j = i + 1; j < r; j++) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void CnfBuilder::addAtMost(std::span<const int> ys, int c, const char* tag) {
  if (c < 0) {
    addContradiction(tag);
    return;
  }
  int k = (int)ys.size();
  if (k <= c) return;
  if (options_.sequentialCounters && c >= 1)
    addAtMostCounter(ys, c, tag);
  else
    addAtMostBinomial(ys, c, tag);
}

void CnfBuilder::addAtMostBinomial(std::span<const int> ys, int c, const char* tag) {
  int k = (int)ys.size();
  long long count = binomial(k, c + 1, options_.clauseGuard + 1);
  if (count > options_.clauseGuard)
    throw CapacityError(std::string("constraint \"") + (tag ? tag : "at-most") + "\" would emit " +
                        std::to_string(count) + "+ clauses (guard " +
                        std::to_string(options_.clauseGuard) + ")");
  forEachSubset(k, c + 1, [&](const std::vector<int>& idx) {
    std::vector<int> lits;
    lits.reserve(idx.size());
    for (int i : idx) lits.push_back(-ys[i]);
    addClause(std::move(lits), tag);
  });
}

// Counter chain: s(i,j) means "at least j of y1..yi are set". Clauses follow the
// standard sequential-counter layout; c >= 1 and k > c hold on entry.
void CnfBuilder::addAtMostCounter(std::span<const int> ys, int c, const char* tag) {
  int k = (int)ys.size();
  std::vector<std::vector<int>> s(k - 1, std::vector<int>(c));
  for (int i = 0; i < k - 1; i++)
    for (int j = 0; j < c; j++) s[i][j] = auxVar();

  addClause({-ys[0], s[0][0]}, tag);
  for (int j = 1; j < c; j++) addClause({-s[0][j]}, tag);
  for (int i = 1; i < k - 1; i++) {
    addClause({-ys[i], s[i][0]}, tag);
    addClause({-s[i - 1][0], s[i][0]}, tag);
    for (int j = 1; j < c; j++) {
      addClause({-ys[i], -s[i - 1][j - 1], s[i][j]}, tag);
      addClause({-s[i - 1][j], s[i][j]}, tag);
    }
    addClause({-ys[i], -s[i - 1][c - 1]}, tag);
  }
  addClause({-ys[k - 1], -s[k - 2][c - 1]}, tag);
}

void CnfBuilder::addAtLeast(std::span<const int> ys, int c, const char* tag) {
  int k = (int)ys.size();
  if (c <= 0) return;
  if (c > k) {
    addContradiction(tag);
    return;
  }
  if (options_.sequentialCounters && c < k) {
    // sum(ys) >= c  <=>  sum(~ys) <= k - c
    std::vector<int> negated(ys.size());
    for (int i = 0; i < k; i++) negated[i] = -ys[i];
    addAtMostCounter(negated, k - c, tag);
    return;
  }
  long long count = binomial(k, k - c + 1, options_.clauseGuard + 1);
  if (count > options_.clauseGuard)
    throw CapacityError(std::string("constraint \"") + (tag ? tag : "at-least") + "\" would emit " +
                        std::to_string(count) + "+ clauses (guard " +
                        std::to_string(options_.clauseGuard) + ")");
  forEachSubset(k, k - c + 1, [&](const std::vector<int>& idx) {
    std::vector<int> lits;
    lits.reserve(idx.size());
    for (int i : idx) lits.push_back(ys[i]);
    addClause(std::move(lits), tag);
  });
}

void CnfBuilder::addExactly(std::span<const int> ys, int c, const char* tag) {
  addAtMost(ys, c, tag);
  addAtLeast(ys, c, tag);
}

std::string toDimacs(const CnfFormula& f, bool provenanceComments) {
  std::ostringstream out;
  out << "p cnf " << f.numVars << " " << f.clauses.size() << "\n";
  for (size_t i = 0; i < f.clauses.size(); i++) {
    if (provenanceComments && i < f.provenance.size() && !f.provenance[i].empty())
      out << "c " << f.provenance[i] << "\n";
    for (int lit : f.clauses[i]) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

CnfFormula parseDimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool sawHeader = false;
  long long declaredClauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ls(line);
      std::string p, fmt;
      long long vars = -1, clauses = -1;
      ls >> p >> fmt >> vars >> clauses;
      if (p != "p" || fmt != "cnf" || vars < 0 || clauses < 0 || ls.fail())
        throw ParseError("dimacs: malformed header \"" + line + "\"");
      if (sawHeader) throw ParseError("dimacs: duplicate header");
      sawHeader = true;
      f.numVars = (int)vars;
      declaredClauses = clauses;
      continue;
    }
    if (!sawHeader) throw ParseError("dimacs: clause before header");
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      long long lit;
      try {
        size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("dimacs: bad literal \"" + token + "\"");
      }
      if (lit == 0) {
        if (current.empty()) f.hasContradiction = true;
        f.clauses.push_back(current);
        current.clear();
        continue;
      }
      long long v = lit > 0 ? lit : -lit;
      if (v > f.numVars)
        throw ParseError("dimacs: literal " + std::to_string(lit) + " out of range");
      current.push_back((int)lit);
    }
  }
  if (!sawHeader) throw ParseError("dimacs: missing header");
  if (!current.empty()) throw ParseError("dimacs: unterminated clause");
  (void)declaredClauses;  // tolerated when it disagrees; readers in the wild do the same
  return f;
}

}  // namespace gridsat
