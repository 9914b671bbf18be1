#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.h"

namespace gridsat {

/// Variable families used by the encoders. Edge objects are numbered n + edgeIndex
/// so vertices and edges share one object space.
enum class VarFamily : uint8_t { Point, Begin, End, Incidence, Crossing, Aux };

struct VarKey {
  VarFamily family = VarFamily::Aux;
  int32_t object = -1;   // vertex id or n + edge index
  int32_t object2 = -1;  // incidence partner vertex
  int16_t dim = -1;      // dimension for Begin/End
  int32_t index = -1;    // flat grid point, 1-based coordinate, or aux counter
  bool operator==(const VarKey&) const = default;
};

std::string toString(const VarKey& key);

struct VarKeyHash {
  size_t operator()(const VarKey& k) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    mix((uint64_t)k.family);
    mix((uint64_t)(uint32_t)k.object);
    mix((uint64_t)(uint32_t)k.object2);
    mix((uint64_t)(uint16_t)k.dim);
    mix((uint64_t)(uint32_t)k.index);
    return (size_t)h;
  }
};

/// Injective map from structured names to 1-based variable ids, with total reverse lookup.
class VarRegistry {
 public:
  int add(const VarKey& key);
  int lookup(const VarKey& key) const;
  const VarKey& name(int var) const;
  int count() const { return (int)names_.size(); }

 private:
  std::unordered_map<VarKey, int, VarKeyHash> ids_;
  std::vector<VarKey> names_;
};

/// Total truth assignment, 1-based by variable id; index 0 is unused.
using Assignment = std::vector<uint8_t>;

struct CnfFormula {
  int numVars = 0;
  std::vector<std::vector<int>> clauses;  // signed 1-based literals
  std::vector<std::string> provenance;    // per-clause tag when tracking is on
  bool hasContradiction = false;          // an explicitly-added empty clause

  long long clauseCount() const { return (long long)clauses.size(); }
  bool satisfied(const Assignment& a) const;
};

#ifndef NDEBUG
inline constexpr bool kDefaultTrackProvenance = true;
#else
inline constexpr bool kDefaultTrackProvenance = false;
#endif

struct BuilderOptions {
  long long clauseGuard = 10'000'000;  // max clauses a single constraint may emit
  bool sequentialCounters = false;     // counter-based cardinality instead of binomial
  bool trackProvenance = kDefaultTrackProvenance;
};

/// min(C(n, k), cap); never overflows.
long long binomial(int n, int k, long long cap = (long long)1 << 62);

class CnfBuilder {
 public:
  explicit CnfBuilder(BuilderOptions options = {});

  int addVar(const VarKey& key);
  int auxVar();
  VarRegistry& registry() { return registry_; }
  const VarRegistry& registry() const { return registry_; }
  CnfFormula& formula() { return formula_; }
  const CnfFormula& formula() const { return formula_; }
  const BuilderOptions& options() const { return options_; }

  void addClause(std::vector<int> lits, const char* tag = nullptr);
  void addContradiction(const char* tag = nullptr);

  /// sum(ys) >= z as a single clause: y1 | ... | yk | ~z.
  void addAtLeastOneIf(int z, std::span<const int> ys, const char* tag = nullptr);
  /// sum(ys) <= c over literals ys.
  void addAtMost(std::span<const int> ys, int c, const char* tag = nullptr);
  /// sum(ys) >= c over literals ys.
  void addAtLeast(std::span<const int> ys, int c, const char* tag = nullptr);
  /// sum(ys) == c over literals ys.
  void addExactly(std::span<const int> ys, int c, const char* tag = nullptr);

 private:
  void addAtMostBinomial(std::span<const int> ys, int c, const char* tag);
  void addAtMostCounter(std::span<const int> ys, int c, const char* tag);
  void checkLits(const std::vector<int>& lits) const;

  VarRegistry registry_;
  CnfFormula formula_;
  BuilderOptions options_;
  int auxCount_ = 0;
};

/// "p cnf <vars> <clauses>" followed by one zero-terminated clause per line.
std::string toDimacs(const CnfFormula& f, bool provenanceComments = false);
CnfFormula parseDimacs(const std::string& text);

}  // namespace gridsat
