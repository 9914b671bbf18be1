#pragma once

#include <vector>

#include "cnf.h"

namespace gridsat {

/// A d-dimensional grid [1,U_1] x ... x [1,U_d]. Points are addressed by flat
/// row-major index (dimension 0 outermost).
struct GridDims {
  std::vector<int> sizes;

  int dim() const { return (int)sizes.size(); }
  long long points() const;
  int stride(int k) const;
  int flatIndex(const std::vector<int>& coords) const;  // coords are 1-based
  std::vector<int> coords(int flat) const;
  int coordOf(int flat, int k) const;
};

/// Axis-aligned box of grid points, inclusive 1-based bounds.
struct GridBox {
  std::vector<int> lo, hi;

  int dim() const { return (int)lo.size(); }
  bool contains(const std::vector<int>& p) const;
  bool intersects(const GridBox& other) const;
  long long volume() const;
  bool operator==(const GridBox&) const = default;
};

/// The variables describing one object's box: point membership plus, per
/// dimension, begin/end coordinate indicators. Point-only objects leave
/// beginVars/endVars empty.
struct BoxVarSet {
  int object = -1;
  GridDims dims;
  std::vector<int> pointVars;               // by flat point index
  std::vector<std::vector<int>> beginVars;  // [k][coord-1]
  std::vector<std::vector<int>> endVars;    // [k][coord-1]
};

BoxVarSet allocBoxVars(CnfBuilder& b, const GridDims& dims, int object);
std::vector<int> allocPointVars(CnfBuilder& b, const GridDims& dims, int object);

/// Emits the box axioms: non-empty, exactly one begin/end per dimension, and
/// the two propagation rules tying membership to begin/end indicators. Grid
/// boundaries are handled by dropping the out-of-range neighbor literal.
void addBoxConstraints(CnfBuilder& b, const BoxVarSet& box);

BoxVarSet encodeBox(CnfBuilder& b, const GridDims& dims, int object);

/// Forces extent 1 in dimension k: begin and end coincide coordinate-wise.
void addUnitExtent(CnfBuilder& b, const BoxVarSet& box, int k);

/// Reads the box back from a model and checks that the point set matches it
/// exactly; any mismatch means the encoding itself is broken.
GridBox decodeBox(const BoxVarSet& box, const Assignment& a);

/// One real interval with open or closed ends; empty intervals are invalid.
struct RealInterval {
  double lo = 0.0, hi = 0.0;
  bool loClosed = true, hiClosed = true;
};
using RealBox = std::vector<RealInterval>;

/// Maps n real boxes onto the integer grid [1,n]^d, preserving every pairwise
/// intersection and non-intersection. All output boxes are closed.
std::vector<GridBox> normalizeBoxes(const std::vector<RealBox>& boxes);

}  // namespace gridsat
