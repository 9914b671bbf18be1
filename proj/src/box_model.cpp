#include "box_model.h"

#include <algorithm>
#include <limits>

namespace gridsat {

long long GridDims::points() const {
  long long total = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("grid: dimension size must be >= 1");
    total *= s;
    if (total > std::numeric_limits<int>::max())
      throw std::invalid_argument("grid: too many points");
  }
  return total;
}

int GridDims::stride(int k) const {
  int s = 1;
  for (int j = k + 1; j < dim(); j++) s *= sizes[j];
  return s;
}

int GridDims::flatIndex(const std::vector<int>& coords) const {
  int flat = 0;
  for (int k = 0; k < dim(); k++) flat += (coords[k] - 1) * stride(k);
  return flat;
}

std::vector<int> GridDims::coords(int flat) const {
  std::vector<int> c(dim());
  for (int k = dim() - 1; k >= 0; k--) {
    c[k] = flat % sizes[k] + 1;
    flat /= sizes[k];
  }
  return c;
}

int GridDims::coordOf(int flat, int k) const {
  return flat / stride(k) % sizes[k] + 1;
}

bool GridBox::contains(const std::vector<int>& p) const {
  for (int k = 0; k < dim(); k++)
    if (p[k] < lo[k] || p[k] > hi[k]) return false;
  return true;
}

bool GridBox::intersects(const GridBox& other) const {
  for (int k = 0; k < dim(); k++)
    if (std::max(lo[k], other.lo[k]) > std::min(hi[k], other.hi[k])) return false;
  return true;
}

long long GridBox::volume() const {
  long long total = 1;
  for (int k = 0; k < dim(); k++) total *= hi[k] - lo[k] + 1;
  return total;
}

std::vector<int> allocPointVars(CnfBuilder& b, const GridDims& dims, int object) {
  int total = (int)dims.points();
  std::vector<int> vars(total);
  for (int i = 0; i < total; i++)
    vars[i] = b.addVar({VarFamily::Point, object, -1, -1, i});
  return vars;
}

BoxVarSet allocBoxVars(CnfBuilder& b, const GridDims& dims, int object) {
  BoxVarSet box;
  box.object = object;
  box.dims = dims;
  box.pointVars = allocPointVars(b, dims, object);
  box.beginVars.resize(dims.dim());
  box.endVars.resize(dims.dim());
  for (int k = 0; k < dims.dim(); k++) {
    box.beginVars[k].resize(dims.sizes[k]);
    box.endVars[k].resize(dims.sizes[k]);
    for (int i = 0; i < dims.sizes[k]; i++)
      box.beginVars[k][i] = b.addVar({VarFamily::Begin, object, -1, (int16_t)k, i + 1});
    for (int i = 0; i < dims.sizes[k]; i++)
      box.endVars[k][i] = b.addVar({VarFamily::End, object, -1, (int16_t)k, i + 1});
  }
  return box;
}

void addBoxConstraints(CnfBuilder& b, const BoxVarSet& box) {
  const GridDims& dims = box.dims;
  b.addClause(std::vector<int>(box.pointVars.begin(), box.pointVars.end()), "box-nonempty");
  for (int k = 0; k < dims.dim(); k++) {
    b.addExactly(box.beginVars[k], 1, "box-begin-once");
    b.addExactly(box.endVars[k], 1, "box-end-once");
  }
  int total = (int)box.pointVars.size();
  for (int i = 0; i < total; i++) {
    for (int k = 0; k < dims.dim(); k++) {
      int c = dims.coordOf(i, k);
      // membership starts at the begin indicator or continues from the neighbor below
      std::vector<int> start = {-box.pointVars[i], box.beginVars[k][c - 1]};
      if (c > 1) start.push_back(box.pointVars[i - dims.stride(k)]);
      b.addClause(std::move(start), "box-start");
      // membership stops at the end indicator or continues to the neighbor above
      std::vector<int> stop = {-box.pointVars[i], box.endVars[k][c - 1]};
      if (c < dims.sizes[k]) stop.push_back(box.pointVars[i + dims.stride(k)]);
      b.addClause(std::move(stop), "box-stop");
    }
  }
}

BoxVarSet encodeBox(CnfBuilder& b, const GridDims& dims, int object) {
  BoxVarSet box = allocBoxVars(b, dims, object);
  addBoxConstraints(b, box);
  return box;
}

void addUnitExtent(CnfBuilder& b, const BoxVarSet& box, int k) {
  for (int i = 0; i < box.dims.sizes[k]; i++) {
    b.addClause({-box.beginVars[k][i], box.endVars[k][i]}, "box-unit-extent");
    b.addClause({box.beginVars[k][i], -box.endVars[k][i]}, "box-unit-extent");
  }
}

GridBox decodeBox(const BoxVarSet& box, const Assignment& a) {
  const GridDims& dims = box.dims;
  GridBox result;
  result.lo.resize(dims.dim());
  result.hi.resize(dims.dim());
  for (int k = 0; k < dims.dim(); k++) {
    int begin = -1, end = -1;
    for (int i = 0; i < dims.sizes[k]; i++) {
      if (a[box.beginVars[k][i]]) {
        if (begin >= 0) throw EncodingError("decode: two begin indicators set in dimension " +
                                            std::to_string(k));
        begin = i + 1;
      }
      if (a[box.endVars[k][i]]) {
        if (end >= 0)
          throw EncodingError("decode: two end indicators set in dimension " + std::to_string(k));
        end = i + 1;
      }
    }
    if (begin < 0 || end < 0)
      throw EncodingError("decode: missing begin/end indicator in dimension " + std::to_string(k));
    result.lo[k] = begin;
    result.hi[k] = end;
  }
  int total = (int)box.pointVars.size();
  for (int i = 0; i < total; i++) {
    bool inBox = true;
    for (int k = 0; k < dims.dim(); k++) {
      int c = dims.coordOf(i, k);
      if (c < result.lo[k] || c > result.hi[k]) inBox = false;
    }
    if (inBox != (a[box.pointVars[i]] != 0))
      throw EncodingError("decode: point set of object " + std::to_string(box.object) +
                          " does not match its box");
  }
  return result;
}

std::vector<GridBox> normalizeBoxes(const std::vector<RealBox>& boxes) {
  int n = (int)boxes.size();
  if (n == 0) throw std::invalid_argument("normalize: no boxes");
  int d = (int)boxes[0].size();
  if (d == 0) throw std::invalid_argument("normalize: zero-dimensional boxes");
  for (const auto& box : boxes) {
    if ((int)box.size() != d) throw std::invalid_argument("normalize: mixed dimensions");
    for (const auto& iv : box) {
      bool ok = iv.lo < iv.hi || (iv.lo == iv.hi && iv.loClosed && iv.hiClosed);
      if (!ok) throw std::invalid_argument("normalize: empty interval");
    }
  }

  std::vector<GridBox> result(n);
  for (auto& box : result) {
    box.lo.resize(d);
    box.hi.resize(d);
  }

  // Per dimension: sort all 2n endpoints, breaking coordinate ties so that
  // open right ends come first, then closed left, closed right, open left.
  // Walking the order, a group closes right after each right endpoint; each
  // interval maps to the groups of its two endpoints.
  struct Event {
    double value;
    int rank;
    int box;
    bool isLeft;
  };
  for (int k = 0; k < d; k++) {
    std::vector<Event> events;
    events.reserve(2 * n);
    for (int i = 0; i < n; i++) {
      const RealInterval& iv = boxes[i][k];
      events.push_back({iv.lo, iv.loClosed ? 1 : 3, i, true});
      events.push_back({iv.hi, iv.hiClosed ? 2 : 0, i, false});
    }
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.value != b.value) return a.value < b.value;
      return a.rank < b.rank;
    });
    int group = 1;
    for (const Event& ev : events) {
      if (ev.isLeft) {
        result[ev.box].lo[k] = group;
      } else {
        result[ev.box].hi[k] = group;
        group++;
      }
    }
  }
  return result;
}

}  // namespace gridsat
