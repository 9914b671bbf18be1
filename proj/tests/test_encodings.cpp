#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "corpus.h"
#include "encodings.h"
#include "oracles.h"
#include "solver.h"
#include "verify.h"

using namespace gridsat;
using namespace gridsat::testing;

namespace {

SolveResult solve(const Encoding& enc) {
  return solveInternal(enc.builder.formula());
}

bool isSat(const Encoding& enc) {
  SolveResult r = solve(enc);
  REQUIRE(r.status != SolveStatus::Timeout);
  return r.status == SolveStatus::Sat;
}

std::set<std::string> tagSet(const Encoding& enc) {
  const auto& prov = enc.builder.formula().provenance;
  return std::set<std::string>(prov.begin(), prov.end());
}

}  // namespace

TEST_CASE("pathwidth anchors") {
  Graph k4 = makeComplete(4);
  CHECK_FALSE(isSat(encodePathwidth(k4, 2)));
  Encoding enc = encodePathwidth(k4, 3);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  Layout1D intervals = decodePathwidth(enc, r.assignment);
  CHECK(verifyPathwidth(k4, intervals, 3));
  CHECK_FALSE(verifyPathwidth(k4, intervals, 2).ok);

  CHECK(isSat(encodePathwidth(makePath(5), 1)));
  CHECK_FALSE(isSat(encodePathwidth(makePath(5), 0)));
  CHECK(isSat(encodePathwidth(makeCycle(5), 2)));
  CHECK_FALSE(isSat(encodePathwidth(makeCycle(5), 1)));
}

TEST_CASE("pathwidth handles trivial graphs") {
  Graph single(1, {});
  Encoding enc = encodePathwidth(single, 0);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  Layout1D intervals = decodePathwidth(enc, r.assignment);
  CHECK(intervals == Layout1D{{1, 1}});
  CHECK(verifyPathwidth(single, intervals, 0));
  CHECK_THROWS_AS(encodePathwidth(single, -1), std::invalid_argument);
  CHECK_THROWS_AS(encodePathwidth(Graph(0, {}), 0), std::invalid_argument);
}

TEST_CASE("bandwidth anchors") {
  Graph p6 = makePath(6);
  Encoding enc = encodeBandwidth(p6, 1);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  Positions positions = decodeBandwidth(enc, r.assignment);
  CHECK(verifyBandwidth(p6, positions, 1));

  CHECK_FALSE(isSat(encodeBandwidth(makeComplete(5), 3)));
  CHECK(isSat(encodeBandwidth(makeComplete(5), 4)));
  CHECK_FALSE(isSat(encodeBandwidth(makeCycle(6), 1)));
  CHECK(isSat(encodeBandwidth(makeCycle(6), 2)));
  CHECK_FALSE(isSat(encodeBandwidth(makePath(2), 0)));
  CHECK(isSat(encodeBandwidth(Graph(3, {}), 0)));  // no edges: any bijection works
}

TEST_CASE("orientation anchors") {
  Graph k3 = makeComplete(3);
  CHECK_FALSE(isSat(encodeStOrientation(k3, 0, 1, 2)));
  Encoding enc = encodeStOrientation(k3, 0, 1, 3);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  StOrientation o = decodeStOrientation(k3, enc, r.assignment);
  CHECK(verifyStOrientation(k3, o, 0, 1, 3));

  Graph k4 = makeComplete(4);
  CHECK_FALSE(isSat(encodeStOrientation(k4, 0, 1, 3)));
  CHECK(isSat(encodeStOrientation(k4, 0, 1, 4)));
  CHECK(isSat(encodeStOrientation(makePath(2), 0, 1, 2)));

  CHECK_THROWS_AS(encodeStOrientation(k3, 0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(encodeStOrientation(makePath(3), 0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(encodeStOrientation(k3, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("orientation minimum matches the exhaustive oracle") {
  for (const Graph& g : {makeComplete(4), makeCycle(5), makeCycle(6)}) {
    int s = g.edges[0].first, t = g.edges[0].second;
    auto expected = oracleStLevels(g, s, t);
    REQUIRE(expected.has_value());
    int found = -1;
    for (int k = 2; k <= g.n && found < 0; k++)
      if (isSat(encodeStOrientation(g, s, t, k))) found = k;
    CAPTURE(g.name);
    CHECK(found == *expected);
  }
}

TEST_CASE("bar visibility anchors") {
  Graph p2 = makePath(2);
  Encoding enc = encodeBarVisibility(p2, 2, 1);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  Layout2D layout = decodeLayout2d(enc, r.assignment);
  CHECK(layout.vertexBars.size() == 2);
  CHECK(layout.edgeBars.size() == 1);
  CHECK(verifyBarVisibility(p2, layout, 0));

  Graph p3 = makePath(3);
  Encoding stacked = encodeBarVisibility(p3, 3, 1);
  SolveResult rs = solve(stacked);
  REQUIRE(rs.status == SolveStatus::Sat);
  CHECK(verifyBarVisibility(p3, decodeLayout2d(stacked, rs.assignment), 0));

  Graph k4 = makeComplete(4);
  Encoding wide = encodeBarVisibility(k4, 4, 6);
  SolveResult rw = solve(wide);
  REQUIRE(rw.status == SolveStatus::Sat);
  CHECK(verifyBarVisibility(k4, decodeLayout2d(wide, rw.assignment), 0));

  CHECK_THROWS_AS(encodeBarVisibility(p2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(encodeBarKVisibility(p2, 2, 1, -1), std::invalid_argument);
}

TEST_CASE("five bars cannot see each other pairwise without crossings") {
  // 5x5 keeps the refutation fast; the acceptance binary proves the wider 5x6 grid
  Graph k5 = makeComplete(5);
  CHECK_FALSE(isSat(encodeBarVisibility(k5, 5, 5)));
}

TEST_CASE("one crossing is enough for five mutually visible bars") {
  Graph k5 = makeComplete(5);
  Encoding enc = encodeBarKVisibility(k5, 5, 6, 1);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  Layout2D layout = decodeLayout2d(enc, r.assignment);
  CHECK(verifyBarVisibility(k5, layout, 1));
}

TEST_CASE("unpinned edge bars still verify after trimming") {
  Graph k4 = makeComplete(4);
  EncodeOptions opts;
  opts.pinEdgeEndpoints = false;
  Encoding enc = encodeBarVisibility(k4, 4, 6, opts);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(verifyBarVisibility(k4, decodeLayout2d(enc, r.assignment), 0));

  Graph k5 = makeComplete(5);
  Encoding budget = encodeBarKVisibility(k5, 5, 6, 1, opts);
  SolveResult rb = solve(budget);
  REQUIRE(rb.status == SolveStatus::Sat);
  CHECK(verifyBarVisibility(k5, decodeLayout2d(budget, rb.assignment), 1));
}

TEST_CASE("boxicity anchors") {
  Graph k3 = makeComplete(3);
  Encoding enc = encodeBoxicity(k3, 1, 3);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  BoxLayout layout = decodeBoxicity(enc, r.assignment);
  CHECK(verifyBoxicity(k3, layout));

  Graph c4 = makeCycle(4);
  CHECK_FALSE(isSat(encodeBoxicity(c4, 1, 4)));  // not an interval graph
  Encoding plane = encodeBoxicity(c4, 2, 4);
  SolveResult rp = solve(plane);
  REQUIRE(rp.status == SolveStatus::Sat);
  CHECK(verifyBoxicity(c4, decodeBoxicity(plane, rp.assignment)));

  CHECK(oracleBoxicityFeasible(c4, 2, 4));
  CHECK_FALSE(oracleBoxicityFeasible(c4, 1, 4));

  CHECK_THROWS_AS(encodeBoxicity(k3, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(encodeBoxicity(k3, 1, 0), std::invalid_argument);
}

TEST_CASE("pathwidth sweeps match the subset oracle across corpus graphs") {
  int tested = 0;
  for (const Graph& g : corpus()) {
    if (tested >= 25) break;
    if (g.m() == 0) continue;
    tested++;
    CAPTURE(g.name);
    int opt = oraclePathwidth(g);
    Encoding sat = encodePathwidth(g, opt);
    SolveResult r = solve(sat);
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(verifyPathwidth(g, decodePathwidth(sat, r.assignment), opt));
    CHECK_FALSE(isSat(encodePathwidth(g, opt - 1)));
  }
  CHECK(tested == 25);
}

TEST_CASE("bandwidth sweeps match the permutation oracle across corpus graphs") {
  int tested = 0;
  for (const Graph& g : corpus()) {
    if (tested >= 25) break;
    if (g.m() == 0) continue;
    tested++;
    CAPTURE(g.name);
    int opt = oracleBandwidth(g);
    Encoding sat = encodeBandwidth(g, opt);
    SolveResult r = solve(sat);
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(verifyBandwidth(g, decodeBandwidth(sat, r.assignment), opt));
    CHECK_FALSE(isSat(encodeBandwidth(g, opt - 1)));
  }
  CHECK(tested == 25);
}

TEST_CASE("planar boxicity agrees with the placement oracle on small graphs") {
  int tested = 0;
  for (const Graph& g : corpus()) {
    if (tested >= 12) break;
    if (g.n > 4) continue;
    tested++;
    CAPTURE(g.name);
    CHECK(isSat(encodeBoxicity(g, 1, g.n)) == oracleBoxicityFeasible(g, 1, g.n));
    bool plane = isSat(encodeBoxicity(g, 2, 4));
    CHECK(plane == oracleBoxicityFeasible(g, 2, 4));
  }
  CHECK(tested == 12);
}

TEST_CASE("feasibility is monotone in the parameter") {
  Graph k4 = makeComplete(4);
  for (int p = 3; p <= 5; p++) CHECK(isSat(encodePathwidth(k4, p)));
  Graph c6 = makeCycle(6);
  for (int k = 2; k <= 5; k++) CHECK(isSat(encodeBandwidth(c6, k)));
  Graph p4 = makePath(4);
  for (int cols = 1; cols <= 3; cols++) CHECK(isSat(encodeBarVisibility(p4, 4, cols)));
}

TEST_CASE("sequential counters leave feasibility unchanged") {
  EncodeOptions opts;
  opts.sequentialCounters = true;
  Graph k4 = makeComplete(4);
  CHECK_FALSE(isSat(encodePathwidth(k4, 2, opts)));
  Encoding enc = encodePathwidth(k4, 3, opts);
  SolveResult r = solve(enc);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(verifyPathwidth(k4, decodePathwidth(enc, r.assignment), 3));

  Graph c5 = makeCycle(5);
  CHECK_FALSE(isSat(encodeBandwidth(c5, 1, opts)));
  CHECK(isSat(encodeBandwidth(c5, 2, opts)));
}

TEST_CASE("encodings fill in their metadata") {
  Graph k4 = makeComplete(4);
  Encoding pw = encodePathwidth(k4, 3);
  CHECK(pw.problem == "pathwidth");
  CHECK(pw.p == 3);
  CHECK(pw.grid.sizes == std::vector<int>{4});
  CHECK(pw.vertexBoxes.size() == 4);
  CHECK(pw.edgePointVars.size() == 6);
  CHECK(pw.vars() > 0);
  CHECK(pw.clauses() > 0);

  Encoding bw = encodeBandwidth(k4, 2);
  CHECK(bw.problem == "bandwidth");
  CHECK(bw.k == 2);
  CHECK(bw.vertexBoxes.size() == 4);

  Encoding st = encodeStOrientation(k4, 0, 1, 4);
  CHECK(st.problem == "st-orientation");
  CHECK(st.s == 0);
  CHECK(st.t == 1);
  CHECK(st.k == 4);
  CHECK(st.edgeBoxes.size() == 6);

  Encoding bars = encodeBarVisibility(k4, 4, 6);
  CHECK(bars.problem == "bar-visibility");
  CHECK(bars.rows == 4);
  CHECK(bars.cols == 6);
  CHECK(bars.grid.sizes == std::vector<int>{4, 6});
  CHECK(bars.contactVars.size() == 6);
  CHECK(bars.k == 0);

  Encoding barK = encodeBarKVisibility(k4, 4, 6, 2);
  CHECK(barK.problem == "bar-k-visibility");
  CHECK(barK.k == 2);
  CHECK(barK.crossingVars.size() == 6);

  Encoding box = encodeBoxicity(k4, 2, 4);
  CHECK(box.problem == "boxicity");
  CHECK(box.d == 2);
  CHECK(box.side == 4);
  CHECK(box.grid.sizes == std::vector<int>{4, 4});
}

TEST_CASE("encoding twice yields the identical formula") {
  Graph c5 = makeCycle(5);
  Encoding a = encodePathwidth(c5, 2);
  Encoding b = encodePathwidth(c5, 2);
  CHECK(a.vars() == b.vars());
  CHECK(a.builder.formula().clauses == b.builder.formula().clauses);
}

TEST_CASE("constraint tags name every clause family") {
  EncodeOptions opts;
  opts.trackProvenance = true;
  Graph k4 = makeComplete(4);

  // p = 2 keeps the capacity bound below n so its clauses actually appear
  auto pwTags = tagSet(encodePathwidth(k4, 2, opts));
  for (const char* tag : {"box-nonempty", "box-begin-once", "box-end-once", "box-start",
                          "box-stop", "edge-covered", "edge-inside-endpoints", "point-capacity"})
    CHECK(pwTags.count(tag) == 1);

  auto bwTags = tagSet(encodeBandwidth(k4, 2, opts));
  for (const char* tag : {"vertex-placed", "point-exclusive", "neighbor-within-k"})
    CHECK(bwTags.count(tag) == 1);

  auto stTags = tagSet(encodeStOrientation(k4, 0, 1, 4, opts));
  for (const char* tag : {"vertex-leveled", "vertex-single-level", "edge-spans-two-levels",
                          "edge-starts-at-endpoint", "edge-stops-at-endpoint", "edge-out-at-level",
                          "edge-in-at-level"})
    CHECK(stTags.count(tag) == 1);

  auto barTags = tagSet(encodeBarVisibility(k4, 4, 6, opts));
  for (const char* tag : {"vertex-bars-disjoint", "edge-avoids-other-bars", "contact-inside-edge",
                          "contact-inside-vertex", "contact-at-edge-end", "edge-touches-endpoint",
                          "box-unit-extent"})
    CHECK(barTags.count(tag) == 1);
  CHECK(barTags.count("crossing-flagged") == 0);  // plain mode forbids crossings outright

  auto barKTags = tagSet(encodeBarKVisibility(k4, 4, 6, 1, opts));
  for (const char* tag : {"crossing-flagged", "edge-crossing-budget", "edges-meet-at-ends"})
    CHECK(barKTags.count(tag) == 1);
  CHECK(barKTags.count("edge-avoids-other-bars") == 0);

  // the cycle has non-adjacent pairs, so the disjointness clauses appear too
  auto boxTags = tagSet(encodeBoxicity(makeCycle(4), 2, 4, opts));
  for (const char* tag : {"adjacent-boxes-meet", "meeting-inside-endpoints",
                          "non-adjacent-boxes-disjoint"})
    CHECK(boxTags.count(tag) == 1);
}

TEST_CASE("tiny clause guards abort oversized encodings") {
  EncodeOptions opts;
  opts.clauseGuard = 3;
  CHECK_THROWS_AS(encodePathwidth(makeComplete(5), 1, opts), CapacityError);
}
