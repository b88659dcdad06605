#include "darkgallery/darkness.hpp"
#include "darkgallery/errors.hpp"
#include "darkgallery/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace darkgallery;

namespace {

Point2 P(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

TEST_CASE("guard set rejects co-located guards") {
  CHECK_THROWS_AS(GuardSet({P(0, 0), P(1, 1), P(0, 0)}), InvalidInput);
  GuardSet g({P(0, 0)});
  CHECK_THROWS_AS(g.add(P(0, 0)), InvalidInput);
  CHECK(g.find(P(0, 0)) == std::optional<std::size_t>(0));
  CHECK_FALSE(g.find(P(1, 0)).has_value());
}

TEST_CASE("darkness along three collinear guards") {
  GuardSet g({P(0, 0), P(1, 0), P(2, 0)});
  CHECK(darkness_at(g, P(3, 0)).darkness == 2);
  CHECK(darkness_at(g, P(-1, 0)).darkness == 2);
  CHECK(darkness_at(g, {frac(1, 2), Rat(0)}).darkness == 1);
  CHECK(darkness_at(g, P(1, 0)).darkness == 0);  // a guard sees itself, neighbours see it
  CHECK(darkness_at(g, P(0, 0)).darkness == 1);  // (2,0) is hidden behind (1,0)
  CHECK(darkness_at(g, P(1, 1)).darkness == 0);

  auto w = darkness_at(g, P(5, 0));
  REQUIRE(w.contributing_lines.size() == 1);
  CHECK(w.contributing_lines[0].line.size() == 3);
  CHECK(w.contributing_lines[0].blocked_count == 2);
}

TEST_CASE("two guard lines through one point add up") {
  GuardSet g({P(-2, 0), P(-1, 0), P(0, -2), P(0, -1)});
  auto w = darkness_at(g, P(0, 0));
  CHECK(w.darkness == 2);
  CHECK(w.contributing_lines.size() == 2);
}

TEST_CASE("darkness matches the betweenness oracle") {
  gen::Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    std::vector<Point2> pts;
    std::set<Point2> seen;
    // Small grid coordinates make collinear triples common.
    while (pts.size() < 7) {
      Point2 p{Rat(rng.uniform(-3, 3)), Rat(rng.uniform(-3, 3))};
      if (seen.insert(p).second) pts.push_back(p);
    }
    GuardSet g(pts);
    for (int s = 0; s < 40; ++s) {
      Point2 q;
      if (s % 2 == 0) {
        q = {rng.rat(-5, 5, 2), rng.rat(-5, 5, 2)};
      } else {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, 6)), j = (i + 1) % 7;
        q = lerp(g[i], g[j], rng.rat(-3, 3, 4));
      }
      CHECK(darkness_at(g, q).darkness == oracle::darkness(g, q));
    }
  }
}

TEST_CASE("collinear groups and their portions") {
  GuardSet g({P(2, 2), P(0, 0), P(1, 1), P(5, 0)});
  auto lines = collinear_groups(g);
  // One 3-guard line plus the three pair lines through (5,0).
  CHECK(lines.size() == 4);
  auto it = std::find_if(lines.begin(), lines.end(), [](const GuardLine& l) { return l.size() == 3; });
  REQUIRE(it != lines.end());
  CHECK(it->anchor == P(0, 0));
  CHECK(it->at(1) == P(2, 2));
  CHECK(it->params.front() == 0);
  CHECK(it->params.back() == 1);
  auto portions = dark_portions(*it);
  REQUIRE(portions.size() == 4);
  CHECK(portions[0].blocked_count == 2);
  CHECK(portions[1].blocked_count == 1);
  CHECK(portions[2].blocked_count == 1);
  CHECK(portions[3].blocked_count == 2);
  CHECK_FALSE(portions[0].lo.has_value());
  CHECK_FALSE(portions[3].hi.has_value());
}

TEST_CASE("exact maximum darkness equals the enumerated oracle") {
  gen::Rng rng(202);
  for (int t = 0; t < 40; ++t) {
    ConvexPolygon poly = gen::convex_polygon(rng, static_cast<int>(rng.uniform(3, 6)));
    GuardSet g = gen::interior_guards(rng, poly, static_cast<std::size_t>(rng.uniform(2, 7)));
    // Force some collinearity now and then.
    if (t % 3 == 0) {
      Point2 extra = lerp(g[0], g[1], frac(1, 3));
      if (!g.find(extra)) g.add(extra);
    }
    DarknessWitness w = max_darkness(poly, g);
    int expected = oracle::max_darkness(poly, g);
    CHECK(w.darkness == expected);
    CHECK(oracle::darkness(g, w.point) == w.darkness);
    CHECK(contains(ConvexRegion(poly), w.point));
    DepthCertificate c = min_depth(poly, g);
    CHECK(c.min_depth == static_cast<int>(g.size()) - expected);
    for (int j = 1; j <= 4; ++j) CHECK(has_j_dark(poly, g, j).found == (expected >= j));
  }
}

TEST_CASE("maximum darkness in a wedge") {
  gen::Rng rng(303);
  for (int t = 0; t < 25; ++t) {
    Wedge w = gen::wedge(rng);
    GuardSet g;
    while (g.size() < 5) {
      Point2 p = gen::wedge_point(rng, w);
      if (!g.find(p)) g.add(p);
    }
    CHECK(max_darkness(w, g).darkness == oracle::max_darkness(w, g));
  }
}

TEST_CASE("witness is the smallest point of maximum darkness and stable") {
  ConvexPolygon sq({P(0, 0), P(10, 0), P(10, 10), P(0, 10)});
  GuardSet g({P(2, 2), P(4, 4), P(2, 8), P(4, 6)});
  DarknessWitness a = max_darkness(sq, g);
  DarknessWitness b = max_darkness(sq, g);
  CHECK(a.point == b.point);
  CHECK(a.darkness == 2);  // the two diagonals cross at (5,5), past both pairs
  CHECK(a.point == P(5, 5));
}

TEST_CASE("guards outside the region are rejected") {
  ConvexPolygon tri({P(0, 0), P(4, 0), P(0, 4)});
  CHECK_THROWS_AS(max_darkness(tri, GuardSet({P(5, 5)})), InvalidInput);
  CHECK_THROWS_AS(darkness_at(ConvexRegion(tri), GuardSet({P(1, 1)}), P(9, 9)), InvalidInput);
  CHECK_THROWS_AS(has_j_dark(tri, GuardSet({P(1, 1)}), 0), InvalidInput);
}

TEST_CASE("vertex guards plus one edge guard leave only 1-dark points") {
  ConvexPolygon tri({P(0, 0), P(4, 0), P(0, 4)});
  GuardSet g({P(0, 0), P(4, 0), P(0, 4), P(2, 0)});
  DepthCertificate c = min_depth(tri, g);
  CHECK(c.max_darkness == 1);
  CHECK(c.min_depth == 3);
  // The only dark points are on the edge either side of the edge guard.
  CHECK(c.witness.point.y == 0);
  CHECK(darkness_at(g, {Rat(1), Rat(1, 100)}).darkness == 0);

  // Fifth guard on the segment from the opposite vertex to the edge guard.
  GuardSet five({P(0, 0), P(4, 0), P(0, 4), P(2, 0), P(1, 2)});
  DepthCertificate c5 = min_depth(tri, five);
  CHECK(c5.max_darkness == 1);
  CHECK(c5.min_depth == 4);
}

TEST_CASE("small triangle cases") {
  ConvexPolygon tri({P(0, 0), P(6, 0), P(0, 6)});
  GuardSet vertices({P(0, 0), P(6, 0), P(0, 6)});
  CHECK(max_darkness(tri, vertices).darkness == 0);
  CHECK(darkness_at(vertices, P(2, 2)).darkness == 0);
  GuardSet centroid = vertices;
  centroid.add(P(2, 2));
  CHECK(max_darkness(tri, centroid).darkness == 1);
  GuardSet generic = vertices;
  generic.add(P(1, 3));
  CHECK_FALSE(has_j_dark(tri, generic, 2).found);
  CHECK(darkness_at(GuardSet({P(0, 0), P(1, 0)}), P(2, 0)).darkness == 1);
}

TEST_CASE("collinear groups partition the guard pairs") {
  for (const std::string name : {"square", "triangle", "wedge"}) {
    GuardSet g = fixtures::placement(name).guards;
    auto lines = collinear_groups(g);
    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& l : lines) {
      for (std::size_t a = 0; a < l.members.size(); ++a)
        for (std::size_t b = a + 1; b < l.members.size(); ++b)
          ++seen[{std::min(l.members[a], l.members[b]), std::max(l.members[a], l.members[b])}];
      // Maximal: no outside guard is on the line.
      for (std::size_t k = 0; k < g.size(); ++k)
        if (std::find(l.members.begin(), l.members.end(), k) == l.members.end())
          CHECK(oracle::orient(g[l.members[0]], g[l.members[1]], g[k]) != 0);
    }
    CHECK(seen.size() == g.size() * (g.size() - 1) / 2);
    for (const auto& [pair, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("certificates ignore guard order and affine changes of frame") {
  gen::Rng rng(505);
  for (int t = 0; t < 15; ++t) {
    ConvexPolygon poly = gen::convex_polygon(rng, static_cast<int>(rng.uniform(3, 6)));
    GuardSet g = gen::interior_guards(rng, poly, 6);
    g.add(lerp(g[0], g[1], frac(1, 2)));
    DepthCertificate base = min_depth(poly, g);

    std::vector<Point2> pts(g.points().begin(), g.points().end());
    std::shuffle(pts.begin(), pts.end(), rng.engine());
    DepthCertificate shuffled = min_depth(poly, GuardSet(pts));
    CHECK(shuffled.min_depth == base.min_depth);
    CHECK(shuffled.witness.point == base.witness.point);

    AffineMap m{rng.rat(-3, 3, 2), rng.rat(-3, 3, 2), Rat(rng.uniform(-9, 9)),
                rng.rat(-3, 3, 2), rng.rat(-3, 3, 2), Rat(rng.uniform(-9, 9))};
    if (sgn(m.det()) == 0) continue;
    DepthCertificate moved =
        min_depth(transform(m, poly), GuardSet(transform(m, std::span<const Point2>(g.points()))));
    CHECK(moved.min_depth == base.min_depth);
    CHECK(moved.max_darkness == base.max_darkness);
  }
}

TEST_CASE("empty and single guard sets") {
  ConvexPolygon tri({P(0, 0), P(4, 0), P(0, 4)});
  CHECK_THROWS_AS(min_depth(tri, GuardSet{}), InvalidInput);
  CHECK(min_depth(tri, GuardSet({P(1, 1)})).min_depth == 1);
  CHECK_FALSE(has_j_dark(tri, GuardSet({P(1, 1)}), 1).found);
}

TEST_CASE("boundary census on vertex guards") {
  ConvexPolygon sq({P(0, 0), P(4, 0), P(4, 4), P(0, 4)});
  BoundaryCensus c = boundary_census(sq, GuardSet({P(0, 0), P(4, 0), P(4, 4), P(0, 4)}));
  CHECK(c.shrunken);
  CHECK(c.two_dark_free);
  CHECK(c.applicable);
  CHECK(c.darkened_vertices == 0);
  CHECK(c.boundary_guards == 4);
  CHECK(c.equation_holds);

  // One interior guard per edge; each vertex lies on the dark ray through
  // the guards of its two edges only if they line up, which they do not here.
  GuardSet mids({P(1, 0), P(4, 1), P(3, 4), P(0, 3)});
  BoundaryCensus m = boundary_census(sq, mids);
  CHECK(m.shrunken);
  CHECK(m.boundary_guards == 4);

  // Vertex guards plus a guard inside every other edge darken every vertex.
  BoundaryCensus half = boundary_census(sq, GuardSet({P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 0), P(2, 4)}));
  CHECK(half.boundary_guards == 6);
  CHECK(half.darkened_vertices == 4);
  CHECK(half.applicable);
  CHECK(half.equation_holds);
  CHECK(m.darkened_vertices == 0);
  CHECK(m.equation_holds);

  // Triangle: both ends of one edge guarded, one guard inside each other edge.
  ConvexPolygon tri({P(0, 0), P(6, 0), P(0, 6)});
  BoundaryCensus t = boundary_census(tri, GuardSet({P(0, 0), P(6, 0), P(3, 3), P(0, 2)}));
  CHECK(t.shrunken);
  CHECK(t.boundary_guards == 4);
  // (0,6) lies beyond (0,2) from (0,0) and beyond (3,3) from (6,0): darkened
  // once, but 2-dark, so the count does not apply.
  CHECK(t.darkened_vertices == 1);
  CHECK_FALSE(t.two_dark_free);
  CHECK_FALSE(t.applicable);
  CHECK_FALSE(t.equation_holds);

  BoundaryCensus bad = boundary_census(sq, GuardSet({P(0, 0), P(4, 0)}));
  CHECK_FALSE(bad.shrunken);
  CHECK_FALSE(bad.applicable);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("stored placements") {
  for (const auto& name : fixtures::placement_names()) {
    auto f = fixtures::placement(name);
    DepthCertificate c = min_depth(f.region, f.guards);
    bool table = name.find("table") != std::string::npos;
    INFO(name);
    if (table) {
      CHECK(c.max_darkness == 2);
    } else {
      CHECK(c.max_darkness <= 1);
      CHECK(c.min_depth == static_cast<int>(f.guards.size()) - 1);
    }
  }
}

TEST_CASE("thread count does not change the answer") {
  gen::Rng rng(404);
  ConvexPolygon poly = gen::convex_polygon(rng, 5);
  GuardSet g = gen::interior_guards(rng, poly, 9);
  setenv("DARKGALLERY_THREADS", "1", 1);
  DarknessWitness one = max_darkness(poly, g);
  setenv("DARKGALLERY_THREADS", "4", 1);
  DarknessWitness four = max_darkness(poly, g);
  unsetenv("DARKGALLERY_THREADS");
  CHECK(one.point == four.point);
  CHECK(one.darkness == four.darkness);
}

TEST_CASE("huge coordinates and nearly parallel guard lines") {
  // Far from the origin, with guard lines that meet at tiny angles: the
  // crossing scan must still match the enumerated oracle.
  const Rat big = Rat("1000000000000");
  gen::Rng rng(515);
  for (int t = 0; t < 12; ++t) {
    ConvexPolygon base = gen::convex_polygon(rng, 4);
    std::vector<Point2> vs;
    for (const Point2& v : base.vertices()) vs.push_back({big + v.x, big * 3 + v.y / 7});
    ConvexPolygon poly(vs);
    std::vector<Point2> pts;
    Point2 c = gen::interior_point(rng, poly);
    for (int i = 0; i < 6; ++i) {
      // Points almost on one line through c.
      Rat s = frac(i + 1, 50);
      pts.push_back({c.x + s, c.y + s * frac(1, 3) + Rat(i * i) / Rat("100000000000")});
    }
    pts.push_back(gen::interior_point(rng, poly));
    GuardSet g(pts);
    bool all_in = true;
    for (const Point2& p : g.points()) all_in = all_in && contains(ConvexRegion(poly), p);
    if (!all_in) continue;
    CHECK(max_darkness(poly, g).darkness == oracle::max_darkness(poly, g));
  }
}
