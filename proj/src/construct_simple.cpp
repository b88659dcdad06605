#include "darkgallery/construct_simple.hpp"

#include "darkgallery/errors.hpp"
#include "darkgallery/general_position.hpp"

#include <algorithm>

namespace darkgallery {

namespace {

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

Point2 tip(int i) { return {Rat(2 * i) + frac(1, 2), Rat(5)}; }

}  // namespace

Comb make_comb(int s) {
  if (s < 2) throw InvalidInput("comb needs at least 2 spikes");
  std::vector<Point2> v{pt(0, 0), pt(2 * s - 1, 0), tip(s - 1), pt(2 * s - 2, 1)};
  for (int i = s - 2; i >= 1; --i) {
    v.push_back(pt(2 * i + 1, 1));
    v.push_back(tip(i));
    v.push_back(pt(2 * i, 1));
  }
  v.push_back(pt(1, 1));
  v.push_back(tip(0));

  Comb comb{s, SimplePolygon(std::move(v)), {}, {}};
  for (int i = 0; i < s; ++i) {
    // The outer walls run from the floor corners to the end tips; they cross
    // y = 1 a tenth of a unit in from the corners.
    Rat lo = i == 0 ? frac(1, 10) : Rat(2 * i);
    Rat hi = i == s - 1 ? Rat(2 * s - 1) - frac(1, 10) : Rat(2 * i + 1);
    comb.spike_apertures.emplace_back(lo, hi);
    comb.tips.push_back(tip(i));
  }
  return comb;
}

GuardSet comb_cover(const Comb& comb, int k, bool stagger) {
  if (k < 2) throw InvalidInput("comb cover needs k >= 2");
  const int s = comb.spike_count;
  // Curvature 1/(16 s) keeps every dark ray of an arc within 1/16 of its
  // height across the whole corridor, so none of them reach a mouth.
  const Rat curvature = Rat(1) / (16 * s);
  auto arc_point = [&](int i, const Rat& x) {
    Rat c = Rat(2 * i) + frac(1, 2);
    Rat lift = stagger ? Rat(i * i) / (32L * s * s) : Rat(0);
    Rat dx = x - c;
    return Point2{x, frac(1, 2) + lift + curvature * dx * dx};
  };
  auto nominal = [&](int i, int j) -> Rat { return Rat(2 * i) + frac(1, 4) + Rat(j) / (2 * (k - 1)); };
  if (!stagger) {
    std::vector<Point2> pts;
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < k; ++j) pts.push_back(arc_point(i, nominal(i, j)));
    return GuardSet(std::move(pts));
  }
  // Arcs are translates of one parabola, so equal offsets line guards up
  // across arcs. Slide each guard along its own arc, toward the middle, until
  // the arrangement takes it. Steps stay under a quarter of the spacing.
  DarkRayArrangement arr;
  const Rat step = Rat(1) / (256L * s * k * (k - 1));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < k; ++j) {
      const int sign = 2 * j < k - 1 || (2 * j == k - 1) ? 1 : -1;
      bool placed = false;
      for (int m = 0; m < 64 && !placed; ++m) {
        Point2 z = arc_point(i, nominal(i, j) + Rat(sign * m) * step);
        if (arr.admits(z)) {
          arr.add(z);
          placed = true;
        }
      }
      if (!placed) throw Error("comb cover: no offset along the arc keeps general position");
    }
  return arr.guards();
}

FiskPlan fisk_plan(const SimplePolygon& poly) {
  FiskPlan plan;
  plan.triangulation = triangulate(poly);
  plan.coloring = three_color(poly, plan.triangulation);
  int counts[4] = {0, 0, 0, 0};
  for (int c : plan.coloring) ++counts[c];
  plan.chosen_color = 1;
  for (int c = 2; c <= 3; ++c)
    if (counts[c] < counts[plan.chosen_color]) plan.chosen_color = c;

  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (plan.coloring[i] != plan.chosen_color) continue;
    auto k = static_cast<std::ptrdiff_t>(i);
    const Point2& v = poly.vertex(k);
    const Point2& prev = poly.vertex(k - 1);
    const Point2& next = poly.vertex(k + 1);
    Wedge cone = poly.is_reflex(i) ? Wedge(v, v - prev, v - next) : Wedge(v, next - v, prev - v);
    std::vector<Halfplane> kernel = cone.halfplanes();
    for (const auto& t : plan.triangulation.triangles) {
      for (std::size_t r = 0; r < 3; ++r) {
        if (t[r] != i) continue;
        kernel.push_back(Halfplane::left_of(poly.vertices()[t[(r + 1) % 3]], poly.vertices()[t[(r + 2) % 3]]));
      }
    }
    plan.chosen.push_back(i);
    plan.cones.push_back(cone);
    plan.kernels.push_back(std::move(kernel));
  }
  return plan;
}

GuardSet fisk_cover(const SimplePolygon& poly, int k, const Rat& arc_offset) {
  if (k < 1) throw InvalidInput("depth k must be positive");
  if (sgn(arc_offset) <= 0) throw InvalidInput("arc offset must be positive");
  FiskPlan plan = fisk_plan(poly);
  DarkRayArrangement arr;
  for (std::size_t c = 0; c < plan.chosen.size(); ++c) {
    const Wedge& cone = plan.cones[c];
    const auto& kernel = plan.kernels[c];
    Rat lambda = arc_offset;
    Point2 center = cone.apex() + lambda * (cone.dir1() + cone.dir2());
    int halvings = 0;
    while (!contains(kernel, center, Boundary::Open)) {
      if (++halvings > 200) throw Error("fisk cover: empty kernel near a chosen vertex");
      lambda /= 2;
      center = cone.apex() + lambda * (cone.dir1() + cone.dir2());
    }
    Rat radius = inscribed_power_of_two(kernel, center);
    std::size_t placed = 0;
    for (std::size_t index = 0; placed < static_cast<std::size_t>(k + 2); ++index) {
      Point2 z = circle_point(center, radius, index);
      if (!arr.admits(z)) continue;
      arr.add(z);
      ++placed;
    }
  }
  return arr.guards();
}

SimplePolygon fisk_example() {
  return SimplePolygon({pt(0, 0), pt(6, 0), pt(6, 4), pt(4, 4), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)});
}

}  // namespace darkgallery
