#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace oracle {

Rat orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool between(const Point2& a, const Point2& b, const Point2& r) {
  if (orient(a, b, r) != 0) return false;
  Rat t1 = (r.x - a.x) * (b.x - a.x) + (r.y - a.y) * (b.y - a.y);
  Rat len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return t1 > 0 && t1 < len;
}

namespace {

struct D {
  double x, y;
};

D approx(const Point2& p) { return {p.x.get_d(), p.y.get_d()}; }

// Orientation in doubles is certainly nonzero when it clears this bound,
// which is far above the rounding error for coordinates of magnitude m.
bool surely_not_collinear(D a, D b, D c) {
  double o = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  double m = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y), std::abs(c.x), std::abs(c.y), 1.0});
  return std::abs(o) > 1e-9 * m * m;
}

}  // namespace

int darkness(const GuardSet& guards, const Point2& p) {
  std::vector<D> g;
  for (const Point2& q : guards.points()) g.push_back(approx(q));
  const D pd = approx(p);
  int dark = 0;
  for (std::size_t i = 0; i < guards.size(); ++i) {
    if (guards[i] == p) continue;
    for (std::size_t r = 0; r < guards.size(); ++r)
      if (r != i && !surely_not_collinear(g[i], pd, g[r]) && between(guards[i], p, guards[r])) {
        ++dark;
        break;
      }
  }
  return dark;
}

bool in_closed_polygon(const std::vector<Point2>& poly, const Point2& p) {
  const std::size_t n = poly.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    Rat o = orient(a, b, p);
    if (o == 0) {
      bool in_x = (a.x <= p.x && p.x <= b.x) || (b.x <= p.x && p.x <= a.x);
      bool in_y = (a.y <= p.y && p.y <= b.y) || (b.y <= p.y && p.y <= a.y);
      if (in_x && in_y) return true;
    }
    if (a.y <= p.y) {
      if (b.y > p.y && o > 0) ++winding;
    } else if (b.y <= p.y && o < 0) {
      --winding;
    }
  }
  return winding != 0;
}

bool segment_sampled_inside(const std::vector<Point2>& poly, const Point2& a, const Point2& b, int steps) {
  for (int s = 0; s <= steps; ++s) {
    Rat t(s, steps);
    t.canonicalize();
    Point2 q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (!in_closed_polygon(poly, q)) return false;
  }
  return true;
}

bool has_collinear_triple(const GuardSet& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k)
        if (orient(g[i], g[j], g[k]) == 0) return true;
  return false;
}

bool has_concurrent_dark_rays(const GuardSet& g) {
  struct Ray {
    Point2 o;
    Point2 d;  // as a vector
    std::size_t root;
  };
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) rays.push_back({g[i], {g[i].x - g[j].x, g[i].y - g[j].y}, i});
  // Collect every crossing point with the set of rays through it.
  std::map<std::pair<Rat, Rat>, std::set<std::size_t>> hits;
  for (std::size_t a = 0; a < rays.size(); ++a)
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      const Ray& r = rays[a];
      const Ray& s = rays[b];
      Rat den = r.d.x * s.d.y - r.d.y * s.d.x;
      if (den == 0) continue;
      Rat wx = s.o.x - r.o.x, wy = s.o.y - r.o.y;
      Rat t = (wx * s.d.y - wy * s.d.x) / den;
      Rat u = (wx * r.d.y - wy * r.d.x) / den;
      if (t <= 0 || u <= 0) continue;
      auto& set = hits[{r.o.x + t * r.d.x, r.o.y + t * r.d.y}];
      set.insert(a);
      set.insert(b);
    }
  for (const auto& [pt, set] : hits)
    if (set.size() >= 3) return true;
  return false;
}

using namespace darkgallery;

std::vector<Point2> candidate_points(const ConvexRegion& region, const GuardSet& g) {
  auto hs = halfplanes(region);
  std::vector<Point2> cand(g.points().begin(), g.points().end());
  struct L {
    Point2 a, b;
  };
  std::vector<L> lines;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) lines.push_back({g[i], g[j]});
  for (const L& l : lines) {
    Vec2 d = l.b - l.a;
    std::vector<Rat> ts;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (orient(l.a, l.b, g[k]) == 0) ts.push_back(dot(g[k] - l.a, d) / dot(d, d));
    for (const L& m : lines) {
      auto hit = line_intersection({l.a, l.b}, {m.a, m.b});
      if (auto* p = std::get_if<Point2>(&hit)) ts.push_back(dot(*p - l.a, d) / dot(d, d));
    }
    ParamInterval clip = clip_line(hs, l.a, d);
    Rat lo = clip.lo ? *clip.lo : *std::min_element(ts.begin(), ts.end()) - 1;
    Rat hi = clip.hi ? *clip.hi : *std::max_element(ts.begin(), ts.end()) + 1;
    ts.push_back(lo);
    ts.push_back(hi);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (ts[k] >= lo && ts[k] <= hi) cand.push_back(l.a + ts[k] * d);
      if (k + 1 < ts.size() && ts[k] >= lo && ts[k + 1] <= hi) cand.push_back(l.a + ((ts[k] + ts[k + 1]) / 2) * d);
    }
  }
  std::vector<Point2> inside;
  for (const Point2& p : cand)
    if (contains(region, p)) inside.push_back(p);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return inside;
}

int max_darkness(const ConvexRegion& region, const GuardSet& g) {
  int best = 0;
  for (const Point2& p : candidate_points(region, g)) best = std::max(best, darkness(g, p));
  return best;
}


}  // namespace oracle
