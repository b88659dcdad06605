#include "darkgallery/verify_simple.hpp"

#include "darkgallery/errors.hpp"
#include "darkgallery/parallel.hpp"
#include "kernel.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace darkgallery {

bool visible(const SimplePolygon& poly, const GuardSet& guards, std::size_t q, const Point2& p) {
  const Point2& g = guards[q];
  if (g == p) return true;
  for (std::size_t r = 0; r < guards.size(); ++r)
    if (r != q && strictly_between(g, p, guards[r])) return false;
  return segment_inside(poly, g, p);
}

int depth_at(const SimplePolygon& poly, const GuardSet& guards, const Point2& p) {
  // Only the nearest guard in each direction from p can see it.
  std::map<std::pair<BigInt, BigInt>, std::pair<std::size_t, Rat>> nearest;
  int depth = 0;
  for (std::size_t i = 0; i < guards.size(); ++i) {
    if (guards[i] == p) {
      ++depth;
      continue;
    }
    Vec2 d = guards[i] - p;
    Rat len = dot(d, d);
    auto key = kernel::primitive(d);
    auto it = nearest.find(key);
    if (it == nearest.end())
      nearest.emplace(std::move(key), std::make_pair(i, len));
    else if (len < it->second.second)
      it->second = {i, len};
  }
  for (const auto& [key, best] : nearest)
    if (segment_inside(poly, guards[best.first], p)) ++depth;
  return depth;
}

std::vector<DarkSegment> dark_segments(const SimplePolygon& poly, const GuardSet& guards) {
  std::vector<DarkSegment> out;
  for (std::size_t q = 0; q < guards.size(); ++q)
    for (std::size_t r = 0; r < guards.size(); ++r) {
      if (q == r || !visible(poly, guards, r, guards[q])) continue;
      Vec2 d = guards[q] - guards[r];
      Rat t = ray_exit(poly, guards[q], d);
      if (sgn(t) <= 0) continue;
      out.push_back({q, r, guards[q], guards[q] + t * d});
    }
  return out;
}

Sampler Sampler::grid(int resolution) {
  Sampler s;
  s.kind = Kind::Grid;
  s.resolution = resolution;
  return s;
}

Sampler Sampler::random(std::uint64_t seed, std::size_t count) {
  Sampler s;
  s.kind = Kind::Random;
  s.seed = seed;
  s.count = count;
  return s;
}

Sampler Sampler::explicit_points(std::vector<Point2> points) {
  Sampler s;
  s.kind = Kind::Explicit;
  s.points = std::move(points);
  return s;
}

namespace {

struct Box {
  Rat x0, y0, x1, y1;
};

Box bounds(std::span<const Point2> pts) {
  Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point2& p : pts) {
    if (p.x < b.x0) b.x0 = p.x;
    if (p.x > b.x1) b.x1 = p.x;
    if (p.y < b.y0) b.y0 = p.y;
    if (p.y > b.y1) b.y1 = p.y;
  }
  return b;
}

// Every dark ray, walls ignored, cut where it leaves the box. Rays that
// start outside the box or miss it are dropped.
std::vector<DarkSegment> box_rays(const GuardSet& guards, const Box& box) {
  std::vector<DarkSegment> out;
  for (std::size_t i = 0; i < guards.size(); ++i)
    for (std::size_t j = 0; j < guards.size(); ++j) {
      if (i == j) continue;
      const Point2& o = guards[i];
      Vec2 d = o - guards[j];
      std::optional<Rat> t_exit;
      auto limit = [&](const Rat& lo, const Rat& hi, const Rat& org, const Rat& dir) {
        if (sgn(dir) == 0) return;
        Rat t = ((sgn(dir) > 0 ? hi : lo) - org) / dir;
        if (!t_exit || t < *t_exit) t_exit = t;
      };
      limit(box.x0, box.x1, o.x, d.x);
      limit(box.y0, box.y1, o.y, d.y);
      if (!t_exit || sgn(*t_exit) <= 0) continue;
      out.push_back({i, j, o, o + *t_exit * d});
    }
  return out;
}

void add_crossings(const SimplePolygon& poly, const std::vector<DarkSegment>& segs, std::vector<Point2>& out) {
  std::vector<Box> boxes;
  for (const auto& s : segs) {
    Point2 ends[2] = {s.root_point, s.end};
    boxes.push_back(bounds(ends));
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0) continue;
      Vec2 d1 = segs[i].end - segs[i].root_point;
      Vec2 d2 = segs[j].end - segs[j].root_point;
      Rat den = cross(d1, d2);
      if (sgn(den) == 0) continue;
      Vec2 w = segs[j].root_point - segs[i].root_point;
      Rat t = cross(w, d2) / den;
      Rat u = cross(w, d1) / den;
      if (sgn(t) <= 0 || t > 1 || sgn(u) <= 0 || u > 1) continue;
      Point2 p = segs[i].root_point + t * d1;
      if (covers(poly, p)) out.push_back(std::move(p));
    }
}

}  // namespace

std::vector<Point2> sample_points(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler) {
  std::vector<Point2> pts(poly.vertices());
  pts.insert(pts.end(), guards.points().begin(), guards.points().end());
  Box box = bounds(poly.vertices());
  switch (sampler.kind) {
    case Sampler::Kind::Grid: {
      if (sampler.resolution < 1) throw InvalidInput("grid resolution must be positive");
      Rat sx = (box.x1 - box.x0) / sampler.resolution, sy = (box.y1 - box.y0) / sampler.resolution;
      for (int i = 0; i <= sampler.resolution; ++i)
        for (int j = 0; j <= sampler.resolution; ++j) {
          Point2 p{box.x0 + i * sx, box.y0 + j * sy};
          if (covers(poly, p)) pts.push_back(std::move(p));
        }
      break;
    }
    case Sampler::Kind::Random: {
      std::mt19937_64 rng(sampler.seed);
      const Rat scale = Rat(1) / Rat(BigInt(1) << 20);
      std::size_t accepted = 0;
      for (std::size_t tries = 0; accepted < sampler.count && tries < 100 * sampler.count + 100; ++tries) {
        Rat u(static_cast<unsigned long>(rng() >> 44)), v(static_cast<unsigned long>(rng() >> 44));
        Point2 p{box.x0 + (box.x1 - box.x0) * u * scale, box.y0 + (box.y1 - box.y0) * v * scale};
        if (!covers(poly, p)) continue;
        pts.push_back(std::move(p));
        ++accepted;
      }
      break;
    }
    case Sampler::Kind::Explicit:
      break;
  }
  for (const Point2& p : sampler.points) {
    if (!covers(poly, p)) throw InvalidInput("explicit sample outside the polygon");
    pts.push_back(p);
  }
  // Crossings of dark rays, walls ignored, that land in P.
  if (sampler.dark_ray_points) add_crossings(poly, box_rays(guards, box), pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

SampleReport sample_depth(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler,
                          std::optional<int> target) {
  for (const Point2& g : guards.points())
    if (!covers(poly, g)) throw InvalidInput("guard outside the polygon");
  std::vector<Point2> pts = sample_points(poly, guards, sampler);
  std::vector<int> depth(pts.size(), 0);
  run_workers(thread_count(), [&](unsigned w, unsigned count) {
    for (std::size_t i = w; i < pts.size(); i += count) depth[i] = depth_at(poly, guards, pts[i]);
  });
  SampleReport report;
  report.min_sampled_depth = static_cast<int>(guards.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    report.min_sampled_depth = std::min(report.min_sampled_depth, depth[i]);
    if (target && depth[i] < *target) report.failing_samples.push_back(pts[i]);
    report.samples.push_back({std::move(pts[i]), depth[i]});
  }
  return report;
}

}  // namespace darkgallery
