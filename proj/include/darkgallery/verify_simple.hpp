#pragma once

#include "darkgallery/darkness.hpp"
#include "darkgallery/simple_polygon.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace darkgallery {

// Guard q sees p iff segment qp stays in the closed polygon and no other
// guard sits strictly between them.
bool visible(const SimplePolygon& poly, const GuardSet& guards, std::size_t q, const Point2& p);
int depth_at(const SimplePolygon& poly, const GuardSet& guards, const Point2& p);

// The part of a dark ray that stays inside the polygon: (root, end].
struct DarkSegment {
  std::size_t root = 0, generator = 0;
  Point2 root_point, end;
};

// One segment per ordered pair of mutually visible guards whose ray enters P.
std::vector<DarkSegment> dark_segments(const SimplePolygon& poly, const GuardSet& guards);

struct Sampler {
  enum class Kind { Grid, Random, Explicit };
  Kind kind = Kind::Grid;
  int resolution = 32;        // grid: (resolution+1)^2 points over the bounding box
  std::uint64_t seed = 0;     // random
  std::size_t count = 0;      // random
  std::vector<Point2> points;  // explicit, and extra points for the other kinds
  bool dark_ray_points = true;

  static Sampler grid(int resolution);
  static Sampler random(std::uint64_t seed, std::size_t count);
  static Sampler explicit_points(std::vector<Point2> points);
};

struct DepthSample {
  Point2 point;
  int depth = 0;
};

struct SampleReport {
  std::vector<DepthSample> samples;
  int min_sampled_depth = 0;
  std::vector<Point2> failing_samples;  // depth below the target, if one was given
};

// Sampler points plus every vertex, every guard and every crossing of two
// dark rays that lands in P (walls ignored); sorted and deduplicated.
std::vector<Point2> sample_points(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler);

SampleReport sample_depth(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler,
                          std::optional<int> target = std::nullopt);

}  // namespace darkgallery
