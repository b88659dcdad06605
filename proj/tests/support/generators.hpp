#pragma once

// Hand-rolled random instances. Everything is rational and reproducible from
// the seed.

#include "darkgallery/darkness.hpp"
#include "darkgallery/simple_polygon.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

using namespace darkgallery;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  // Multiple of 1/den in [lo, hi].
  Rat rat(long lo, long hi, long den);
  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

// Point at parameter s on the circle of radius r: ((1-s^2), 2s) r / (1+s^2).
Point2 circle(const Rat& s, const Rat& r);

// Points on a circle in ccw order, then an orientation-preserving integer
// affine map so the shapes are not all round.
ConvexPolygon convex_polygon(Rng& rng, int n);
// Strictly interior: positive rational weights on the vertices.
Point2 interior_point(Rng& rng, const ConvexPolygon& poly);
GuardSet interior_guards(Rng& rng, const ConvexPolygon& poly, std::size_t count);
// Point strictly inside the wedge.
Point2 wedge_point(Rng& rng, const Wedge& wedge);
Wedge wedge(Rng& rng);

// Star-shaped around the origin with random radii; retried until simple.
SimplePolygon star_polygon(Rng& rng, int n);

// A point on edge v_i v_{i+1}, strictly inside it.
Point2 edge_point(Rng& rng, const ConvexPolygon& poly, std::size_t i);

}  // namespace gen
