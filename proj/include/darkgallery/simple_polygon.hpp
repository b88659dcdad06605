#pragma once

#include "darkgallery/geometry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace darkgallery {

class SimplePolygon {
public:
  // Counterclockwise, simple, no repeated vertices and no vertex with a
  // straight angle. Throws InvalidInput.
  explicit SimplePolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::ptrdiff_t i) const;
  bool is_reflex(std::size_t i) const;

private:
  std::vector<Point2> vertices_;
};

enum class Location { Inside, Boundary, Outside };

Location locate(const SimplePolygon& poly, const Point2& p);
inline bool covers(const SimplePolygon& poly, const Point2& p) { return locate(poly, p) != Location::Outside; }

// Closed segment ab lies in the closed polygon. Grazing a vertex or running
// along an edge is allowed.
bool segment_inside(const SimplePolygon& poly, const Point2& a, const Point2& b);

// Largest t with origin + [0, t] dir inside the closed polygon; origin must be
// covered. Returns 0 when the ray leaves immediately.
Rat ray_exit(const SimplePolygon& poly, const Point2& origin, const Vec2& dir);

struct Triangulation {
  std::vector<std::array<std::size_t, 3>> triangles;  // ccw, in ear-clipping order
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
};

Triangulation triangulate(const SimplePolygon& poly);
// Colors 1..3, proper on every triangle.
std::vector<int> three_color(const SimplePolygon& poly, const Triangulation& tri);

}  // namespace darkgallery
