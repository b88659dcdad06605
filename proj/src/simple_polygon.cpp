#include "darkgallery/simple_polygon.hpp"

#include "darkgallery/errors.hpp"

#include <algorithm>
#include <list>

namespace darkgallery {

namespace {

bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool boxes_apart(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const Rat& ab_lo_x = a.x < b.x ? a.x : b.x;
  const Rat& ab_hi_x = a.x < b.x ? b.x : a.x;
  const Rat& cd_lo_x = c.x < d.x ? c.x : d.x;
  const Rat& cd_hi_x = c.x < d.x ? d.x : c.x;
  if (ab_hi_x < cd_lo_x || cd_hi_x < ab_lo_x) return true;
  const Rat& ab_lo_y = a.y < b.y ? a.y : b.y;
  const Rat& ab_hi_y = a.y < b.y ? b.y : a.y;
  const Rat& cd_lo_y = c.y < d.y ? c.y : d.y;
  const Rat& cd_hi_y = c.y < d.y ? d.y : c.y;
  return ab_hi_y < cd_lo_y || cd_hi_y < ab_lo_y;
}

Rat param_on(const Point2& a, const Point2& b, const Point2& p) {
  Vec2 d = b - a;
  return sgn(d.x) != 0 ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
}

}  // namespace

SimplePolygon::SimplePolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InvalidInput("simple polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (vertices_[i] == vertices_[j]) throw InvalidInput("repeated polygon vertex");
  for (std::size_t i = 0; i < n; ++i)
    if (orientation(vertex(i - 1), vertex(i), vertex(i + 1)) == 0)
      throw InvalidInput("polygon vertex " + std::to_string(i) + " has a straight or folded angle");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_touch(vertex(i), vertex(i + 1), vertex(j), vertex(j + 1)))
        throw InvalidInput("polygon edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  Rat area2 = 0;
  for (std::size_t i = 0; i < n; ++i) area2 += cross(vertex(i) - Point2{}, vertex(i + 1) - Point2{});
  if (sgn(area2) <= 0) throw InvalidInput("polygon is not counterclockwise");
}

const Point2& SimplePolygon::vertex(std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool SimplePolygon::is_reflex(std::size_t i) const {
  auto k = static_cast<std::ptrdiff_t>(i);
  return orientation(vertex(k - 1), vertex(k), vertex(k + 1)) < 0;
}

Location locate(const SimplePolygon& poly, const Point2& p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point2& b = poly.vertex(static_cast<std::ptrdiff_t>(i + 1));
    bool a_above = a.y > p.y, b_above = b.y > p.y;
    if (a_above != b_above) {
      // Edge straddles the horizontal through p (half-open rule).
      int o = orientation(a, b, p);
      if (o == 0) return Location::Boundary;
      if ((o > 0) == b_above) inside = !inside;
    } else if (on_segment(a, b, p)) {
      return Location::Boundary;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

bool segment_inside(const SimplePolygon& poly, const Point2& a, const Point2& b) {
  if (a == b) return covers(poly, a);
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& u = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point2& v = poly.vertex(static_cast<std::ptrdiff_t>(i + 1));
    if (boxes_apart(a, b, u, v)) continue;
    int o1 = orientation(a, b, u), o2 = orientation(a, b, v);
    if (o1 == o2 && o1 != 0) continue;
    int o3 = orientation(u, v, a), o4 = orientation(u, v, b);
    if (o3 == o4 && o3 != 0) continue;
    if (o1 * o2 < 0 && o3 * o4 < 0) return false;  // proper crossing
    if (o1 == 0 && on_segment(a, b, u)) cuts.push_back(param_on(a, b, u));
    if (o2 == 0 && on_segment(a, b, v)) cuts.push_back(param_on(a, b, v));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    if (!covers(poly, lerp(a, b, (cuts[k] + cuts[k + 1]) / 2))) return false;
  return true;
}

Rat ray_exit(const SimplePolygon& poly, const Point2& origin, const Vec2& dir) {
  if (is_zero(dir)) throw InvalidInput("zero direction");
  std::vector<Rat> cuts;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& u = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point2& v = poly.vertex(static_cast<std::ptrdiff_t>(i + 1));
    Vec2 e = v - u;
    Rat den = cross(dir, e);
    if (sgn(den) == 0) {
      if (sgn(cross(u - origin, dir)) != 0) continue;
      Rat dd = dot(dir, dir);
      Rat tu = dot(u - origin, dir) / dd, tv = dot(v - origin, dir) / dd;
      if (sgn(tu) > 0) cuts.push_back(tu);
      if (sgn(tv) > 0) cuts.push_back(tv);
      continue;
    }
    Rat t = cross(u - origin, e) / den;
    Rat s = cross(u - origin, dir) / den;
    if (sgn(t) > 0 && sgn(s) >= 0 && s <= 1) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rat prev(0);
  for (const Rat& t : cuts) {
    if (!covers(poly, origin + ((prev + t) / 2) * dir)) return prev;
    prev = t;
  }
  return prev;
}

Triangulation triangulate(const SimplePolygon& poly) {
  const std::size_t n = poly.size();
  std::vector<std::size_t> ring(n);
  for (std::size_t i = 0; i < n; ++i) ring[i] = i;
  Triangulation out;
  auto P = [&](std::size_t i) -> const Point2& { return poly.vertices()[i]; };

  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      std::size_t a = ring[(k + m - 1) % m], b = ring[k], c = ring[(k + 1) % m];
      if (orientation(P(a), P(b), P(c)) <= 0) continue;
      bool empty = true;
      for (std::size_t r : ring) {
        if (r == a || r == b || r == c) continue;
        if (orientation(P(a), P(b), P(r)) >= 0 && orientation(P(b), P(c), P(r)) >= 0 &&
            orientation(P(c), P(a), P(r)) >= 0) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.triangles.push_back({a, b, c});
      out.diagonals.emplace_back(std::min(a, c), std::max(a, c));
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw InvalidInput("ear clipping found no ear; polygon is not simple");
  }
  out.triangles.push_back({ring[0], ring[1], ring[2]});
  return out;
}

std::vector<int> three_color(const SimplePolygon& poly, const Triangulation& tri) {
  std::vector<int> color(poly.size(), 0);
  if (tri.triangles.empty()) throw InvalidInput("empty triangulation");
  // Walk the ears back in reverse clipping order: each tip is adjacent to the
  // two vertices of a diagonal that are already colored differently.
  const auto& last = tri.triangles.back();
  for (int k = 0; k < 3; ++k) color[last[static_cast<std::size_t>(k)]] = k + 1;
  for (std::size_t t = tri.triangles.size() - 1; t-- > 0;) {
    const auto& ear = tri.triangles[t];
    int ca = color[ear[0]], cc = color[ear[2]];
    if (ca == 0 || cc == 0 || ca == cc) throw std::logic_error("triangulation is not in ear order");
    color[ear[1]] = 6 - ca - cc;
  }
  for (int c : color)
    if (c == 0) throw std::logic_error("uncolored vertex");
  return color;
}

}  // namespace darkgallery
