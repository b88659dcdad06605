#pragma once

#include "darkgallery/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace darkgallery {

struct Vec2 {
  Rat x, y;
};

struct Point2 {
  Rat x, y;
};

bool operator==(const Point2& a, const Point2& b);
bool operator==(const Vec2& a, const Vec2& b);
// Lexicographic (x, then y). Used for deterministic tie-breaks.
bool operator<(const Point2& a, const Point2& b);

Vec2 operator-(const Point2& a, const Point2& b);
Point2 operator+(const Point2& p, const Vec2& v);
Point2 operator-(const Point2& p, const Vec2& v);
Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& v);
Vec2 operator*(const Rat& s, const Vec2& v);

Rat cross(const Vec2& a, const Vec2& b);
Rat dot(const Vec2& a, const Vec2& b);
bool is_zero(const Vec2& v);

// a + t (b - a)
Point2 lerp(const Point2& a, const Point2& b, const Rat& t);
Point2 midpoint(const Point2& a, const Point2& b);

// Sign of (b-a) x (c-a).
int orientation(const Point2& a, const Point2& b, const Point2& c);

// p strictly between a and b on segment ab.
bool strictly_between(const Point2& a, const Point2& b, const Point2& p);
// p on closed segment ab.
bool on_segment(const Point2& a, const Point2& b, const Point2& p);

struct Line {
  Point2 p, q;
};

struct Parallel {};
struct Coincident {};
using LineIntersection = std::variant<Point2, Parallel, Coincident>;

LineIntersection line_intersection(const Line& l1, const Line& l2);
// Same, but anything other than a unique point is an InvalidInput.
Point2 intersect(const Line& l1, const Line& l2);

// a*x + b*y + c >= 0
struct Halfplane {
  Rat a, b, c;

  // Closed left side of the directed line from -> to.
  static Halfplane left_of(const Point2& from, const Point2& to);
  // Closed side of line(p, q) containing ref; ref must not lie on the line.
  static Halfplane side_of(const Point2& p, const Point2& q, const Point2& ref);

  Rat eval(const Point2& p) const;
  bool contains(const Point2& p) const { return sgn(eval(p)) >= 0; }
  bool contains_strictly(const Point2& p) const { return sgn(eval(p)) > 0; }
};

enum class Boundary { Closed, Open };

class ConvexPolygon {
public:
  // Counterclockwise, strictly convex, no repeats. Throws InvalidInput.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Index taken modulo n, negative allowed.
  const Point2& vertex(std::ptrdiff_t i) const;
  std::vector<Halfplane> halfplanes() const;

private:
  std::vector<Point2> vertices_;
};

class Wedge {
public:
  // Directions may be given in either order; they are stored so that dir1 -> dir2
  // turns counterclockwise through the interior.
  Wedge(Point2 apex, Vec2 dir1, Vec2 dir2);

  const Point2& apex() const { return apex_; }
  const Vec2& dir1() const { return dir1_; }
  const Vec2& dir2() const { return dir2_; }
  std::vector<Halfplane> halfplanes() const;

private:
  Point2 apex_;
  Vec2 dir1_, dir2_;
};

using ConvexRegion = std::variant<ConvexPolygon, Wedge>;

std::vector<Halfplane> halfplanes(const ConvexRegion& region);
bool contains(const ConvexRegion& region, const Point2& p, Boundary mode = Boundary::Closed);
bool contains(std::span<const Halfplane> hs, const Point2& p, Boundary mode = Boundary::Closed);

// Parameter interval of {origin + t*dir}. Missing bound = unbounded.
struct ParamInterval {
  bool empty = false;
  std::optional<Rat> lo, hi;
  bool contains(const Rat& t) const;
};

// Over all real t.
ParamInterval clip_line(std::span<const Halfplane> hs, const Point2& origin, const Vec2& dir);
// Over t >= 0.
ParamInterval clip_ray(const ConvexRegion& region, const Point2& origin, const Vec2& dir);

enum class HalfplaneStatus { Empty, Degenerate, Bounded, Unbounded };

struct HalfplaneIntersection {
  HalfplaneStatus status = HalfplaneStatus::Empty;
  // ccw corners for Bounded; the extreme points for Degenerate.
  std::vector<Point2> vertices;
};

HalfplaneIntersection halfplane_intersection(std::span<const Halfplane> hs);
// nullopt when empty or without interior; throws UnboundedRegion if unbounded.
std::optional<ConvexPolygon> bounded_intersection(std::span<const Halfplane> hs);

enum class HullRole { Corner, Collinear, Interior };

struct ConvexHull {
  std::vector<Point2> corners;  // ccw; two points for a segment, one for a point
  std::vector<HullRole> roles;  // parallel to the input
  bool degenerate() const { return corners.size() < 3; }
  // Throws InvalidInput for a degenerate hull.
  ConvexPolygon polygon() const;
};

ConvexHull convex_hull(std::span<const Point2> points);

Point2 vertex_centroid(std::span<const Point2> points);

// x' = a x + b y + c, y' = d x + e y + f
struct AffineMap {
  Rat a{1}, b{0}, c{0}, d{0}, e{1}, f{0};

  Point2 operator()(const Point2& p) const;
  Vec2 linear(const Vec2& v) const;
  Rat det() const { return a * e - b * d; }
};

// The unique map sending src[i] to dst[i]; src must not be collinear.
AffineMap affine_from_points(const Point2 (&src)[3], const Point2 (&dst)[3]);

// Orientation-reversing maps get their vertex order flipped back to ccw.
ConvexPolygon transform(const AffineMap& m, const ConvexPolygon& poly);
Wedge transform(const AffineMap& m, const Wedge& wedge);
ConvexRegion transform(const AffineMap& m, const ConvexRegion& region);
std::vector<Point2> transform(const AffineMap& m, std::span<const Point2> points);

}  // namespace darkgallery
